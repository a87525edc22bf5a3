#pragma once

#include <string>

#include "balines/balance.hpp"
#include "balines/certificate.hpp"
#include "balines/geometry.hpp"
#include "balines/sequence.hpp"

namespace balines {

/// {"points":[{"id":0,"x":"3/2","y":"-7/3","color":"B"}, ...]}. Coordinates
/// are exact rational strings (integers are accepted as JSON numbers too).
/// Throws InvalidInput on malformed documents.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

/// Text format: n, the color string, pi^0 on one line, then N swap
/// positions one per line.
AllowableSequence sequence_from_text(const std::string& text);
std::string sequence_to_text(const AllowableSequence& seq);

/// {"pairs":[[i,j],...],"count":k,"delta":d} with pairs sorted.
std::string witnesses_to_json(const WitnessSet& set, int delta);

std::string certificate_to_json(const AllowableSequence& seq, const Certificate& cert);

std::string report_to_json(const GeneralPositionReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace balines
