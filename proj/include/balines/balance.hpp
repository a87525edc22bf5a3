#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "balines/geometry.hpp"
#include "balines/sequence.hpp"

namespace balines {

/// Unordered point pair, stored with first < second.
using PairKey = std::pair<int, int>;

inline PairKey make_pair_key(int a, int b) { return a < b ? PairKey{a, b} : PairKey{b, a}; }

enum class WitnessSource { Geometric, Scan };

/// A balanced line, or equivalently a balanced transposition, identified by
/// its bichromatic pair.
struct BalancedWitness {
  int blue_id = 0;
  int red_id = 0;
  WitnessSource source = WitnessSource::Geometric;
  std::optional<int> t;
  int left_weight = 0;

  PairKey key() const { return make_pair_key(blue_id, red_id); }
};

using WitnessSet = std::map<PairKey, BalancedWitness>;

std::vector<PairKey> pair_keys(const WitnessSet& set);

/// Brute force over bichromatic pairs: halfplane weights (delta, delta).
WitnessSet enumerate_balanced_lines(const Instance& inst);

/// One pass over tau_1..tau_N with incrementally maintained prefix weights.
WitnessSet scan_balanced_transpositions(const AllowableSequence& seq);

struct CorrespondenceReport {
  WitnessSet geometric;
  WitnessSet scan;
  bool equal = false;
};

CorrespondenceReport check_correspondence(const Instance& inst);

}  // namespace balines
