#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "balines/balance.hpp"
#include "balines/sequence.hpp"

namespace balines {

enum class FuzzMode { Points, AbstractSeq, Separated };

const char* to_string(FuzzMode m);
FuzzMode fuzz_mode_from_string(const std::string& name);

enum FuzzCheck : unsigned {
  kCheckCorrespondence = 1u << 0,  ///< geometric lines == balanced transpositions
  kCheckLowerBound = 1u << 1,         ///< at least r balanced transpositions
  kCheckCertificate = 1u << 2,     ///< certify + verify, certified pairs all balanced
  kCheckAll = 7u,
};

struct FuzzConfig {
  int trials = 1000;
  int n_min = 2;
  int n_max = 12;  ///< even; for Separated k ranges over n_min/2..n_max/2
  FuzzMode mode = FuzzMode::Points;
  std::uint64_t seed = 1;
  unsigned checks = kCheckAll;
  int threads = 1;
  std::int64_t coord_bound = 1000;
  /// Replaces the scanner, for testing that the harness catches bad ones.
  std::function<WitnessSet(const AllowableSequence&)> scan_override;
};

struct FuzzFailure {
  int trial = 0;
  std::string check;    ///< CORRESPONDENCE, THEOREM, CERTIFICATE, SEPARATED, ERROR
  std::string message;
  std::string repro;    ///< instance JSON or sequence text
};

struct FuzzReport {
  int trials_run = 0;
  int case1 = 0;
  int case2 = 0;
  std::vector<FuzzFailure> failures;  ///< ordered by trial
  bool ok() const noexcept { return failures.empty(); }
};

/// Results do not depend on the thread count: trial i always draws from the
/// stream (seed, i).
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace balines
