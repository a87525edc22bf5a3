#include "balines/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "balines/certificate.hpp"
#include "balines/detail/rng.hpp"
#include "balines/error.hpp"
#include "balines/generators.hpp"
#include "balines/io.hpp"

namespace balines {

const char* to_string(FuzzMode m) {
  switch (m) {
    case FuzzMode::Points: return "points";
    case FuzzMode::AbstractSeq: return "sequences";
    case FuzzMode::Separated: return "separated";
  }
  return "?";
}

FuzzMode fuzz_mode_from_string(const std::string& name) {
  if (name == "points") return FuzzMode::Points;
  if (name == "sequences") return FuzzMode::AbstractSeq;
  if (name == "separated") return FuzzMode::Separated;
  throw Error(ErrorCode::BadParams, "unknown fuzz mode '" + name + "'");
}

namespace {

struct TrialResult {
  std::optional<FuzzFailure> failure;
  int case_kind = 0;
};

TrialResult run_trial(const FuzzConfig& cfg, int trial) {
  TrialResult result;
  auto rng = detail::make_rng(cfg.seed, static_cast<std::uint64_t>(trial));
  const int lo = std::max(2, cfg.n_min + cfg.n_min % 2);
  const int hi = cfg.n_max - cfg.n_max % 2;
  const int n = lo + 2 * static_cast<int>(rng() % static_cast<std::uint64_t>((hi - lo) / 2 + 1));
  const int blue = n / 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 + 1));
  const std::uint64_t sub_seed = rng();

  std::string repro;
  auto fail = [&](const char* check, std::string message) {
    result.failure = FuzzFailure{trial, check, std::move(message), repro};
  };

  try {
    std::optional<Instance> inst;
    AllowableSequence seq;
    if (cfg.mode == FuzzMode::AbstractSeq) {
      seq = random_sequence(n, blue, sub_seed);
      repro = sequence_to_text(seq);
    } else {
      inst = cfg.mode == FuzzMode::Points ? random_instance(blue, n - blue, cfg.coord_bound, sub_seed)
                                          : separated_instance(n / 2, sub_seed);
      repro = instance_to_json(*inst);
      seq = build_from_points(*inst);
    }

    const WitnessSet scan = cfg.scan_override ? cfg.scan_override(seq) : scan_balanced_transpositions(seq);
    if (inst && (cfg.checks & kCheckCorrespondence) != 0) {
      if (pair_keys(enumerate_balanced_lines(*inst)) != pair_keys(scan)) {
        fail("CORRESPONDENCE", "geometric balanced lines differ from balanced transpositions");
        return result;
      }
    }
    if (cfg.mode == FuzzMode::Separated && static_cast<int>(scan.size()) != n / 2) {
      fail("SEPARATED", "expected exactly " + std::to_string(n / 2) + " balanced lines, found " +
                            std::to_string(scan.size()));
      return result;
    }
    if ((cfg.checks & kCheckLowerBound) != 0 && static_cast<int>(scan.size()) < seq.red_count()) {
      fail("THEOREM", std::to_string(scan.size()) + " balanced transpositions, r = " +
                          std::to_string(seq.red_count()));
      return result;
    }
    if ((cfg.checks & kCheckCertificate) != 0) {
      const Certificate cert = certify(seq);
      result.case_kind = cert.kind == CertificateCase::Case1 ? 1 : 2;
      const VerificationReport report = verify_certificate(seq, cert);
      if (!report.ok) {
        fail("CERTIFICATE", "verifier rejected: " + report.diagnostics.front());
        return result;
      }
      for (const auto& w : cert.witnesses) {
        if (scan.count(w.key()) == 0) {
          fail("CERTIFICATE", "certified pair {" + std::to_string(w.key().first) + "," +
                                  std::to_string(w.key().second) + "} missing from the scan");
          return result;
        }
      }
    }
  } catch (const Error& e) {
    fail("ERROR", e.what());
  }
  return result;
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& config) {
  if (config.trials < 0 || config.n_min < 2 || config.n_max < config.n_min || config.n_max > 64) {
    throw Error(ErrorCode::BadParams, "fuzz needs trials >= 0 and 2 <= n_min <= n_max <= 64");
  }
  std::vector<TrialResult> results(static_cast<std::size_t>(config.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < config.trials; i = next++) results[static_cast<std::size_t>(i)] = run_trial(config, i);
  };
  const int threads = std::clamp(config.threads, 1, 64);
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  FuzzReport report;
  report.trials_run = config.trials;
  for (auto& r : results) {
    if (r.case_kind == 1) ++report.case1;
    if (r.case_kind == 2) ++report.case2;
    if (r.failure) report.failures.push_back(std::move(*r.failure));
  }
  return report;
}

}  // namespace balines
