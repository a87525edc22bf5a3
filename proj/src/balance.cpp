#include "balines/balance.hpp"

namespace balines {

std::vector<PairKey> pair_keys(const WitnessSet& set) {
  std::vector<PairKey> keys;
  keys.reserve(set.size());
  for (const auto& [key, w] : set) keys.push_back(key);
  return keys;
}

WitnessSet enumerate_balanced_lines(const Instance& inst) {
  WitnessSet out;
  const int delta = inst.delta();
  for (int i = 0; i < inst.size(); ++i) {
    for (int j = i + 1; j < inst.size(); ++j) {
      if (inst.color(i) == inst.color(j)) continue;
      const auto w = halfplane_weights(inst, i, j);
      if (w.left != delta || w.right != delta) continue;
      const bool i_blue = inst.color(i) == Color::Blue;
      BalancedWitness bw{i_blue ? i : j, i_blue ? j : i, WitnessSource::Geometric, std::nullopt,
                         w.left};
      out.emplace(bw.key(), bw);
    }
  }
  return out;
}

WitnessSet scan_balanced_transpositions(const AllowableSequence& seq) {
  WitnessSet out;
  SequenceWalker walker(seq);
  const int delta = seq.delta();
  for (int t = 1; t <= seq.half_period(); ++t) {
    const Transposition tr = walker.advance();
    if (seq.color(tr.lo_id) == seq.color(tr.hi_id) || tr.left_weight != delta) continue;
    const bool lo_blue = seq.color(tr.lo_id) == Color::Blue;
    BalancedWitness bw{lo_blue ? tr.lo_id : tr.hi_id, lo_blue ? tr.hi_id : tr.lo_id,
                       WitnessSource::Scan, tr.t, tr.left_weight};
    out.emplace(bw.key(), bw);
  }
  return out;
}

CorrespondenceReport check_correspondence(const Instance& inst) {
  CorrespondenceReport report;
  report.geometric = enumerate_balanced_lines(inst);
  report.scan = scan_balanced_transpositions(build_from_points(inst));
  report.equal = pair_keys(report.geometric) == pair_keys(report.scan);
  return report;
}

}  // namespace balines
