#include "balines/curves.hpp"

#include <algorithm>
#include <cstdlib>

#include "balines/error.hpp"

namespace balines {

Timeline::Timeline(const AllowableSequence& seq)
    : seq_(&seq), n_(seq.size()), half_(seq.half_period()) {
  const auto cells = static_cast<std::size_t>(period()) * static_cast<std::size_t>(n_);
  perm_.resize(cells);
  pos_.resize(cells);
  prefix_.resize(cells);
  SequenceWalker walker(seq);
  for (int t = 0; t < period(); ++t) {
    for (int p = 0; p < n_; ++p) {
      perm_[index(t, p)] = walker.element(p);
      pos_[index(t, walker.element(p))] = p;
      prefix_[index(t, p)] = walker.prefix(p);
    }
    walker.advance();
  }
}

int Timeline::count_left(int t, int p, const std::vector<char>& mask) const {
  int count = 0;
  for (int q = 0; q < p; ++q) count += mask[static_cast<std::size_t>(element(t, q))] ? 1 : 0;
  return count;
}

std::vector<char> membership_mask(int n, const std::vector<int>& members) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (int id : members) mask.at(static_cast<std::size_t>(id)) = 1;
  return mask;
}

namespace {

void check_spec(const AllowableSequence& seq, const CurveSpec& spec) {
  if (spec.members.empty() || spec.rank < 1 ||
      spec.rank > static_cast<int>(spec.members.size())) {
    throw Error(ErrorCode::BadParams, "curve rank must lie in 1..|Q| for a nonempty Q");
  }
  for (int id : spec.members) {
    if (id < 0 || id >= seq.size()) throw Error(ErrorCode::BadParams, "curve member out of range");
  }
}

}  // namespace

WeightTrack track(const AllowableSequence& seq, const CurveSpec& spec) {
  check_spec(seq, spec);
  const auto mask = membership_mask(seq.size(), spec.members);
  WeightTrack out;
  out.half_period = seq.half_period();
  const auto period = static_cast<std::size_t>(seq.period());
  out.element.resize(period);
  out.position.resize(period);
  out.weight.resize(period);

  SequenceWalker walker(seq);
  int current = -1;
  for (int p = 0, seen = 0; p < seq.size(); ++p) {
    if (mask[static_cast<std::size_t>(walker.element(p))] && ++seen == spec.rank) {
      current = walker.element(p);
      break;
    }
  }
  for (std::size_t t = 0; t < period; ++t) {
    out.element[t] = current;
    out.position[t] = walker.position(current);
    out.weight[t] = walker.left_weight(current);
    const Transposition tr = walker.advance();
    // Two members trading places hand the rank over; otherwise the tracked
    // element just moves.
    if (tr.lo_id == current && mask[static_cast<std::size_t>(tr.hi_id)]) {
      current = tr.hi_id;
    } else if (tr.hi_id == current && mask[static_cast<std::size_t>(tr.lo_id)]) {
      current = tr.lo_id;
    }
  }
  return out;
}

WeightTrack mirror_track(const AllowableSequence& seq, const CurveSpec& spec) {
  const WeightTrack base = track(seq, spec);
  WeightTrack out;
  out.half_period = base.half_period;
  const auto period = static_cast<std::size_t>(seq.period());
  out.element.resize(period);
  out.position.resize(period);
  out.weight.resize(period);
  SequenceWalker walker(seq);
  for (std::size_t t = 0; t < period; ++t) {
    const int e = base.element_at(static_cast<int>(t) + base.half_period);
    out.element[t] = e;
    out.position[t] = walker.position(e);
    out.weight[t] = walker.left_weight(e);
    walker.advance();
  }
  return out;
}

const char* to_string(CurveClass c) {
  switch (c) {
    case CurveClass::GeDelta: return "GE_delta";
    case CurveClass::LtDelta: return "LT_delta";
    case CurveClass::LeDelta: return "LE_delta";
    case CurveClass::GtDelta: return "GT_delta";
    case CurveClass::Changing: return "Changing";
  }
  return "?";
}

CurveClass classify(const AllowableSequence& seq, const CurveSpec& spec) {
  check_spec(seq, spec);
  const Color color = seq.color(spec.members.front());
  for (int id : spec.members) {
    if (seq.color(id) != color) throw Error(ErrorCode::MixedColors, "curve set is not monochromatic");
  }
  const WeightTrack trk = track(seq, spec);
  const int delta = seq.delta();
  const auto [lo, hi] = std::minmax_element(trk.weight.begin(), trk.weight.end());
  if (color == Color::Blue) {
    if (*lo >= delta) return CurveClass::GeDelta;
    if (*hi < delta) return CurveClass::LtDelta;
  } else {
    if (*hi <= delta) return CurveClass::LeDelta;
    if (*lo > delta) return CurveClass::GtDelta;
  }
  return CurveClass::Changing;
}

std::vector<int> find_weight_changes(const WeightTrack& trk, int from, int to, TimeWindow window) {
  std::vector<int> out;
  for (int t = window.begin; t < window.end; ++t) {
    if (trk.weight_at(t) == from && trk.weight_at(t + 1) == to) out.push_back(t);
  }
  return out;
}

std::vector<int> strong_continuity_violations(const Timeline& tl, const WeightTrack& trk) {
  std::vector<int> out;
  for (int t = 0; t < trk.period(); ++t) {
    const int a = tl.position(t + 1, trk.element_at(t));
    const int b = tl.position(t + 1, trk.element_at(t + 1));
    if (std::abs(trk.weight_at(t + 1) - trk.weight_at(t)) > 1 || std::abs(a - b) > 1) {
      out.push_back(t);
    }
  }
  return out;
}

const char* to_string(ChangeBranch b) {
  switch (b) {
    case ChangeBranch::Balanced: return "balanced";
    case ChangeBranch::OutsideSwap: return "outside_swap";
    case ChangeBranch::Violation: return "violation";
  }
  return "?";
}

ChangeBranch classify_change(const Timeline& tl, const std::vector<char>& in_set, int k, int t,
                             bool drop, Color primary) {
  const AllowableSequence& seq = tl.sequence();
  const int sign = primary == Color::Blue ? 1 : -1;
  const int delta = sign * seq.delta();
  const int p = seq.swap_position(tl.wrap(t) + 1);
  const int lo = tl.element(t, p);
  const int hi = tl.element(t, p + 1);
  const bool lo_in = in_set[static_cast<std::size_t>(lo)] != 0;
  const bool hi_in = in_set[static_cast<std::size_t>(hi)] != 0;
  if (lo_in == hi_in) return ChangeBranch::Violation;

  // A drop moves the F element right past an opposite-color element or left
  // past a same-color one; a rise is the mirror image.
  const int x = lo_in ? hi : lo;
  const bool f_moves_right = lo_in;
  const bool x_primary = seq.color(x) == primary;
  const bool balanced_shape = drop ? (f_moves_right && !x_primary) : (!f_moves_right && !x_primary);
  const bool outside_shape = drop ? (!f_moves_right && x_primary) : (f_moves_right && x_primary);
  if (balanced_shape) {
    if (sign * tl.prefix(t, p) != delta) return ChangeBranch::Violation;
    if (tl.count_left(t, p, in_set) != k - 1) return ChangeBranch::Violation;
    return ChangeBranch::Balanced;
  }
  if (outside_shape) return ChangeBranch::OutsideSwap;
  return ChangeBranch::Violation;
}

}  // namespace balines
