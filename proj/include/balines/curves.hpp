#pragma once

#include <vector>

#include "balines/sequence.hpp"

namespace balines {

/// Every permutation of one period, materialized. Times are taken modulo 2N.
/// Memory is 3 * 2N * n integers, fine for the sizes the certificate
/// machinery runs on.
class Timeline {
 public:
  explicit Timeline(const AllowableSequence& seq);

  const AllowableSequence& sequence() const noexcept { return *seq_; }
  int size() const noexcept { return n_; }
  int half_period() const noexcept { return half_; }
  int period() const noexcept { return 2 * half_; }
  int wrap(int t) const noexcept {
    const int m = t % period();
    return m < 0 ? m + period() : m;
  }

  int position(int t, int id) const { return pos_[index(t, id)]; }
  int element(int t, int pos) const { return perm_[index(t, pos)]; }
  /// Sum of weights at positions < p of pi^t, p in 0..n-1.
  int prefix(int t, int p) const { return prefix_[index(t, p)]; }
  int left_weight(int t, int id) const { return prefix(t, position(t, id)); }
  /// Number of elements of `mask` strictly left of position p in pi^t.
  int count_left(int t, int p, const std::vector<char>& mask) const;

 private:
  std::size_t index(int t, int k) const {
    return static_cast<std::size_t>(wrap(t)) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(k);
  }

  const AllowableSequence* seq_;
  int n_;
  int half_;
  std::vector<int> perm_;
  std::vector<int> pos_;
  std::vector<int> prefix_;
};

/// Selects, at each time, the `rank`-th (1-based, left to right) member of
/// `members`.
struct CurveSpec {
  std::vector<int> members;
  int rank = 1;
};

/// A curve over one period [0, 2N): the element it picks, where that element
/// sits and the weight strictly to its left. Accessors wrap time.
struct WeightTrack {
  int half_period = 0;
  std::vector<int> element;
  std::vector<int> position;
  std::vector<int> weight;

  int period() const noexcept { return 2 * half_period; }
  int wrap(int t) const noexcept {
    const int m = t % period();
    return m < 0 ? m + period() : m;
  }
  int element_at(int t) const { return element[static_cast<std::size_t>(wrap(t))]; }
  int position_at(int t) const { return position[static_cast<std::size_t>(wrap(t))]; }
  int weight_at(int t) const { return weight[static_cast<std::size_t>(wrap(t))]; }
};

std::vector<char> membership_mask(int n, const std::vector<int>& members);

/// Throws BadParams for an empty member set or a rank outside 1..|Q|.
WeightTrack track(const AllowableSequence& seq, const CurveSpec& spec);

/// The curve shifted by a half period: its element at t is the original's
/// element at t - N.
WeightTrack mirror_track(const AllowableSequence& seq, const CurveSpec& spec);

enum class CurveClass { GeDelta, LtDelta, LeDelta, GtDelta, Changing };

const char* to_string(CurveClass c);

/// Blue curves: GeDelta / LtDelta / Changing. Red curves: LeDelta / GtDelta /
/// Changing. Throws MixedColors when the members are not monochromatic.
CurveClass classify(const AllowableSequence& seq, const CurveSpec& spec);

struct TimeWindow {
  int begin = 0;  ///< inclusive
  int end = 0;    ///< exclusive
};

/// Times t in the window with weight_at(t) == from and weight_at(t + 1) == to.
std::vector<int> find_weight_changes(const WeightTrack& trk, int from, int to, TimeWindow window);

/// Times t where the step t -> t+1 breaks strong continuity.
std::vector<int> strong_continuity_violations(const Timeline& tl, const WeightTrack& trk);

/// Outcome of the transposition tau_{t+1} at a weight change of F_k, for a
/// set F of `primary`-colored elements.
enum class ChangeBranch {
  /// F element and an opposite-color element swap; balanced, with exactly
  /// k-1 members of F left of the pair.
  Balanced,
  /// F element swaps with a same-color element outside F.
  OutsideSwap,
  Violation,
};

const char* to_string(ChangeBranch b);

/// `drop` selects delta -> delta-1 (else delta-1 -> delta), with weights and
/// delta read in the polarity of `primary`.
ChangeBranch classify_change(const Timeline& tl, const std::vector<char>& in_set, int k, int t,
                             bool drop, Color primary = Color::Blue);

}  // namespace balines
