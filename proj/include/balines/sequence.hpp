#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "balines/geometry.hpp"

namespace balines {

/// Half-period representation of an allowable sequence.
///
/// `pi0` is the permutation at time 0 (ids listed left to right) and
/// `word[t - 1]` is the left position of the adjacent pair swapped by the
/// t-th transposition, t = 1..N with N = n(n-1)/2. Every other time follows
/// from pi^{t+N} = reverse(pi^t). Construction does not validate; use
/// `validate()`.
class AllowableSequence {
 public:
  AllowableSequence() = default;
  AllowableSequence(std::vector<Color> colors, std::vector<int> pi0, std::vector<int> word);

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  /// N = n(n-1)/2; the period is 2N.
  int half_period() const noexcept { return size() * (size() - 1) / 2; }
  int period() const noexcept { return 2 * half_period(); }

  std::span<const Color> colors() const noexcept { return colors_; }
  Color color(int id) const { return colors_[static_cast<std::size_t>(id)]; }
  int weight(int id) const { return balines::weight(color(id)); }
  std::span<const int> pi0() const noexcept { return pi0_; }
  std::span<const int> word() const noexcept { return word_; }

  int blue_count() const noexcept { return blue_; }
  int red_count() const noexcept { return size() - blue_; }
  int delta() const noexcept { return (blue_count() - red_count()) / 2; }

  /// Left position swapped by tau_t for t in 1..2N (second half mirrored).
  int swap_position(int t) const;

  friend bool operator==(const AllowableSequence&, const AllowableSequence&) = default;

 private:
  std::vector<Color> colors_;
  std::vector<int> pi0_;
  std::vector<int> word_;
  int blue_ = 0;
};

/// One adjacent swap as seen while walking a sequence.
struct Transposition {
  int t = 0;
  int pos = 0;
  int lo_id = 0;  ///< left element before the swap
  int hi_id = 0;  ///< right element before the swap
  int left_weight = 0;
};

/// Walks the sequence forward one transposition at a time, maintaining the
/// permutation, inverse permutation and prefix weights in O(1) per step.
/// Time wraps around the period.
class SequenceWalker {
 public:
  explicit SequenceWalker(const AllowableSequence& seq);

  int time() const noexcept { return t_; }
  std::span<const int> permutation() const noexcept { return perm_; }
  int position(int id) const { return pos_[static_cast<std::size_t>(id)]; }
  int element(int pos) const { return perm_[static_cast<std::size_t>(pos)]; }
  /// Sum of weights at positions < p, for p in 0..n.
  int prefix(int p) const { return prefix_[static_cast<std::size_t>(p)]; }
  int left_weight(int id) const { return prefix(position(id)); }

  /// Applies the next transposition and reports it.
  Transposition advance();

 private:
  const AllowableSequence* seq_;
  int t_ = 0;
  std::vector<int> perm_;
  std::vector<int> pos_;
  std::vector<int> prefix_;
};

/// Permutation at any integer time.
std::vector<int> permutation_at(const AllowableSequence& seq, std::int64_t t);

struct SequenceIssue {
  std::string code;
  std::string detail;
};

struct SequenceReport {
  std::vector<SequenceIssue> issues;
  bool clean() const noexcept { return issues.empty(); }
};

SequenceReport validate(const AllowableSequence& seq);

/// Rotating-direction sweep. Throws DegenerateInput if the instance has a
/// collinear triple, coincident points or parallel spanned lines.
AllowableSequence build_from_points(const Instance& inst);

/// Step-uniform random reduced word for the reversal of 0..n-1. Not uniform
/// over allowable sequences.
AllowableSequence random_sequence(int n, int blue_count, std::uint64_t seed);

/// The sequence read backwards in time: its permutation at t is the
/// original's at -t.
AllowableSequence reverse_sequence(const AllowableSequence& seq);

}  // namespace balines
