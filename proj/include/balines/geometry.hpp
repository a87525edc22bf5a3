#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "balines/detail/lattice.hpp"

namespace balines {

using Rational = mpq_class;

enum class Color : std::uint8_t { Blue, Red };

constexpr int weight(Color c) noexcept { return c == Color::Blue ? 1 : -1; }
constexpr Color opposite(Color c) noexcept { return c == Color::Blue ? Color::Red : Color::Blue; }
constexpr char to_char(Color c) noexcept { return c == Color::Blue ? 'B' : 'R'; }
Color color_from_char(char c);

/// Parses "p/q" or an integer; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

struct ChromaticPoint {
  int id = 0;
  Rational x;
  Rational y;
  Color color = Color::Blue;
};

/// Sign of (q - p) x (s - p).
int orientation(const ChromaticPoint& p, const ChromaticPoint& q, const ChromaticPoint& s);

/// A bichromatic planar point set with an even number of points.
///
/// Points keep the colors they were given. When the input has more red than
/// blue points the color roles are swapped internally, so `color()`,
/// `weight()`, `blue_count()` always describe the canonical coloring with
/// b >= r.
class Instance {
 public:
  /// Throws InvalidInput for bad ids and OddPointCount for an odd number of points.
  explicit Instance(std::vector<ChromaticPoint> points);

  int size() const noexcept { return static_cast<int>(points_.size()); }
  std::span<const ChromaticPoint> points() const noexcept { return points_; }
  const ChromaticPoint& point(int id) const { return points_.at(static_cast<std::size_t>(id)); }

  int blue_count() const noexcept { return blue_; }
  int red_count() const noexcept { return red_; }
  int delta() const noexcept { return (blue_ - red_) / 2; }
  bool colors_swapped() const noexcept { return swapped_; }

  Color color(int id) const;
  int weight(int id) const { return balines::weight(color(id)); }
  std::vector<Color> colors() const;

  /// Exact orientation of three points by id.
  int orientation(int i, int j, int k) const;

  const detail::Lattice& lattice() const noexcept { return lattice_; }

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  std::vector<ChromaticPoint> points_;
  bool swapped_ = false;
  int blue_ = 0;
  int red_ = 0;
  detail::Lattice lattice_;
};

struct GeneralPositionReport {
  std::vector<std::array<int, 3>> collinear_triples;
  /// {a, b, c, d}: line(a, b) is parallel to line(c, d), the pairs disjoint.
  std::vector<std::array<int, 4>> parallel_pair_pairs;
  std::vector<std::array<int, 2>> coincident_pairs;

  bool clean() const noexcept {
    return collinear_triples.empty() && parallel_pair_pairs.empty() && coincident_pairs.empty();
  }
};

GeneralPositionReport validate_general_position(const Instance& inst);

/// Moves every coordinate by less than a data-dependent epsilon until the
/// general-position report is empty. Clean input is returned unchanged.
Instance perturb(const Instance& inst, std::uint64_t seed);

struct HalfplaneWeights {
  int left = 0;
  int right = 0;
  friend bool operator==(const HalfplaneWeights&, const HalfplaneWeights&) = default;
};

/// Weight sums over the open halfplanes of the directed line i -> j.
/// Throws CollinearWitness if a third point lies on the line.
HalfplaneWeights halfplane_weights(const Instance& inst, int i, int j);

}  // namespace balines
