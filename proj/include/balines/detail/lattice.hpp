#pragma once

// Integer images of rational point sets. All coordinates are multiplied by
// the lcm of their denominators; predicates then run on integers, either in
// int64 with __int128 products or in mpz when the coordinates are too wide.

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace balines::detail {

template <class Int>
struct WideOf;
template <>
struct WideOf<std::int64_t> {
  using type = __int128;
};
template <>
struct WideOf<mpz_class> {
  using type = mpz_class;
};
template <class Int>
using Wide = typename WideOf<Int>::type;

template <class T>
int sign_of(const T& v) {
  if constexpr (std::is_same_v<T, mpz_class>) {
    return sgn(v);
  } else {
    return (v > 0) - (v < 0);
  }
}

template <class Int>
struct LatticeT {
  std::vector<Int> x;
  std::vector<Int> y;

  int size() const noexcept { return static_cast<int>(x.size()); }

  Wide<Int> dx(int from, int to) const { return Wide<Int>(x[to]) - Wide<Int>(x[from]); }
  Wide<Int> dy(int from, int to) const { return Wide<Int>(y[to]) - Wide<Int>(y[from]); }

  int orient(int p, int q, int s) const {
    return sign_of(dx(p, q) * dy(p, s) - dy(p, q) * dx(p, s));
  }
};

using Lattice = std::variant<LatticeT<std::int64_t>, LatticeT<mpz_class>>;

/// int64 storage is used when every scaled coordinate has magnitude < 2^61,
/// so that differences fit in 62 bits and cross products in __int128.
Lattice make_lattice(std::span<const mpq_class> xs, std::span<const mpq_class> ys);

/// A pair direction canonicalized into the half-open upper half plane.
template <class Int>
struct Direction {
  Wide<Int> x;
  Wide<Int> y;
  int a = 0;
  int b = 0;
};

template <class Int>
Direction<Int> canonical_direction(const LatticeT<Int>& lat, int a, int b) {
  Direction<Int> d{lat.dx(a, b), lat.dy(a, b), a, b};
  if (sign_of(d.y) < 0 || (sign_of(d.y) == 0 && sign_of(d.x) < 0)) {
    d.x = -d.x;
    d.y = -d.y;
  }
  return d;
}

template <class W>
int cross_sign(const W& ux, const W& uy, const W& vx, const W& vy) {
  return sign_of(W(ux * vy - uy * vx));
}

/// Strict angular order on canonical (nonzero) directions, angle in [0, pi).
template <class Int>
bool angle_less(const Direction<Int>& u, const Direction<Int>& v) {
  return cross_sign(u.x, u.y, v.x, v.y) > 0;
}

template <class Int>
bool is_zero(const Direction<Int>& d) {
  return sign_of(d.x) == 0 && sign_of(d.y) == 0;
}

}  // namespace balines::detail
