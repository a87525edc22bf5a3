#include "balines/geometry.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <set>

#include "balines/detail/rng.hpp"
#include "balines/error.hpp"

namespace balines {

namespace detail {

Lattice make_lattice(std::span<const mpq_class> xs, std::span<const mpq_class> ys) {
  mpz_class scale = 1;
  for (const auto* coords : {&xs, &ys}) {
    for (const auto& q : *coords) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
  }
  LatticeT<mpz_class> wide;
  wide.x.reserve(xs.size());
  wide.y.reserve(ys.size());
  bool fits = true;
  const mpz_class limit = mpz_class(1) << 61;
  auto scaled = [&](const mpq_class& q) {
    mpz_class v = q.get_num() * (scale / q.get_den());
    if (abs(v) >= limit) fits = false;
    return v;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    wide.x.push_back(scaled(xs[i]));
    wide.y.push_back(scaled(ys[i]));
  }
  if (!fits) return wide;
  LatticeT<std::int64_t> narrow;
  narrow.x.reserve(xs.size());
  narrow.y.reserve(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    narrow.x.push_back(wide.x[i].get_si());
    narrow.y.push_back(wide.y[i].get_si());
  }
  return narrow;
}

}  // namespace detail

Color color_from_char(char c) {
  if (c == 'B') return Color::Blue;
  if (c == 'R') return Color::Red;
  throw Error(ErrorCode::InvalidInput, std::string("unknown color '") + c + "'");
}

Rational parse_rational(const std::string& text) {
  static const std::regex kForm(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kForm)) {
    throw Error(ErrorCode::InvalidInput, "malformed rational \"" + text + "\"");
  }
  const auto slash = text.find('/');
  if (slash != std::string::npos && mpz_class(text.substr(slash + 1)) == 0) {
    throw Error(ErrorCode::InvalidInput, "zero denominator in \"" + text + "\"");
  }
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

int orientation(const ChromaticPoint& p, const ChromaticPoint& q, const ChromaticPoint& s) {
  const Rational cross = (q.x - p.x) * (s.y - p.y) - (q.y - p.y) * (s.x - p.x);
  return sgn(cross);
}

namespace {

detail::Lattice lattice_of(const std::vector<ChromaticPoint>& points) {
  std::vector<mpq_class> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return detail::make_lattice(xs, ys);
}

}  // namespace

Instance::Instance(std::vector<ChromaticPoint> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end(),
            [](const ChromaticPoint& a, const ChromaticPoint& b) { return a.id < b.id; });
  if (points_.size() < 2) {
    throw Error(ErrorCode::InvalidInput, "an instance needs at least two points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].id != static_cast<int>(i)) {
      throw Error(ErrorCode::InvalidInput, "point ids must be 0..n-1 without gaps or repeats");
    }
  }
  if (points_.size() % 2 != 0) {
    throw Error(ErrorCode::OddPointCount,
                "the number of points must be even, got " + std::to_string(points_.size()));
  }
  int blue = 0;
  for (const auto& p : points_) blue += p.color == Color::Blue ? 1 : 0;
  int red = size() - blue;
  swapped_ = red > blue;
  if (swapped_) std::swap(blue, red);
  blue_ = blue;
  red_ = red;
  lattice_ = lattice_of(points_);
}

Color Instance::color(int id) const {
  const Color c = point(id).color;
  return swapped_ ? opposite(c) : c;
}

std::vector<Color> Instance::colors() const {
  std::vector<Color> out;
  out.reserve(points_.size());
  for (int i = 0; i < size(); ++i) out.push_back(color(i));
  return out;
}

int Instance::orientation(int i, int j, int k) const {
  return std::visit([&](const auto& lat) { return lat.orient(i, j, k); }, lattice_);
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    const auto& p = a.points_[i];
    const auto& q = b.points_[i];
    if (p.id != q.id || p.x != q.x || p.y != q.y || p.color != q.color) return false;
  }
  return true;
}

namespace {

template <class Int>
GeneralPositionReport validate_on(const detail::LatticeT<Int>& lat) {
  GeneralPositionReport report;
  const int n = lat.size();
  std::vector<detail::Direction<Int>> dirs;
  dirs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      auto d = detail::canonical_direction(lat, a, b);
      if (detail::is_zero(d)) {
        report.coincident_pairs.push_back({a, b});
      } else {
        dirs.push_back(std::move(d));
      }
    }
  }
  std::sort(dirs.begin(), dirs.end(), [](const auto& u, const auto& v) {
    if (detail::angle_less(u, v)) return true;
    if (detail::angle_less(v, u)) return false;
    return std::pair(u.a, u.b) < std::pair(v.a, v.b);
  });

  std::set<std::array<int, 3>> triples;
  std::size_t begin = 0;
  while (begin < dirs.size()) {
    std::size_t end = begin + 1;
    while (end < dirs.size() && !detail::angle_less(dirs[begin], dirs[end])) ++end;
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = i + 1; j < end; ++j) {
        const auto& p = dirs[i];
        const auto& q = dirs[j];
        const bool shared = p.a == q.a || p.a == q.b || p.b == q.a || p.b == q.b;
        if (shared) {
          std::array<int, 4> ids{p.a, p.b, q.a, q.b};
          std::sort(ids.begin(), ids.end());
          auto last = std::unique(ids.begin(), ids.end());
          std::array<int, 3> t{};
          std::copy(ids.begin(), last, t.begin());
          triples.insert(t);
        } else {
          std::array<int, 4> pp{p.a, p.b, q.a, q.b};
          if (std::pair(q.a, q.b) < std::pair(p.a, p.b)) pp = {q.a, q.b, p.a, p.b};
          report.parallel_pair_pairs.push_back(pp);
        }
      }
    }
    begin = end;
  }
  // Triples through a coincident pair are degenerate as well.
  for (const auto& [a, b] : report.coincident_pairs) {
    for (int c = 0; c < n; ++c) {
      if (c == a || c == b) continue;
      std::array<int, 3> t{a, b, c};
      std::sort(t.begin(), t.end());
      triples.insert(t);
    }
  }
  report.collinear_triples.assign(triples.begin(), triples.end());
  std::sort(report.parallel_pair_pairs.begin(), report.parallel_pair_pairs.end());
  return report;
}

}  // namespace

GeneralPositionReport validate_general_position(const Instance& inst) {
  return std::visit([](const auto& lat) { return validate_on(lat); }, inst.lattice());
}

Instance perturb(const Instance& inst, std::uint64_t seed) {
  if (validate_general_position(inst).clean()) return inst;

  const auto points = inst.points();
  Rational eps;
  bool have_eps = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (Rational d : {Rational(points[i].x - points[j].x), Rational(points[i].y - points[j].y)}) {
        d = abs(d);
        if (d != 0 && (!have_eps || d < eps)) {
          eps = d;
          have_eps = true;
        }
      }
    }
  }
  if (!have_eps) eps = 1;
  eps /= 2;

  constexpr long kGrid = 1L << 20;
  for (int round = 0; round < 64; ++round) {
    auto rng = detail::make_rng(seed, static_cast<std::uint64_t>(round));
    std::uniform_int_distribution<long> offset(-(kGrid - 1), kGrid - 1);
    std::vector<ChromaticPoint> moved(points.begin(), points.end());
    for (auto& p : moved) {
      p.x += Rational(offset(rng), kGrid) * eps;
      p.y += Rational(offset(rng), kGrid) * eps;
      p.x.canonicalize();
      p.y.canonicalize();
    }
    Instance candidate(std::move(moved));
    if (validate_general_position(candidate).clean()) return candidate;
    eps /= 2;
  }
  throw Error(ErrorCode::FailsToSeparate, "perturbation did not clear the degeneracy report");
}

HalfplaneWeights halfplane_weights(const Instance& inst, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= inst.size() || j >= inst.size()) {
    throw Error(ErrorCode::InvalidInput, "halfplane_weights needs two distinct point ids");
  }
  HalfplaneWeights w;
  for (int k = 0; k < inst.size(); ++k) {
    if (k == i || k == j) continue;
    const int side = inst.orientation(i, j, k);
    if (side == 0) {
      throw Error(ErrorCode::CollinearWitness,
                  "point " + std::to_string(k) + " lies on line(" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
    }
    (side > 0 ? w.left : w.right) += inst.weight(k);
  }
  return w;
}

}  // namespace balines
