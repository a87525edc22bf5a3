#include "balines/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "balines/detail/rng.hpp"
#include "balines/error.hpp"

namespace balines {

namespace {

using Dir = std::pair<std::int64_t, std::int64_t>;

Dir normalized(std::int64_t dx, std::int64_t dy) {
  const std::int64_t g = std::gcd(dx, dy);
  dx /= g;
  dy /= g;
  if (dy < 0 || (dy == 0 && dx < 0)) {
    dx = -dx;
    dy = -dy;
  }
  return {dx, dy};
}

constexpr int kAttemptsPerPoint = 2000;
constexpr int kCircleAttempts = 200;

}  // namespace

Instance random_instance(int blue, int red, std::int64_t bound, std::uint64_t seed) {
  if (blue < 0 || red < 0 || blue + red < 2 || (blue + red) % 2 != 0) {
    throw Error(ErrorCode::BadParams, "need an even total of at least two points, got " +
                                          std::to_string(blue) + " + " + std::to_string(red));
  }
  if (bound < 1 || bound > (std::int64_t{1} << 40)) {
    throw Error(ErrorCode::BadParams, "coordinate bound must lie in 1..2^40");
  }
  const int n = blue + red;
  auto rng = detail::make_rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);

  std::vector<std::pair<std::int64_t, std::int64_t>> placed;
  std::set<Dir> directions;
  while (static_cast<int>(placed.size()) < n) {
    bool done = false;
    for (int attempt = 0; attempt < kAttemptsPerPoint && !done; ++attempt) {
      const std::int64_t x = coord(rng);
      const std::int64_t y = coord(rng);
      std::set<Dir> fresh;
      bool ok = true;
      for (const auto& [px, py] : placed) {
        if (px == x && py == y) {
          ok = false;
          break;
        }
        const Dir d = normalized(x - px, y - py);
        if (directions.count(d) != 0 || !fresh.insert(d).second) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      directions.insert(fresh.begin(), fresh.end());
      placed.emplace_back(x, y);
      done = true;
    }
    if (!done) {
      throw Error(ErrorCode::GenerationExhausted,
                  "could not place point " + std::to_string(placed.size()) + " within bound " +
                      std::to_string(bound));
    }
  }

  std::vector<Color> colors(static_cast<std::size_t>(blue), Color::Blue);
  colors.resize(static_cast<std::size_t>(n), Color::Red);
  std::shuffle(colors.begin(), colors.end(), rng);

  std::vector<ChromaticPoint> points;
  points.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    points.push_back({i, Rational(placed[static_cast<std::size_t>(i)].first),
                      Rational(placed[static_cast<std::size_t>(i)].second),
                      colors[static_cast<std::size_t>(i)]});
  }
  return Instance(std::move(points));
}

Instance separated_instance(int k, std::uint64_t seed) {
  if (k < 1 || k > 1000) throw Error(ErrorCode::BadParams, "separated instance needs 1 <= k <= 1000");
  auto rng = detail::make_rng(seed, 1);
  // u -> ((1 - u^2) / (1 + u^2), 2u / (1 + u^2)) maps |u| < 1 to the right
  // half of the unit circle and |u| > 1 to the left half.
  std::uniform_int_distribution<long> numer(1, 997);
  for (int attempt = 0; attempt < kCircleAttempts; ++attempt) {
    std::set<Rational> red_params;
    std::set<Rational> blue_params;
    while (static_cast<int>(red_params.size()) < k) {
      Rational u(numer(rng) * (rng() % 2 == 0 ? 1 : -1), 1009);
      u.canonicalize();
      red_params.insert(u);
    }
    while (static_cast<int>(blue_params.size()) < k) {
      Rational u(1009, numer(rng) * (rng() % 2 == 0 ? 1 : -1));
      u.canonicalize();
      blue_params.insert(u);
    }
    std::vector<std::pair<Rational, Color>> params;
    for (const auto& u : blue_params) params.emplace_back(u, Color::Blue);
    for (const auto& u : red_params) params.emplace_back(u, Color::Red);
    std::shuffle(params.begin(), params.end(), rng);

    std::vector<ChromaticPoint> points;
    for (std::size_t i = 0; i < params.size(); ++i) {
      const Rational& u = params[i].first;
      const Rational den = 1 + u * u;
      Rational x = (1 - u * u) / den;
      Rational y = 2 * u / den;
      x.canonicalize();
      y.canonicalize();
      points.push_back({static_cast<int>(i), x, y, params[i].second});
    }
    Instance inst(std::move(points));
    if (validate_general_position(inst).clean()) return inst;
  }
  throw Error(ErrorCode::GenerationExhausted, "no parallel-free circle configuration found");
}

}  // namespace balines
