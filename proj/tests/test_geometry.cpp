#include <doctest.h>

#include <tuple>

#include "balines/error.hpp"
#include "balines/geometry.hpp"
#include "oracles.hpp"

using namespace balines;

namespace {

Instance make(std::vector<std::tuple<long, long, char>> pts) {
  std::vector<ChromaticPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& [x, y, c] = pts[i];
    out.push_back({static_cast<int>(i), Rational(x), Rational(y), color_from_char(c)});
  }
  return Instance(std::move(out));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("rational parsing") {
  CHECK(format_rational(parse_rational("3/2")) == "3/2");
  CHECK(format_rational(parse_rational("-7/3")) == "-7/3");
  CHECK(format_rational(parse_rational("4/2")) == "2");
  CHECK(format_rational(parse_rational("0/5")) == "0");
  CHECK(format_rational(parse_rational("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_rational("1.5"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_rational("2/-3"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("instance construction") {
  CHECK(code_of([] { make({{0, 0, 'B'}, {1, 0, 'R'}, {0, 1, 'B'}}); }) == ErrorCode::OddPointCount);
  CHECK(code_of([] { make({{0, 0, 'B'}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] {
          Instance({{0, Rational(0), Rational(0), Color::Blue}, {2, Rational(1), Rational(0), Color::Red}});
        }) == ErrorCode::InvalidInput);

  const Instance inst = make({{0, 0, 'R'}, {1, 0, 'R'}, {0, 1, 'R'}, {5, 7, 'B'}});
  CHECK(inst.colors_swapped());
  CHECK(inst.blue_count() == 3);
  CHECK(inst.red_count() == 1);
  CHECK(inst.delta() == 1);
  CHECK(inst.color(3) == Color::Red);
  CHECK(inst.point(3).color == Color::Blue);
}

TEST_CASE("orientation agrees with a direct rational cross product") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 300; ++round) {
    std::vector<ChromaticPoint> pts;
    const bool huge = round % 3 == 0;
    for (int i = 0; i < 4; ++i) {
      mpz_class num = huge ? mpz_class(static_cast<long>(rng() >> 1)) * mpz_class(static_cast<long>(rng() >> 1))
                           : mpz_class(static_cast<long>(rng() % 41) - 20);
      if (rng() % 2) num = -num;
      Rational x(num, static_cast<long>(rng() % 9 + 1));
      Rational y(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5 + 1));
      x.canonicalize();
      y.canonicalize();
      pts.push_back({i, x, y, i % 2 ? Color::Red : Color::Blue});
    }
    const Instance inst(pts);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        for (int c = 0; c < 4; ++c) {
          CHECK(inst.orientation(a, b, c) == oracle::cross_sign(pts[a], pts[b], pts[c]));
        }
      }
    }
  }
}

TEST_CASE("general position report") {
  const Instance collinear = make({{0, 0, 'B'}, {1, 1, 'R'}, {2, 2, 'B'}, {0, 5, 'R'}});
  auto report = validate_general_position(collinear);
  REQUIRE(report.collinear_triples.size() == 1);
  CHECK(report.collinear_triples[0] == std::array<int, 3>{0, 1, 2});
  CHECK(report.parallel_pair_pairs.empty());

  const Instance parallel = make({{0, 0, 'B'}, {1, 0, 'R'}, {0, 1, 'B'}, {2, 1, 'R'}});
  report = validate_general_position(parallel);
  CHECK(report.collinear_triples.empty());
  REQUIRE(report.parallel_pair_pairs.size() == 1);
  CHECK(report.parallel_pair_pairs[0] == std::array<int, 4>{0, 1, 2, 3});

  const Instance twin = make({{3, 4, 'B'}, {3, 4, 'R'}});
  report = validate_general_position(twin);
  CHECK(report.coincident_pairs.size() == 1);
  CHECK_FALSE(report.clean());

  for (unsigned seed = 0; seed < 50; ++seed) {
    CHECK(validate_general_position(oracle::random_clean(8, 4, seed)).clean());
  }
}

TEST_CASE("report flags exactly the defects the oracle sees") {
  std::mt19937 rng(11);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i < 6; ++i) pts.emplace_back(static_cast<long>(rng() % 5), static_cast<long>(rng() % 5));
    std::vector<ChromaticPoint> cp;
    for (int i = 0; i < 6; ++i) cp.push_back({i, Rational(pts[i].first), Rational(pts[i].second), i < 3 ? Color::Blue : Color::Red});
    CHECK(validate_general_position(Instance(cp)).clean() == oracle::general_position(pts));
  }
}

TEST_CASE("perturb") {
  const Instance clean = oracle::random_clean(6, 3, 1);
  CHECK(perturb(clean, 5) == clean);

  const Instance grid = make({{0, 0, 'B'}, {1, 0, 'B'}, {2, 0, 'R'}, {0, 1, 'R'}, {1, 1, 'B'}, {2, 1, 'R'}});
  const Instance moved = perturb(grid, 9);
  CHECK(validate_general_position(moved).clean());
  CHECK(moved == perturb(grid, 9));
  for (int i = 0; i < grid.size(); ++i) {
    CHECK(abs(moved.point(i).x - grid.point(i).x) < Rational(1, 2));
    CHECK(moved.point(i).color == grid.point(i).color);
  }
}

TEST_CASE("halfplane weights") {
  const Instance inst = make({{0, 0, 'B'}, {4, 0, 'R'}, {1, 1, 'B'}, {2, -1, 'R'}});
  CHECK(halfplane_weights(inst, 0, 1) == HalfplaneWeights{1, -1});
  CHECK(halfplane_weights(inst, 1, 0) == HalfplaneWeights{-1, 1});
  const Instance line = make({{0, 0, 'B'}, {1, 1, 'R'}, {2, 2, 'B'}, {0, 5, 'R'}});
  CHECK(code_of([&] { halfplane_weights(line, 0, 2); }) == ErrorCode::CollinearWitness);

  for (unsigned seed = 0; seed < 40; ++seed) {
    const Instance r = oracle::random_clean(8, 5, seed);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (i == j) continue;
        const auto hw = halfplane_weights(r, i, j);
        int total = 0;
        for (int k = 0; k < 8; ++k) total += k == i || k == j ? 0 : r.weight(k);
        CHECK(hw.left + hw.right == total);
      }
    }
  }
}

}
