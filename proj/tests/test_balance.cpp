#include <doctest.h>

#include "balines/balance.hpp"
#include "oracles.hpp"

using namespace balines;

namespace {

std::set<std::pair<int, int>> as_set(const WitnessSet& ws) {
  std::set<std::pair<int, int>> out;
  for (const auto& [key, w] : ws) out.insert(key);
  return out;
}

}  // namespace

TEST_SUITE("balance") {

TEST_CASE("two points have one balanced line") {
  const Instance inst({{0, Rational(0), Rational(0), Color::Blue}, {1, Rational(1, 2), Rational(5), Color::Red}});
  const auto lines = enumerate_balanced_lines(inst);
  REQUIRE(lines.size() == 1);
  CHECK(lines.begin()->first == PairKey{0, 1});
  CHECK(lines.begin()->second.blue_id == 0);
  CHECK(lines.begin()->second.left_weight == 0);
  CHECK(check_correspondence(inst).equal);
}

TEST_CASE("monochromatic sets have none") {
  const Instance inst = oracle::random_clean(6, 6, 3);
  CHECK(enumerate_balanced_lines(inst).empty());
  CHECK(scan_balanced_transpositions(build_from_points(inst)).empty());
}

TEST_CASE("brute force matches the oracle") {
  for (unsigned seed = 0; seed < 150; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 6);
    const int blue = n / 2 + static_cast<int>(seed % 4) % (n / 2 + 1);
    const Instance inst = oracle::random_clean(n, blue, seed + 1000);
    CHECK(as_set(enumerate_balanced_lines(inst)) == oracle::balanced_pairs(inst));
  }
}

TEST_CASE("scan matches a from-scratch scan of abstract sequences") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 6);
    const AllowableSequence seq = random_sequence(n, n / 2 + static_cast<int>(seed % 5) % (n / 2 + 1), seed);
    const WitnessSet scan = scan_balanced_transpositions(seq);
    CHECK(as_set(scan) == oracle::balanced_swaps(seq));
    CHECK(static_cast<int>(scan.size()) >= seq.red_count());
    for (const auto& [key, w] : scan) {
      CHECK(seq.color(w.blue_id) == Color::Blue);
      CHECK(seq.color(w.red_id) == Color::Red);
      CHECK(w.left_weight == seq.delta());
      REQUIRE(w.t.has_value());
      CHECK(*w.t >= 1);
      CHECK(*w.t <= seq.half_period());
    }
  }
}

TEST_CASE("balanced lines correspond to balanced transpositions") {
  for (unsigned seed = 0; seed < 200; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 6);
    const int blue = n / 2 + static_cast<int>(seed % 3) % (n / 2 + 1);
    const Instance inst = oracle::random_clean(n, blue, seed + 5000);
    const auto report = check_correspondence(inst);
    CHECK(report.equal);
    CHECK(as_set(report.geometric) == as_set(report.scan));
    CHECK(static_cast<int>(report.geometric.size()) >= inst.red_count());
  }
}

TEST_CASE("more red than blue is handled by swapping roles") {
  const Instance inst = oracle::random_clean(8, 2, 77);
  CHECK(inst.colors_swapped());
  CHECK(as_set(enumerate_balanced_lines(inst)) == oracle::balanced_pairs(inst));
  CHECK(check_correspondence(inst).equal);
  CHECK(enumerate_balanced_lines(inst).size() >= 2);
}

}
