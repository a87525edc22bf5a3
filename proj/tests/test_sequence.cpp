#include <doctest.h>

#include "balines/error.hpp"
#include "balines/sequence.hpp"
#include "oracles.hpp"

using namespace balines;

namespace {

bool is_cyclic_rotation(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[i] == b[(i + shift) % b.size()];
    if (same) return true;
  }
  return false;
}

bool has_issue(const AllowableSequence& seq, const std::string& code) {
  for (const auto& issue : validate(seq).issues) {
    if (issue.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("sequence") {

TEST_CASE("two points") {
  const Instance inst({{0, Rational(0), Rational(0), Color::Blue}, {1, Rational(3), Rational(1), Color::Red}});
  const AllowableSequence seq = build_from_points(inst);
  CHECK(seq.half_period() == 1);
  CHECK(seq.word().size() == 1);
  CHECK(seq.word()[0] == 0);
  CHECK(validate(seq).clean());
}

TEST_CASE("sweep orders match projections onto a clockwise turning direction") {
  for (unsigned seed = 0; seed < 120; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 5);
    const Instance inst = oracle::random_clean(n, n / 2, seed);
    const AllowableSequence seq = build_from_points(inst);
    REQUIRE(validate(seq).clean());
    CHECK(is_cyclic_rotation(oracle::replay(seq), oracle::projection_orders(inst)));
  }
}

TEST_CASE("sweep uses the exact lattice when coordinates are huge") {
  const mpz_class big = mpz_class(1) << 90;
  const Instance base = oracle::random_clean(8, 4, 31);
  std::vector<ChromaticPoint> pts;
  for (const auto& p : base.points()) {
    pts.push_back({p.id, Rational(big * p.x.get_num() + p.id, 3), Rational(big * p.y.get_num() - p.id * p.id),
                   p.color});
  }
  const Instance inst(pts);
  REQUIRE(validate_general_position(inst).clean());
  const AllowableSequence seq = build_from_points(inst);
  CHECK(validate(seq).clean());
}

TEST_CASE("degenerate input is rejected") {
  const Instance inst({{0, Rational(0), Rational(0), Color::Blue},
                       {1, Rational(1), Rational(1), Color::Red},
                       {2, Rational(2), Rational(2), Color::Blue},
                       {3, Rational(0), Rational(1), Color::Red}});
  CHECK_THROWS_AS(build_from_points(inst), Error);
}

TEST_CASE("random sequences are valid, deterministic and reversible") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 6);
    const AllowableSequence seq = random_sequence(n, n / 2 + static_cast<int>(seed % 3) % (n / 2 + 1), seed);
    REQUIRE(validate(seq).clean());
    CHECK(seq == random_sequence(n, seq.blue_count(), seed));
    const AllowableSequence rev = reverse_sequence(seq);
    REQUIRE(validate(rev).clean());
    for (int t = -3; t <= seq.period() + 3; ++t) CHECK(permutation_at(rev, t) == permutation_at(seq, -t));
    CHECK(reverse_sequence(rev) == seq);
  }
  CHECK_THROWS_AS(random_sequence(5, 3, 1), Error);
  CHECK_THROWS_AS(random_sequence(6, 2, 1), Error);
}

TEST_CASE("permutations repeat reversed after a half period") {
  const AllowableSequence seq = random_sequence(8, 5, 3);
  const auto perms = oracle::replay(seq);
  for (int t = 0; t < seq.period(); ++t) {
    CHECK(permutation_at(seq, t) == perms[static_cast<std::size_t>(t)]);
    auto rev = perms[static_cast<std::size_t>(t)];
    std::reverse(rev.begin(), rev.end());
    CHECK(permutation_at(seq, t + seq.half_period()) == rev);
    CHECK(permutation_at(seq, t + 7 * seq.period()) == perms[static_cast<std::size_t>(t)]);
  }
}

TEST_CASE("walker keeps positions and prefix weights") {
  const AllowableSequence seq = random_sequence(10, 6, 8);
  const auto perms = oracle::replay(seq);
  SequenceWalker walker(seq);
  for (int step = 0; step < seq.period() + 5; ++step) {
    const auto& perm = perms[static_cast<std::size_t>(step % seq.period())];
    CHECK(std::vector<int>(walker.permutation().begin(), walker.permutation().end()) == perm);
    for (int p = 0; p <= seq.size(); ++p) CHECK(walker.prefix(p) == oracle::weight_left(seq, perm, p));
    const Transposition tr = walker.advance();
    CHECK(tr.lo_id == perm[static_cast<std::size_t>(tr.pos)]);
    CHECK(tr.left_weight == oracle::weight_left(seq, perm, tr.pos));
  }
}

TEST_CASE("validator catches broken words") {
  const AllowableSequence good = random_sequence(6, 3, 4);
  std::vector<Color> colors(good.colors().begin(), good.colors().end());
  std::vector<int> pi0(good.pi0().begin(), good.pi0().end());
  std::vector<int> word(good.word().begin(), good.word().end());

  auto with_word = [&](std::vector<int> w) { return AllowableSequence(colors, pi0, std::move(w)); };
  auto shorter = word;
  shorter.pop_back();
  CHECK(has_issue(with_word(shorter), "LENGTH_MISMATCH"));
  auto out_of_range = word;
  out_of_range[2] = 5;
  CHECK(has_issue(with_word(out_of_range), "POSITION_OUT_OF_RANGE"));
  auto repeated = word;
  repeated[1] = repeated[0];
  CHECK(has_issue(with_word(repeated), "REPEATED_PAIR"));
  auto bad_pi0 = pi0;
  bad_pi0[0] = bad_pi0[1];
  CHECK(has_issue(AllowableSequence(colors, bad_pi0, word), "BAD_PERMUTATION"));
  auto odd = colors;
  odd.push_back(Color::Blue);
  CHECK_FALSE(validate(AllowableSequence(odd, pi0, word)).clean());
  auto more_red = colors;
  std::fill(more_red.begin(), more_red.end(), Color::Red);
  more_red[0] = Color::Blue;
  CHECK(has_issue(AllowableSequence(more_red, pi0, word), "COLOR_IMBALANCE"));
}

}
