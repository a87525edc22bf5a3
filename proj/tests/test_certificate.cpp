#include <doctest.h>

#include "balines/certificate.hpp"
#include "balines/error.hpp"
#include "balines/io.hpp"
#include "oracles.hpp"

using namespace balines;

namespace {

bool has_diag(const VerificationReport& r, const std::string& prefix) {
  for (const auto& d : r.diagnostics) {
    if (d.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::vector<int> blues(const AllowableSequence& seq) {
  std::vector<int> out;
  for (int id = 0; id < seq.size(); ++id) {
    if (seq.color(id) == Color::Blue) out.push_back(id);
  }
  return out;
}

/// Sequences from points on a convex arc with a red cluster inside tend to
/// have a delta-preserving blue rank curve.
AllowableSequence case2_sample(unsigned seed) {
  std::mt19937 rng(seed);
  for (;;) {
    const int n = 6 + 2 * static_cast<int>(rng() % 3);
    const int blue = n / 2 + static_cast<int>(rng() % (n / 2 + 1));
    std::vector<std::pair<long, long>> pts;
    for (int i = 0; i < n; ++i) {
      if (i < blue) {
        const double a = static_cast<double>(rng() % 100000) / 100000 * 6.283;
        pts.emplace_back(static_cast<long>(1000 * std::cos(a)), static_cast<long>(1000 * std::sin(a)));
      } else {
        pts.emplace_back(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100);
      }
    }
    if (!oracle::general_position(pts)) continue;
    std::vector<ChromaticPoint> cp;
    for (int i = 0; i < n; ++i) cp.push_back({i, Rational(pts[i].first), Rational(pts[i].second), i < blue ? Color::Blue : Color::Red});
    const AllowableSequence seq = build_from_points(Instance(cp));
    if (classify_case(Timeline(seq)).kind == CertificateCase::Case2) return seq;
  }
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("two points") {
  const AllowableSequence seq = random_sequence(2, 1, 0);
  const Certificate cert = certify(seq);
  CHECK(cert.kind == CertificateCase::Case1);
  CHECK(cert.target == 1);
  REQUIRE(cert.witnesses.size() == 1);
  CHECK(verify_certificate(seq, cert).ok);
}

TEST_CASE("monochromatic input needs no witness") {
  const AllowableSequence seq = random_sequence(6, 6, 2);
  const Certificate cert = certify(seq);
  CHECK(cert.target == 0);
  CHECK(cert.witnesses.empty());
  CHECK(verify_certificate(seq, cert).ok);
}

TEST_CASE("certificates verify and only contain balanced transpositions") {
  int seen[2] = {0, 0};
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 6);
    const AllowableSequence seq = random_sequence(n, n / 2 + static_cast<int>(seed / 6 % (n / 2 + 1)), seed);
    const Certificate cert = certify(seq);
    ++seen[cert.kind == CertificateCase::Case1 ? 0 : 1];
    const auto report = verify_certificate(seq, cert);
    CHECK_MESSAGE(report.ok, "seed " << seed);
    CHECK(static_cast<int>(cert.witnesses.size()) >= seq.red_count());
    const auto truth = oracle::balanced_swaps(seq);
    for (const auto& w : cert.witnesses) CHECK(truth.count(w.key()) == 1);
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
}

TEST_CASE("case 2 borders are maximal and certificates verify") {
  for (unsigned seed = 0; seed < 40; ++seed) {
    const AllowableSequence seq = case2_sample(seed);
    const Timeline tl(seq);
    const CaseSplit split = classify_case(tl);
    REQUIRE(split.kind == CertificateCase::Case2);
    const Border start = initial_border(tl, split.preserving_rank);
    CHECK(check_border(tl, start).empty());
    const Border top = maximize_border(tl, start);
    CHECK(check_border(tl, top).empty());
    CHECK(position_sum(tl, top) >= position_sum(tl, start));
    for (int t = 0; t < tl.period(); ++t) CHECK(tl.position(t, top.at(t)) >= tl.position(t, start.at(t)));
    CHECK(lemma3_violations(tl, top).empty());
    const Border exact = dominating_border(tl, top);
    CHECK(check_border(tl, exact).empty());
    CHECK(position_sum(tl, exact) >= position_sum(tl, top));

    const Certificate cert = certify(tl);
    REQUIRE(cert.kind == CertificateCase::Case2);
    REQUIRE(cert.border.has_value());
    const auto part = partition_fgh(tl, *cert.border);
    CHECK(part.f.size() + part.g.size() + part.h.size() ==
          static_cast<std::size_t>(cert.border->color == Color::Blue ? seq.blue_count() : seq.red_count()));
    CHECK(cert.target >= seq.red_count());
    const auto report = verify_certificate(seq, cert);
    CHECK_MESSAGE(report.ok, "seed " << seed);
    long charges = 0;
    for (int c : cert.ledger.charge_f) charges += c;
    for (int c : cert.ledger.charge_h) charges += c;
    CHECK(charges == static_cast<long>(cert.ledger.transactions.size()));
  }
}

TEST_CASE("border checks") {
  const AllowableSequence seq = case2_sample(3);
  const Timeline tl(seq);
  const Border good = maximize_border(tl, initial_border(tl, classify_case(tl).preserving_rank));
  REQUIRE(check_border(tl, good).empty());

  Border shortened = good;
  shortened.element.pop_back();
  CHECK(check_border(tl, shortened).front().code == "LENGTH");

  Border recolored = good;
  recolored.color = opposite(good.color);
  CHECK(check_border(tl, recolored).front().code == "WRONG_COLOR");

  // The mirror of a border lies right of it, so swapping halves breaks precedence.
  Border flipped = good;
  std::rotate(flipped.element.begin(), flipped.element.begin() + tl.half_period(), flipped.element.end());
  bool precedence = false;
  for (const auto& issue : check_border(tl, flipped)) precedence = precedence || issue.code == "NOT_LEFT_OF_MIRROR";
  CHECK(precedence);

  CHECK_THROWS_AS(maximize_border(tl, flipped), Error);
  CHECK_THROWS_AS(case2_certificate(tl, flipped), Error);
}

TEST_CASE("case 1 witnesses per rank") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 5);
    const AllowableSequence seq = random_sequence(n, n / 2 + static_cast<int>(seed % 3), seed);
    const Timeline tl(seq);
    if (classify_case(tl).kind != CertificateCase::Case1) continue;
    ++checked;
    const Certificate cert = case1_certificate(tl);
    const auto blue = blues(seq);
    const auto mask = membership_mask(seq.size(), blue);
    for (int k = seq.delta() + 1; k <= seq.blue_count() / 2; ++k) {
      int count = 0;
      for (const auto& w : cert.witnesses) {
        if (w.rank != k) continue;
        const auto perm = permutation_at(seq, w.t - 1);
        const int p = seq.swap_position(w.t);
        int left = 0;
        for (int q = 0; q < p; ++q) left += mask[static_cast<std::size_t>(perm[q])];
        CHECK(left == k - 1);
        ++count;
      }
      CHECK(count >= 2);
    }
    CHECK(static_cast<int>(cert.witnesses.size()) >= seq.red_count());
  }
  CHECK(checked > 50);
}

TEST_CASE("verifier rejects tampered certificates") {
  const AllowableSequence seq = case2_sample(5);
  const Certificate cert = certify(seq);
  REQUIRE(verify_certificate(seq, cert).ok);
  REQUIRE(!cert.witnesses.empty());

  Certificate fewer = cert;
  fewer.witnesses.pop_back();
  if (static_cast<int>(fewer.witnesses.size()) < fewer.target) {
    CHECK(has_diag(verify_certificate(seq, fewer), "COUNT_BELOW_TARGET"));
  }

  Certificate dup = cert;
  dup.witnesses.push_back(dup.witnesses.front());
  CHECK(has_diag(verify_certificate(seq, dup), "DUPLICATE_PAIR"));

  Certificate moved = cert;
  moved.witnesses.front().t = moved.witnesses.front().t % seq.period() + 1;
  CHECK_FALSE(verify_certificate(seq, moved).ok);

  Certificate rank = cert;
  rank.witnesses.front().rank += 1;
  CHECK(has_diag(verify_certificate(seq, rank), "RANK_MISMATCH"));

  Certificate low = cert;
  low.target = seq.red_count() - 1;
  CHECK(has_diag(verify_certificate(seq, low), "TARGET_BELOW_R"));

  Certificate part = cert;
  if (!part.f_set.empty()) {
    part.g_set.push_back(part.f_set.back());
    part.f_set.pop_back();
    CHECK(has_diag(verify_certificate(seq, part), "PARTITION"));
  }

  Certificate ledger = cert;
  ledger.ledger.transactions.push_back({0, 1, 'F', 1});
  if (!ledger.ledger.charge_f.empty()) CHECK(has_diag(verify_certificate(seq, ledger), "LEDGER"));
}

TEST_CASE("golden certificates") {
  const std::string dir = BALINES_TEST_DATA;
  struct Golden {
    const char* name;
    CertificateCase kind;
    std::optional<Color> border;
  };
  for (const Golden& g : {Golden{"t2", CertificateCase::Case1, std::nullopt},
                          Golden{"hull8", CertificateCase::Case2, Color::Blue},
                          Golden{"red6", CertificateCase::Case2, Color::Red}}) {
    CAPTURE(g.name);
    const Instance inst = instance_from_json(read_file(dir + "/" + g.name + ".json"));
    const AllowableSequence seq = build_from_points(inst);
    const Certificate cert = certify(seq);
    CHECK(certificate_to_json(seq, cert) == read_file(dir + "/" + g.name + "_certificate.json"));
    CHECK(cert.kind == g.kind);
    CHECK(verify_certificate(seq, cert).ok);
    const auto truth = oracle::balanced_pairs(inst);
    for (const auto& w : cert.witnesses) CHECK(truth.count(w.key()) == 1);
    if (g.border) {
      REQUIRE(cert.border.has_value());
      CHECK(cert.border->color == *g.border);
      const int border_color_count = *g.border == Color::Blue ? seq.blue_count() : seq.red_count();
      CHECK(static_cast<int>(cert.f_set.size() + cert.g_set.size() + cert.h_set.size()) == border_color_count);
      CHECK(cert.target == border_color_count);
      // The border at time 0 closes F and its mirror opens H.
      CHECK(std::count(cert.f_set.begin(), cert.f_set.end(), cert.border->at(0)) == 1);
      CHECK(std::count(cert.h_set.begin(), cert.h_set.end(), cert.border->at(seq.half_period())) == 1);
    }
  }
}

TEST_CASE("three points per color, separated: case 1 with exactly three witnesses") {
  const Instance inst = instance_from_json(read_file(std::string(BALINES_TEST_DATA) + "/t2.json"));
  CHECK(oracle::balanced_pairs(inst).size() == 3);
  const AllowableSequence seq = build_from_points(inst);
  CHECK(classify_case(Timeline(seq)).kind == CertificateCase::Case1);
  CHECK(certify(seq).witnesses.size() == 3);
}

TEST_CASE("tampered left weight is reported") {
  const AllowableSequence seq = random_sequence(8, 4, 17);
  Certificate cert = certify(seq);
  REQUIRE(!cert.witnesses.empty());
  cert.witnesses.front().left_weight += 1;
  CHECK(has_diag(verify_certificate(seq, cert), "NOT_BALANCED"));
}

TEST_CASE("a non-maximal border can be insufficient, certify recovers") {
  int insufficient = 0;
  for (unsigned seed = 0; seed < 40; ++seed) {
    const AllowableSequence seq = case2_sample(seed);
    const Timeline tl(seq);
    const Border start = initial_border(tl, classify_case(tl).preserving_rank);
    try {
      case2_certificate(tl, start);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InsufficientBorder);
      ++insufficient;
    }
    CHECK(verify_certificate(seq, certify(tl)).ok);
  }
  CHECK(insufficient > 0);
}

TEST_CASE("fixed borders are returned unchanged") {
  const AllowableSequence seq = case2_sample(11);
  const Timeline tl(seq);
  const Border top = maximize_border(tl, initial_border(tl, classify_case(tl).preserving_rank));
  CHECK(maximize_border(tl, top) == top);
  const Border exact = dominating_border(tl, top);
  CHECK(dominating_border(tl, exact) == exact);
}

}
