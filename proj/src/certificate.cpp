#include "balines/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "balines/error.hpp"

namespace balines {

namespace {

/// Weights and delta read so that `primary` points weigh +1. With Red as
/// primary every blue-border statement becomes the matching red-border one.
struct Polarity {
  Color primary;
  int sign;
  int delta;

  Polarity(const AllowableSequence& seq, Color c)
      : primary(c), sign(c == Color::Blue ? 1 : -1), delta(sign * seq.delta()) {}

  int weight(const Timeline& tl, int t, int id) const { return sign * tl.left_weight(t, id); }
  int track_weight(const WeightTrack& trk, int t) const { return sign * trk.weight_at(t); }
};

std::vector<int> ids_of(const AllowableSequence& seq, Color c) {
  std::vector<int> out;
  for (int id = 0; id < seq.size(); ++id) {
    if (seq.color(id) == c) out.push_back(id);
  }
  return out;
}

std::string curve_name(char family, int rank) { return std::string(1, family) + "_" + std::to_string(rank); }

/// The witness detected by the weight change between t and t+1.
CertifiedWitness witness_at(const Timeline& tl, int t, WitnessGroup group, int rank) {
  const AllowableSequence& seq = tl.sequence();
  const int p = seq.swap_position(tl.wrap(t) + 1);
  const int lo = tl.element(t, p);
  const int hi = tl.element(t, p + 1);
  const bool lo_blue = seq.color(lo) == Color::Blue;
  return CertifiedWitness{lo_blue ? lo : hi, lo_blue ? hi : lo, tl.wrap(t) + 1, tl.prefix(t, p),
                          group, rank};
}

std::vector<int> positions_of(const Timeline& tl, const Border& border) {
  std::vector<int> out(static_cast<std::size_t>(tl.period()));
  for (int t = 0; t < tl.period(); ++t) out[static_cast<std::size_t>(t)] = tl.position(t, border.at(t));
  return out;
}

void sort_witnesses(std::vector<CertifiedWitness>& ws) {
  std::sort(ws.begin(), ws.end(),
            [](const CertifiedWitness& a, const CertifiedWitness& b) { return a.key() < b.key(); });
}

void require_distinct(const std::vector<CertifiedWitness>& ws) {
  std::set<PairKey> seen;
  for (const auto& w : ws) {
    if (!seen.insert(w.key()).second) {
      throw Error(ErrorCode::ProofGap, "pair {" + std::to_string(w.key().first) + "," +
                                           std::to_string(w.key().second) +
                                           "} detected twice");
    }
  }
}

}  // namespace

const char* to_string(WitnessGroup g) {
  switch (g) {
    case WitnessGroup::B: return "B";
    case WitnessGroup::F: return "F";
    case WitnessGroup::G: return "G";
    case WitnessGroup::H: return "H";
  }
  return "?";
}

std::vector<BorderIssue> check_border(const Timeline& tl, const Border& border) {
  std::vector<BorderIssue> issues;
  if (static_cast<int>(border.element.size()) != tl.period() || tl.period() == 0) {
    issues.push_back({"LENGTH", 0});
    return issues;
  }
  const AllowableSequence& seq = tl.sequence();
  const Polarity pol(seq, border.color);
  for (int t = 0; t < tl.period(); ++t) {
    const int e = border.at(t);
    if (e < 0 || e >= seq.size() || seq.color(e) != border.color) {
      issues.push_back({"WRONG_COLOR", t});
      continue;
    }
    if (pol.weight(tl, t, e) < pol.delta) issues.push_back({"WEIGHT", t});
    const int next = border.at(t + 1);
    if (next != e && next >= 0 && next < seq.size()) {
      const auto [lo, hi] = std::minmax(tl.position(t + 1, e), tl.position(t + 1, next));
      for (int q = lo + 1; q < hi; ++q) {
        if (seq.color(tl.element(t + 1, q)) == border.color) {
          issues.push_back({"CONTINUITY", t});
          break;
        }
      }
    }
    const int mirror = border.at(t + tl.half_period());
    if (mirror >= 0 && mirror < seq.size() && tl.position(t, e) >= tl.position(t, mirror)) {
      issues.push_back({"NOT_LEFT_OF_MIRROR", t});
    }
  }
  return issues;
}

long position_sum(const Timeline& tl, const Border& border) {
  long sum = 0;
  for (int t = 0; t < tl.period(); ++t) sum += tl.position(t, border.at(t));
  return sum;
}

CaseSplit classify_case(const Timeline& tl) {
  const AllowableSequence& seq = tl.sequence();
  const auto blue = ids_of(seq, Color::Blue);
  for (int k = seq.delta() + 1; k <= seq.blue_count() / 2; ++k) {
    if (classify(seq, CurveSpec{blue, k}) != CurveClass::Changing) {
      return CaseSplit{CertificateCase::Case2, k};
    }
  }
  return CaseSplit{CertificateCase::Case1, 0};
}

Certificate case1_certificate(const Timeline& tl) {
  const AllowableSequence& seq = tl.sequence();
  const int delta = seq.delta();
  const int b = seq.blue_count();
  const auto blue = ids_of(seq, Color::Blue);
  const auto mask = membership_mask(seq.size(), blue);
  const TimeWindow full{0, tl.period()};

  Certificate cert;
  cert.kind = CertificateCase::Case1;
  cert.target = seq.red_count();

  auto detect = [&](int t, int k, bool drop) {
    if (classify_change(tl, mask, k, t, drop) != ChangeBranch::Balanced) {
      throw Error(ErrorCode::ProofGap, "change of " + curve_name('B', k) + " at t = " +
                                           std::to_string(t) + " is not a balanced transposition");
    }
    return witness_at(tl, t, WitnessGroup::B, k);
  };

  for (int k = delta + 1; k <= b / 2; ++k) {
    const WeightTrack trk = track(seq, CurveSpec{blue, k});
    const auto drops = find_weight_changes(trk, delta, delta - 1, full);
    const auto rises = find_weight_changes(trk, delta - 1, delta, full);
    if (drops.empty() || rises.empty()) {
      throw Error(ErrorCode::ProofGap, curve_name('B', k) + " is changing but lacks a crossing");
    }
    const CertifiedWitness down = detect(drops.front(), k, true);
    const CertifiedWitness up = detect(rises.front(), k, false);
    if (down.key() == up.key()) {
      throw Error(ErrorCode::ProofGap, "both crossings of " + curve_name('B', k) + " hit one pair");
    }
    cert.witnesses.push_back(down);
    cert.witnesses.push_back(up);

    CurveLog log{curve_name('B', k), {}};
    for (int t : drops) log.events.push_back({t, delta, delta - 1, t == drops.front() ? "witness" : "change"});
    for (int t : rises) log.events.push_back({t, delta - 1, delta, t == rises.front() ? "witness" : "change"});
    std::sort(log.events.begin(), log.events.end(),
              [](const CurveEvent& x, const CurveEvent& y) { return x.t < y.t; });
    cert.logs.push_back(std::move(log));
  }

  if (b % 2 == 1) {
    // The middle rank is its own mirror, so its weight is on opposite sides
    // of the threshold at 0 and N and must cross in between.
    const int k0 = (b + 1) / 2;
    const WeightTrack trk = track(seq, CurveSpec{blue, k0});
    std::optional<CurveEvent> crossing;
    for (int t = 0; t < tl.half_period() && !crossing; ++t) {
      const int w0 = trk.weight_at(t);
      const int w1 = trk.weight_at(t + 1);
      if ((w0 == delta && w1 == delta - 1) || (w0 == delta - 1 && w1 == delta)) {
        crossing = CurveEvent{t, w0, w1, "witness"};
      }
    }
    if (!crossing) {
      throw Error(ErrorCode::ProofGap, "middle blue rank curve never crosses the threshold");
    }
    cert.witnesses.push_back(detect(crossing->t, k0, crossing->to == delta - 1));
    cert.logs.push_back(CurveLog{curve_name('B', k0), {*crossing}});
  }

  require_distinct(cert.witnesses);
  sort_witnesses(cert.witnesses);
  return cert;
}

Border initial_border(const Timeline& tl, int k) {
  const AllowableSequence& seq = tl.sequence();
  if (k < seq.delta() + 1 || k > seq.blue_count() / 2) {
    throw Error(ErrorCode::BadParams, "initial border rank outside delta+1..floor(b/2)");
  }
  const CurveSpec spec{ids_of(seq, Color::Blue), k};
  const CurveClass cls = classify(seq, spec);
  if (cls == CurveClass::Changing) {
    throw Error(ErrorCode::BadParams, "initial border needs a delta-preserving rank curve");
  }
  const WeightTrack trk = track(seq, spec);
  Border border;
  if (cls == CurveClass::GeDelta) {
    border = Border{Color::Blue, trk.element};
  } else {
    border.color = Color::Red;
    border.element.resize(static_cast<std::size_t>(tl.period()));
    for (int t = 0; t < tl.period(); ++t) {
      int found = -1;
      for (int q = trk.position_at(t) - 1; q >= 0 && found < 0; --q) {
        if (seq.color(tl.element(t, q)) == Color::Red) found = tl.element(t, q);
      }
      if (found < 0) throw Error(ErrorCode::ProofGap, "no red point left of the blue rank curve");
      border.element[static_cast<std::size_t>(t)] = found;
    }
  }
  if (const auto issues = check_border(tl, border); !issues.empty()) {
    throw Error(ErrorCode::ProofGap, "initial border fails " + issues.front().code + " at t = " +
                                         std::to_string(issues.front().t));
  }
  return border;
}

Partition partition_fgh(const Timeline& tl, const Border& gamma) {
  const AllowableSequence& seq = tl.sequence();
  const int left = tl.position(0, gamma.at(0));
  const int right = tl.position(0, gamma.at(tl.half_period()));
  Partition part;
  for (int p = 0; p < seq.size(); ++p) {
    const int id = tl.element(0, p);
    if (seq.color(id) != gamma.color) continue;
    if (p <= left) {
      part.f.push_back(id);
    } else if (p < right) {
      part.g.push_back(id);
    } else {
      part.h.push_back(id);
    }
  }
  return part;
}

namespace {

std::optional<Border> next_improvement(const Timeline& tl, const Border& cur) {
  const AllowableSequence& seq = tl.sequence();
  const Polarity pol(seq, cur.color);
  const int period = tl.period();
  const auto cur_pos = positions_of(tl, cur);
  const long cur_sum = position_sum(tl, cur);

  auto accept = [&](const Border& cand) {
    for (int t = 0; t < period; ++t) {
      if (tl.position(t, cand.at(t)) < cur_pos[static_cast<std::size_t>(t)]) return false;
    }
    return position_sum(tl, cand) > cur_sum && check_border(tl, cand).empty();
  };

  std::vector<std::vector<int>> families;
  const Partition part = partition_fgh(tl, cur);
  if (!part.g.empty()) families.push_back(part.g);
  families.push_back(ids_of(seq, cur.color));

  // R1: a rank curve strictly right of the border that never reaches delta
  // has an opposite-color point between it and the border at every time.
  for (const auto& family : families) {
    for (int k = 1; k <= static_cast<int>(family.size()); ++k) {
      const WeightTrack trk = track(seq, CurveSpec{family, k});
      bool applies = true;
      for (int t = 0; t < period && applies; ++t) {
        applies = pol.track_weight(trk, t) < pol.delta &&
                  trk.position_at(t) > cur_pos[static_cast<std::size_t>(t)];
      }
      if (!applies) continue;
      Border rho{opposite(cur.color), std::vector<int>(static_cast<std::size_t>(period), -1)};
      bool complete = true;
      for (int t = 0; t < period && complete; ++t) {
        for (int q = trk.position_at(t) - 1; q >= 0; --q) {
          if (seq.color(tl.element(t, q)) == rho.color) {
            rho.element[static_cast<std::size_t>(t)] = tl.element(t, q);
            break;
          }
        }
        complete = rho.element[static_cast<std::size_t>(t)] >= 0;
      }
      if (complete && accept(rho)) return rho;
    }
  }

  // R2: follow a rank curve wherever it runs right of the border while
  // keeping weight >= delta.
  for (const auto& family : families) {
    for (int k = 1; k <= static_cast<int>(family.size()); ++k) {
      const WeightTrack trk = track(seq, CurveSpec{family, k});
      std::vector<char> right(static_cast<std::size_t>(period));
      std::vector<char> heavy(static_cast<std::size_t>(period));
      for (int t = 0; t < period; ++t) {
        right[static_cast<std::size_t>(t)] = trk.position_at(t) > cur_pos[static_cast<std::size_t>(t)];
        heavy[static_cast<std::size_t>(t)] = pol.track_weight(trk, t) >= pol.delta;
      }
      if (std::all_of(heavy.begin(), heavy.end(), [](char c) { return c != 0; })) {
        Border whole{cur.color, trk.element};
        if (accept(whole)) return whole;
      }
      if (std::all_of(right.begin(), right.end(), [](char c) { return c != 0; })) continue;
      int start = 0;
      while (right[static_cast<std::size_t>(start)] || !right[static_cast<std::size_t>(tl.wrap(start + 1))]) {
        ++start;
        if (start == period) break;
      }
      if (start == period) continue;
      // start is a time just before a run of `right`; walk the cycle once.
      for (int s = 1; s <= period;) {
        const int t0 = start + s;
        if (!right[static_cast<std::size_t>(tl.wrap(t0))]) {
          ++s;
          continue;
        }
        int len = 0;
        bool all_heavy = true;
        while (s + len <= period && right[static_cast<std::size_t>(tl.wrap(t0 + len))]) {
          all_heavy = all_heavy && heavy[static_cast<std::size_t>(tl.wrap(t0 + len))];
          ++len;
        }
        if (all_heavy) {
          Border spliced = cur;
          for (int d = 0; d < len; ++d) {
            spliced.element[static_cast<std::size_t>(tl.wrap(t0 + d))] = trk.element_at(t0 + d);
          }
          if (accept(spliced)) return spliced;
        }
        s += len;
      }
    }
  }
  return std::nullopt;
}

/// Best border of one color dominating `floor`, if it beats `best_sum`.
void search_color(const Timeline& tl, Color color, const Border& floor, Border& best,
                  long& best_sum) {
  const AllowableSequence& seq = tl.sequence();
  const Polarity pol(seq, color);
  const auto ids = ids_of(seq, color);
  const int c = static_cast<int>(ids.size());
  if (c == 0) return;
  const int n = seq.size();
  const int half = tl.half_period();
  const int period = tl.period();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < c; ++i) index[static_cast<std::size_t>(ids[i])] = i;

  const auto floor_pos = positions_of(tl, floor);
  // ok[t * c + i]: element i may sit on the curve at time t.
  std::vector<char> ok(static_cast<std::size_t>(period) * c);
  // Weakly continuous successors at t+1 of element i at t (itself and its
  // same-color neighbours in pi^{t+1}).
  std::vector<std::array<int, 3>> moves(static_cast<std::size_t>(period) * c);
  for (int t = 0; t < period; ++t) {
    for (int i = 0; i < c; ++i) {
      const int id = ids[i];
      ok[static_cast<std::size_t>(t) * c + i] =
          pol.weight(tl, t, id) >= pol.delta &&
          tl.position(t, id) >= floor_pos[static_cast<std::size_t>(t)];
      std::array<int, 3> m{i, -1, -1};
      const int p = tl.position(t + 1, id);
      for (int q = p - 1; q >= 0; --q) {
        if (seq.color(tl.element(t + 1, q)) == color) {
          m[1] = index[static_cast<std::size_t>(tl.element(t + 1, q))];
          break;
        }
      }
      for (int q = p + 1; q < n; ++q) {
        if (seq.color(tl.element(t + 1, q)) == color) {
          m[2] = index[static_cast<std::size_t>(tl.element(t + 1, q))];
          break;
        }
      }
      moves[static_cast<std::size_t>(t) * c + i] = m;
    }
  }
  auto feasible = [&](int t, int ia, int ib) {
    return ok[static_cast<std::size_t>(t) * c + ia] &&
           ok[static_cast<std::size_t>(tl.wrap(t + half)) * c + ib] &&
           tl.position(t, ids[ia]) + tl.position(t + half, ids[ib]) < n - 1;
  };
  auto gain = [&](int t, int ia, int ib) {
    return static_cast<long>(tl.position(t, ids[ia]) + tl.position(t + half, ids[ib]));
  };

  const int states = c * c;
  std::vector<long> cur(static_cast<std::size_t>(states));
  std::vector<long> next(static_cast<std::size_t>(states));
  std::vector<int> parent(static_cast<std::size_t>(half + 1) * states);
  for (int ia0 = 0; ia0 < c; ++ia0) {
    for (int ib0 = 0; ib0 < c; ++ib0) {
      if (!feasible(0, ia0, ib0)) continue;
      std::fill(cur.begin(), cur.end(), -1);
      cur[static_cast<std::size_t>(ia0 * c + ib0)] = gain(0, ia0, ib0);
      for (int t = 0; t < half; ++t) {
        std::fill(next.begin(), next.end(), -1);
        for (int s = 0; s < states; ++s) {
          const long here = cur[static_cast<std::size_t>(s)];
          if (here < 0) continue;
          const auto& ma = moves[static_cast<std::size_t>(t) * c + s / c];
          const auto& mb = moves[static_cast<std::size_t>(t + half) * c + s % c];
          for (int a : ma) {
            if (a < 0) continue;
            for (int b : mb) {
              if (b < 0 || !feasible(t + 1, a, b)) continue;
              const long value = here + (t + 1 < half ? gain(t + 1, a, b) : 0);
              const int s2 = a * c + b;
              if (value > next[static_cast<std::size_t>(s2)]) {
                next[static_cast<std::size_t>(s2)] = value;
                parent[static_cast<std::size_t>(t + 1) * states + s2] = s;
              }
            }
          }
        }
        std::swap(cur, next);
      }
      const int closing = ib0 * c + ia0;
      const long total = cur[static_cast<std::size_t>(closing)];
      if (total <= best_sum) continue;
      Border found{color, std::vector<int>(static_cast<std::size_t>(period))};
      int s = closing;
      for (int t = half; t > 0; --t) {
        s = parent[static_cast<std::size_t>(t) * states + s];
        found.element[static_cast<std::size_t>(t - 1)] = ids[s / c];
        found.element[static_cast<std::size_t>(t - 1 + half)] = ids[s % c];
      }
      best = std::move(found);
      best_sum = total;
    }
  }
}

}  // namespace

Border maximize_border(const Timeline& tl, const Border& start) {
  if (const auto issues = check_border(tl, start); !issues.empty()) {
    throw Error(ErrorCode::BadParams, "maximize_border needs a valid start border");
  }
  Border cur = start;
  while (auto better = next_improvement(tl, cur)) cur = std::move(*better);
  return cur;
}

Border dominating_border(const Timeline& tl, const Border& floor) {
  Border best = floor;
  long best_sum = check_border(tl, floor).empty() ? position_sum(tl, floor) : -1;
  search_color(tl, Color::Blue, floor, best, best_sum);
  search_color(tl, Color::Red, floor, best, best_sum);
  if (best_sum < 0) throw Error(ErrorCode::BadParams, "no border dominates the given curve");
  return best;
}

Certificate case2_certificate(const Timeline& tl, const Border& gamma) {
  const AllowableSequence& seq = tl.sequence();
  if (const auto issues = check_border(tl, gamma); !issues.empty()) {
    throw Error(ErrorCode::BadParams, "case2_certificate needs a valid border");
  }
  const Polarity pol(seq, gamma.color);
  const int half = tl.half_period();
  const int delta = pol.delta;
  const Partition part = partition_fgh(tl, gamma);
  const auto f_mask = membership_mask(seq.size(), part.f);
  const auto g_mask = membership_mask(seq.size(), part.g);
  const auto h_mask = membership_mask(seq.size(), part.h);
  const int nf = static_cast<int>(part.f.size());
  const int ng = static_cast<int>(part.g.size());
  const int nh = static_cast<int>(part.h.size());

  Certificate cert;
  cert.kind = CertificateCase::Case2;
  cert.border = gamma;
  cert.f_set = part.f;
  cert.g_set = part.g;
  cert.h_set = part.h;
  cert.target = nf + ng + nh;
  cert.ledger.charge_f.assign(static_cast<std::size_t>(nf), 0);
  cert.ledger.charge_h.assign(static_cast<std::size_t>(nh), 0);

  auto gap = [](const std::string& what) { return Error(ErrorCode::ProofGap, what); };
  // Raw (unsigned) weight for logs.
  auto raw = [&](int w) { return pol.sign * w; };

  std::vector<WeightTrack> f_tracks, h_tracks;
  for (int j = 1; j <= nf; ++j) f_tracks.push_back(track(seq, CurveSpec{part.f, j}));
  for (int i = 1; i <= nh; ++i) h_tracks.push_back(track(seq, CurveSpec{part.h, i}));

  std::vector<int> f_drops(static_cast<std::size_t>(nf), 0);
  std::vector<int> h_rises(static_cast<std::size_t>(nh), 0);

  // Every drop of an F curve and every rise of an H curve inside the half
  // period is a balanced transposition: F points only move right past G and
  // H points, H points only move left past F and G points.
  auto scan_outer = [&](char family, const std::vector<WeightTrack>& tracks,
                        const std::vector<char>& mask, std::vector<int>& counts, bool drop) {
    for (int r = 1; r <= static_cast<int>(tracks.size()); ++r) {
      const WeightTrack& trk = tracks[static_cast<std::size_t>(r - 1)];
      CurveLog log{curve_name(family, r), {}};
      for (int t = 0; t < half; ++t) {
        const int w0 = pol.track_weight(trk, t);
        const int w1 = pol.track_weight(trk, t + 1);
        const bool is_drop = w0 == delta && w1 == delta - 1;
        const bool is_rise = w0 == delta - 1 && w1 == delta;
        if (!is_drop && !is_rise) continue;
        if (is_drop == drop) {
          if (classify_change(tl, mask, r, t, drop, pol.primary) != ChangeBranch::Balanced) {
            throw gap(log.curve + " change at t = " + std::to_string(t) + " is not balanced");
          }
          const WitnessGroup group = family == 'F' ? WitnessGroup::F : WitnessGroup::H;
          cert.witnesses.push_back(witness_at(tl, t, group, r));
          ++counts[static_cast<std::size_t>(r - 1)];
          log.events.push_back({t, raw(w0), raw(w1), "witness"});
        } else {
          log.events.push_back({t, raw(w0), raw(w1), "change"});
        }
      }
      cert.logs.push_back(std::move(log));
    }
  };
  scan_outer('F', f_tracks, f_mask, f_drops, true);
  scan_outer('H', h_tracks, h_mask, h_rises, false);

  // Confined changes of the G curves. G_{|G|+1-m} is the mirror of G_m on
  // the half period, so scanning every rank covers both.
  std::vector<int> confined(static_cast<std::size_t>(ng) + 1, 0);
  int g_witnesses = 0;
  for (int m = 1; m <= ng; ++m) {
    const WeightTrack trk = track(seq, CurveSpec{part.g, m});
    CurveLog log{curve_name('G', m), {}};
    for (int t = 0; t < half; ++t) {
      const int w0 = pol.track_weight(trk, t);
      const int w1 = pol.track_weight(trk, t + 1);
      const bool is_drop = w0 == delta && w1 == delta - 1;
      const bool is_rise = w0 == delta - 1 && w1 == delta;
      if (!is_drop && !is_rise) continue;
      const int g0 = trk.position_at(t);
      const int g1 = trk.position_at(t + 1);
      const bool right_of_border = g0 >= tl.position(t, gamma.at(t)) &&
                                   g1 > tl.position(t + 1, gamma.at(t + 1));
      const bool left_of_mirror = g0 <= tl.position(t, gamma.at(t + half)) &&
                                  g1 < tl.position(t + 1, gamma.at(t + 1 + half));
      if (!right_of_border || !left_of_mirror) {
        log.events.push_back({t, raw(w0), raw(w1), "change"});
        continue;
      }
      ++confined[static_cast<std::size_t>(m)];
      const ChangeBranch branch = classify_change(tl, g_mask, m, t, is_drop, pol.primary);
      if (branch == ChangeBranch::Balanced) {
        cert.witnesses.push_back(witness_at(tl, t, WitnessGroup::G, m));
        ++g_witnesses;
        log.events.push_back({t, raw(w0), raw(w1), "witness"});
        continue;
      }
      if (branch != ChangeBranch::OutsideSwap) {
        throw gap(log.curve + " confined change at t = " + std::to_string(t) + " has no valid shape");
      }
      // The G point trades places with a same-color point outside G: an F
      // point moving right on a drop, an H point moving left on a rise.
      const int p = seq.swap_position(tl.wrap(t) + 1);
      const int other = is_drop ? tl.element(t, p) : tl.element(t, p + 1);
      const auto& target_mask = is_drop ? f_mask : h_mask;
      if (!target_mask[static_cast<std::size_t>(other)]) {
        throw gap(log.curve + " confined change at t = " + std::to_string(t) +
                  " swaps with a point outside " + (is_drop ? "F" : "H"));
      }
      const int rank = tl.count_left(t, p + (is_drop ? 0 : 1), target_mask) + 1;
      const WeightTrack& target = (is_drop ? f_tracks : h_tracks)[static_cast<std::size_t>(rank - 1)];
      const int tw0 = pol.track_weight(target, t);
      const int tw1 = pol.track_weight(target, t + 1);
      const bool mirrored = is_drop ? (tw0 == delta - 1 && tw1 == delta) : (tw0 == delta && tw1 == delta - 1);
      if (target.element_at(t) != other || !mirrored) {
        throw gap("charge target of " + log.curve + " at t = " + std::to_string(t) +
                  " does not change weight as required");
      }
      auto& charges = is_drop ? cert.ledger.charge_f : cert.ledger.charge_h;
      ++charges[static_cast<std::size_t>(rank - 1)];
      cert.ledger.transactions.push_back({t, m, is_drop ? 'F' : 'H', rank});
      log.events.push_back({t, raw(w0), raw(w1), "charge"});
    }
    cert.logs.push_back(std::move(log));
  }

  std::vector<std::string> failures;
  for (int k = 1; k <= ng / 2; ++k) {
    if (confined[static_cast<std::size_t>(k)] + confined[static_cast<std::size_t>(ng + 1 - k)] < 2) {
      failures.push_back("G_" + std::to_string(k) + " with its mirror has fewer than 2 confined changes");
    }
  }
  if (ng % 2 == 1 && confined[static_cast<std::size_t>((ng + 1) / 2)] < 1) {
    failures.push_back("middle G curve has no confined change");
  }
  for (int j = 1; j <= nf; ++j) {
    if (f_drops[static_cast<std::size_t>(j - 1)] < cert.ledger.charge_f[static_cast<std::size_t>(j - 1)] + 1) {
      failures.push_back("claim A fails for F_" + std::to_string(j));
    }
  }
  for (int i = 1; i <= nh; ++i) {
    if (h_rises[static_cast<std::size_t>(i - 1)] < cert.ledger.charge_h[static_cast<std::size_t>(i - 1)] + 1) {
      failures.push_back("claim B fails for H_" + std::to_string(i));
    }
  }
  if (static_cast<int>(cert.witnesses.size()) < cert.target) {
    failures.push_back("only " + std::to_string(cert.witnesses.size()) + " witnesses for target " +
                       std::to_string(cert.target));
  }
  if (!failures.empty()) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < failures.size(); ++i) msg << (i ? "; " : "") << failures[i];
    throw Error(ErrorCode::InsufficientBorder, msg.str());
  }
  (void)g_witnesses;

  require_distinct(cert.witnesses);
  sort_witnesses(cert.witnesses);
  return cert;
}

Certificate certify(const Timeline& tl) {
  const CaseSplit split = classify_case(tl);
  if (split.kind == CertificateCase::Case1) return case1_certificate(tl);

  Border border = maximize_border(tl, initial_border(tl, split.preserving_rank));
  try {
    return case2_certificate(tl, border);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientBorder) throw;
    const Border better = dominating_border(tl, border);
    if (position_sum(tl, better) == position_sum(tl, border)) {
      throw Error(ErrorCode::ProofGap, std::string("maximal border is insufficient: ") + e.what());
    }
    try {
      Certificate cert = case2_certificate(tl, better);
      cert.exact_border_search = true;
      return cert;
    } catch (const Error& again) {
      if (again.code() != ErrorCode::InsufficientBorder) throw;
      throw Error(ErrorCode::ProofGap, std::string("maximal border is insufficient: ") + again.what());
    }
  }
}

Certificate certify(const AllowableSequence& seq) {
  const Timeline tl(seq);
  return certify(tl);
}

std::vector<std::string> lemma3_violations(const Timeline& tl, const Border& border) {
  const AllowableSequence& seq = tl.sequence();
  const Polarity pol(seq, border.color);
  const auto border_pos = positions_of(tl, border);
  std::vector<std::string> out;
  const Partition part = partition_fgh(tl, border);
  const std::vector<std::pair<char, std::vector<int>>> families{{'G', part.g},
                                                                {'Q', ids_of(seq, border.color)}};
  for (const auto& [name, family] : families) {
    for (int k = 1; k <= static_cast<int>(family.size()); ++k) {
      const WeightTrack trk = track(seq, CurveSpec{family, k});
      bool below = true;
      bool inside = true;
      for (int t = 0; t < tl.period(); ++t) {
        below = below && pol.track_weight(trk, t) < pol.delta;
        inside = inside && trk.position_at(t) > border_pos[static_cast<std::size_t>(t)] &&
                 trk.position_at(t) < border_pos[static_cast<std::size_t>(tl.wrap(t + tl.half_period()))];
      }
      if (below && inside) out.push_back(curve_name(name, k));
    }
  }
  return out;
}

VerificationReport verify_certificate(const AllowableSequence& seq, const Certificate& cert) {
  VerificationReport report;
  auto fail = [&](std::string msg) { report.diagnostics.push_back(std::move(msg)); };
  const int n = seq.size();
  const int delta = seq.delta();
  const int period = seq.period();

  if (cert.target < seq.red_count()) fail("TARGET_BELOW_R");
  if (static_cast<int>(cert.witnesses.size()) < cert.target) fail("COUNT_BELOW_TARGET");

  std::set<PairKey> seen;
  for (const auto& w : cert.witnesses) {
    if (!seen.insert(w.key()).second) {
      fail("DUPLICATE_PAIR {" + std::to_string(w.key().first) + "," + std::to_string(w.key().second) + "}");
    }
  }

  std::vector<char> f_mask(static_cast<std::size_t>(n), 0), g_mask = f_mask, h_mask = f_mask;
  auto fill_mask = [&](std::vector<char>& mask, const std::vector<int>& ids) {
    for (int id : ids) {
      if (id >= 0 && id < n) mask[static_cast<std::size_t>(id)] = 1;
    }
  };
  fill_mask(f_mask, cert.f_set);
  fill_mask(g_mask, cert.g_set);
  fill_mask(h_mask, cert.h_set);

  for (const auto& w : cert.witnesses) {
    const std::string tag = "witness {" + std::to_string(w.key().first) + "," +
                            std::to_string(w.key().second) + "}";
    if (w.blue_id < 0 || w.blue_id >= n || w.red_id < 0 || w.red_id >= n) {
      fail("BAD_ID " + tag);
      continue;
    }
    if (seq.color(w.blue_id) != Color::Blue || seq.color(w.red_id) != Color::Red) {
      fail("WRONG_COLORS " + tag);
    }
    if (w.t < 1 || w.t > period) {
      fail("BAD_TIME " + tag);
      continue;
    }
    const auto before = permutation_at(seq, w.t - 1);
    const auto after = permutation_at(seq, w.t);
    int p = -1;
    for (int q = 0; q + 1 < n; ++q) {
      if (before[q] != after[q]) {
        p = q;
        break;
      }
    }
    const bool swaps_pair = p >= 0 && make_pair_key(before[p], before[p + 1]) == w.key() &&
                            after[p] == before[p + 1] && after[p + 1] == before[p];
    if (!swaps_pair) {
      fail("NOT_ADJACENT_SWAP " + tag);
      continue;
    }
    int left = 0;
    for (int q = 0; q < p; ++q) left += seq.weight(before[q]);
    if (left != delta || w.left_weight != delta) fail("NOT_BALANCED " + tag);

    const std::vector<char>* group_mask = nullptr;
    std::vector<char> blue_mask;
    switch (w.group) {
      case WitnessGroup::B:
        blue_mask.assign(static_cast<std::size_t>(n), 0);
        for (int id = 0; id < n; ++id) blue_mask[static_cast<std::size_t>(id)] = seq.color(id) == Color::Blue;
        group_mask = &blue_mask;
        break;
      case WitnessGroup::F: group_mask = &f_mask; break;
      case WitnessGroup::G: group_mask = &g_mask; break;
      case WitnessGroup::H: group_mask = &h_mask; break;
    }
    int members_left = 0;
    for (int q = 0; q < p; ++q) members_left += (*group_mask)[static_cast<std::size_t>(before[q])] ? 1 : 0;
    const bool involves_group = (*group_mask)[static_cast<std::size_t>(before[p])] ||
                                (*group_mask)[static_cast<std::size_t>(before[p + 1])];
    if (members_left != w.rank - 1 || !involves_group) fail("RANK_MISMATCH " + tag);
  }

  if (cert.kind == CertificateCase::Case1) {
    auto count_rank = [&](int k) {
      return std::count_if(cert.witnesses.begin(), cert.witnesses.end(), [&](const CertifiedWitness& w) {
        return w.group == WitnessGroup::B && w.rank == k;
      });
    };
    const int b = seq.blue_count();
    for (int k = delta + 1; k <= b / 2; ++k) {
      if (count_rank(k) < 2) fail("MISSING_RANK " + std::to_string(k));
    }
    if (b % 2 == 1 && seq.red_count() > 0 && count_rank((b + 1) / 2) < 1) {
      fail("MISSING_RANK " + std::to_string((b + 1) / 2));
    }
    if (cert.target != seq.red_count()) fail("TARGET_MISMATCH");
  } else {
    if (!cert.border || static_cast<int>(cert.border->element.size()) != period) {
      fail("MISSING_BORDER");
      report.ok = report.diagnostics.empty();
      return report;
    }
    const Border& border = *cert.border;
    const Color color = border.color;
    const auto pi0 = permutation_at(seq, 0);
    int left_pos = -1;
    int right_pos = -1;
    for (int q = 0; q < n; ++q) {
      if (pi0[q] == border.at(0)) left_pos = q;
      if (pi0[q] == border.at(seq.half_period())) right_pos = q;
    }
    std::vector<int> f, g, h;
    for (int q = 0; q < n; ++q) {
      if (seq.color(pi0[q]) != color) continue;
      (q <= left_pos ? f : q < right_pos ? g : h).push_back(pi0[q]);
    }
    if (f != cert.f_set || g != cert.g_set || h != cert.h_set) fail("PARTITION");
    const int nf = static_cast<int>(f.size());
    const int ng = static_cast<int>(g.size());
    const int nh = static_cast<int>(h.size());
    if (cert.target != nf + ng + nh) fail("TARGET_MISMATCH");

    const auto& ledger = cert.ledger;
    long charges = 0;
    bool ledger_ok = static_cast<int>(ledger.charge_f.size()) == nf &&
                     static_cast<int>(ledger.charge_h.size()) == nh;
    std::vector<int> recount_f(static_cast<std::size_t>(nf), 0), recount_h(static_cast<std::size_t>(nh), 0);
    for (const auto& tr : ledger.transactions) {
      auto& bucket = tr.target == 'F' ? recount_f : recount_h;
      if (tr.target_rank < 1 || tr.target_rank > static_cast<int>(bucket.size())) {
        ledger_ok = false;
        continue;
      }
      ++bucket[static_cast<std::size_t>(tr.target_rank - 1)];
    }
    if (ledger_ok) {
      ledger_ok = recount_f == ledger.charge_f && recount_h == ledger.charge_h;
      for (int c : ledger.charge_f) charges += c;
      for (int c : ledger.charge_h) charges += c;
    }
    if (!ledger_ok) fail("LEDGER");
    const auto outer = std::count_if(cert.witnesses.begin(), cert.witnesses.end(), [](const CertifiedWitness& w) {
      return w.group == WitnessGroup::F || w.group == WitnessGroup::H;
    });
    const auto inner = std::count_if(cert.witnesses.begin(), cert.witnesses.end(),
                                     [](const CertifiedWitness& w) { return w.group == WitnessGroup::G; });
    if (outer < nf + nh + charges) fail("LEDGER_I");
    if (inner < 2 * (ng / 2) + (ng % 2) - charges) fail("LEDGER_II");
  }

  report.ok = report.diagnostics.empty();
  return report;
}

}  // namespace balines
