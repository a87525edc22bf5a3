#include "balines/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "balines/error.hpp"

namespace balines {

AllowableSequence::AllowableSequence(std::vector<Color> colors, std::vector<int> pi0,
                                     std::vector<int> word)
    : colors_(std::move(colors)), pi0_(std::move(pi0)), word_(std::move(word)) {
  blue_ = static_cast<int>(std::count(colors_.begin(), colors_.end(), Color::Blue));
}

int AllowableSequence::swap_position(int t) const {
  const int half = half_period();
  if (t <= half) return word_[static_cast<std::size_t>(t - 1)];
  return size() - 2 - word_[static_cast<std::size_t>(t - half - 1)];
}

SequenceWalker::SequenceWalker(const AllowableSequence& seq)
    : seq_(&seq),
      perm_(seq.pi0().begin(), seq.pi0().end()),
      pos_(perm_.size()),
      prefix_(perm_.size() + 1, 0) {
  for (std::size_t p = 0; p < perm_.size(); ++p) {
    pos_[static_cast<std::size_t>(perm_[p])] = static_cast<int>(p);
    prefix_[p + 1] = prefix_[p] + seq.weight(perm_[p]);
  }
}

Transposition SequenceWalker::advance() {
  const int step = t_ + 1;
  const auto p = static_cast<std::size_t>(seq_->swap_position(step));
  Transposition tr{step, static_cast<int>(p), perm_[p], perm_[p + 1], prefix_[p]};
  std::swap(perm_[p], perm_[p + 1]);
  pos_[static_cast<std::size_t>(perm_[p])] = static_cast<int>(p);
  pos_[static_cast<std::size_t>(perm_[p + 1])] = static_cast<int>(p + 1);
  prefix_[p + 1] = prefix_[p] + seq_->weight(perm_[p]);
  t_ = step == seq_->period() ? 0 : step;
  return tr;
}

std::vector<int> permutation_at(const AllowableSequence& seq, std::int64_t t) {
  std::vector<int> perm(seq.pi0().begin(), seq.pi0().end());
  const std::int64_t period = seq.period();
  if (period == 0) return perm;
  std::int64_t m = t % period;
  if (m < 0) m += period;
  const bool reversed = m > seq.half_period();
  if (reversed) m -= seq.half_period();
  for (std::int64_t s = 0; s < m; ++s) {
    const auto p = static_cast<std::size_t>(seq.word()[static_cast<std::size_t>(s)]);
    std::swap(perm[p], perm[p + 1]);
  }
  if (reversed) std::reverse(perm.begin(), perm.end());
  return perm;
}

SequenceReport validate(const AllowableSequence& seq) {
  SequenceReport report;
  auto add = [&](std::string code, std::string detail) {
    report.issues.push_back({std::move(code), std::move(detail)});
  };
  const int n = seq.size();
  if (n < 2) {
    add("TOO_SMALL", "n = " + std::to_string(n));
    return report;
  }
  if (n % 2 != 0) add("ODD_COUNT", "n = " + std::to_string(n));
  if (seq.blue_count() < seq.red_count()) {
    add("COLOR_IMBALANCE", "b = " + std::to_string(seq.blue_count()) +
                               " < r = " + std::to_string(seq.red_count()));
  }

  std::vector<int> perm(seq.pi0().begin(), seq.pi0().end());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  if (sorted != ids) {
    add("BAD_PERMUTATION", "pi0 is not a permutation of 0..n-1");
    return report;
  }

  const auto word = seq.word();
  if (static_cast<int>(word.size()) != seq.half_period()) {
    add("LENGTH_MISMATCH", "word has " + std::to_string(word.size()) + " entries, expected " +
                               std::to_string(seq.half_period()));
  }

  std::vector<char> swapped(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t s = 0; s < word.size(); ++s) {
    const int p = word[s];
    if (p < 0 || p > n - 2) {
      add("POSITION_OUT_OF_RANGE", "entry " + std::to_string(s + 1) + " = " + std::to_string(p));
      continue;
    }
    const int a = std::min(perm[p], perm[p + 1]);
    const int b = std::max(perm[p], perm[p + 1]);
    char& seen = swapped[static_cast<std::size_t>(a) * n + b];
    if (seen) {
      add("REPEATED_PAIR", "{" + std::to_string(a) + "," + std::to_string(b) + "} at t = " +
                               std::to_string(s + 1));
    }
    seen = 1;
    std::swap(perm[p], perm[p + 1]);
  }
  std::vector<int> reversed(seq.pi0().rbegin(), seq.pi0().rend());
  if (perm != reversed) add("NOT_REVERSED", "pi^N is not the reverse of pi^0");
  return report;
}

namespace {

template <class Int>
AllowableSequence sweep(const detail::LatticeT<Int>& lat, std::vector<Color> colors) {
  using W = detail::Wide<Int>;
  const int n = lat.size();
  std::vector<detail::Direction<Int>> dirs;
  dirs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) dirs.push_back(detail::canonical_direction(lat, a, b));
  }
  std::sort(dirs.begin(), dirs.end(),
            [](const auto& u, const auto& v) { return detail::angle_less(u, v); });

  // Projection direction strictly between the last event and the first one
  // shifted by a half turn, so that a half-turn clockwise rotation meets the
  // events in decreasing angle.
  W vx, vy;
  if (dirs.size() == 1) {
    vx = -dirs.front().y;
    vy = dirs.front().x;
  } else {
    vx = dirs.back().x - dirs.front().x;
    vy = dirs.back().y - dirs.front().y;
  }
  const W dx = -vy;
  const W dy = vx;

  std::vector<W> proj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) proj[static_cast<std::size_t>(i)] = dx * W(lat.x[i]) + dy * W(lat.y[i]);
  std::vector<int> pi0(static_cast<std::size_t>(n));
  std::iota(pi0.begin(), pi0.end(), 0);
  std::sort(pi0.begin(), pi0.end(), [&](int a, int b) { return proj[a] < proj[b]; });
  for (int p = 0; p + 1 < n; ++p) {
    if (proj[pi0[p]] == proj[pi0[p + 1]]) {
      throw Error(ErrorCode::DegenerateInput, "equal projections on the initial direction");
    }
  }

  std::vector<int> perm = pi0;
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) pos[static_cast<std::size_t>(perm[p])] = p;
  std::vector<int> word;
  word.reserve(dirs.size());
  for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) {
    const int pa = pos[static_cast<std::size_t>(it->a)];
    const int pb = pos[static_cast<std::size_t>(it->b)];
    if (std::abs(pa - pb) != 1) {
      throw Error(ErrorCode::DegenerateInput, "swept pair is not adjacent");
    }
    const int p = std::min(pa, pb);
    word.push_back(p);
    std::swap(perm[p], perm[p + 1]);
    pos[static_cast<std::size_t>(perm[p])] = p;
    pos[static_cast<std::size_t>(perm[p + 1])] = p + 1;
  }
  return AllowableSequence(std::move(colors), std::move(pi0), std::move(word));
}

}  // namespace

AllowableSequence build_from_points(const Instance& inst) {
  const auto report = validate_general_position(inst);
  if (!report.clean()) {
    throw Error(ErrorCode::DegenerateInput,
                std::to_string(report.collinear_triples.size()) + " collinear triples, " +
                    std::to_string(report.parallel_pair_pairs.size()) + " parallel pair-pairs, " +
                    std::to_string(report.coincident_pairs.size()) + " coincident pairs");
  }
  return std::visit([&](const auto& lat) { return sweep(lat, inst.colors()); }, inst.lattice());
}

AllowableSequence random_sequence(int n, int blue_count, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0 || blue_count > n || blue_count < n - blue_count) {
    throw Error(ErrorCode::BadParams, "random_sequence needs even n >= 2 and b >= r, got n = " +
                                          std::to_string(n) + ", b = " + std::to_string(blue_count));
  }
  std::mt19937_64 rng(seed);
  std::vector<Color> colors(static_cast<std::size_t>(n), Color::Red);
  std::fill_n(colors.begin(), blue_count, Color::Blue);
  std::shuffle(colors.begin(), colors.end(), rng);

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<int> pi0 = perm;

  // Positions holding a not-yet-swapped adjacent pair (an ascent, since pi0
  // is the identity), kept in a vector with an index map for O(1) updates.
  std::vector<int> ascents;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  auto insert = [&](int p) {
    if (slot[p] >= 0) return;
    slot[p] = static_cast<int>(ascents.size());
    ascents.push_back(p);
  };
  auto erase = [&](int p) {
    if (slot[p] < 0) return;
    const int last = ascents.back();
    ascents[static_cast<std::size_t>(slot[p])] = last;
    slot[last] = slot[p];
    ascents.pop_back();
    slot[p] = -1;
  };
  auto refresh = [&](int p) {
    if (p < 0 || p > n - 2) return;
    if (perm[p] < perm[p + 1]) {
      insert(p);
    } else {
      erase(p);
    }
  };
  for (int p = 0; p + 1 < n; ++p) insert(p);

  const int half = n * (n - 1) / 2;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(half));
  for (int s = 0; s < half; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, ascents.size() - 1);
    const int p = ascents[pick(rng)];
    word.push_back(p);
    std::swap(perm[p], perm[p + 1]);
    refresh(p - 1);
    refresh(p);
    refresh(p + 1);
  }
  return AllowableSequence(std::move(colors), pi0, std::move(word));
}

AllowableSequence reverse_sequence(const AllowableSequence& seq) {
  const int n = seq.size();
  const int half = seq.half_period();
  std::vector<int> word(static_cast<std::size_t>(half));
  for (int s = 1; s <= half; ++s) {
    word[static_cast<std::size_t>(s - 1)] = n - 2 - seq.word()[static_cast<std::size_t>(half - s)];
  }
  return AllowableSequence(std::vector<Color>(seq.colors().begin(), seq.colors().end()),
                           std::vector<int>(seq.pi0().begin(), seq.pi0().end()), std::move(word));
}

}  // namespace balines
