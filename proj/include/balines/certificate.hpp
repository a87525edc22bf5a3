#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balines/balance.hpp"
#include "balines/curves.hpp"

namespace balines {

/// A periodic curve given by its element at each time of [0, 2N).
struct Border {
  Color color = Color::Blue;
  std::vector<int> element;

  int at(int t) const {
    const int period = static_cast<int>(element.size());
    const int m = t % period;
    return element[static_cast<std::size_t>(m < 0 ? m + period : m)];
  }
  friend bool operator==(const Border&, const Border&) = default;
};

struct BorderIssue {
  std::string code;  ///< WRONG_COLOR, WEIGHT, CONTINUITY, NOT_LEFT_OF_MIRROR, LENGTH
  int t = 0;
};

/// Border conditions: color, weight threshold (blue >= delta, red <= delta),
/// weak continuity and strict precedence over the mirror at every time.
std::vector<BorderIssue> check_border(const Timeline& tl, const Border& border);

/// Sum over one period of the border's positions; strictly increases under
/// every improvement step.
long position_sum(const Timeline& tl, const Border& border);

enum class CertificateCase { Case1, Case2 };

struct CaseSplit {
  CertificateCase kind = CertificateCase::Case1;
  /// Least delta-preserving rank of the blue rank curves (Case2 only).
  int preserving_rank = 0;
};

/// Case1 when every blue rank curve B_k with delta+1 <= k <= floor(b/2) is
/// delta-changing (vacuously when the range is empty).
CaseSplit classify_case(const Timeline& tl);

/// Which curve family detected a witness.
enum class WitnessGroup { B, F, G, H };

const char* to_string(WitnessGroup g);

struct CertifiedWitness {
  int blue_id = 0;
  int red_id = 0;
  int t = 0;  ///< the transposition tau_t, t in 1..2N
  int left_weight = 0;
  WitnessGroup group = WitnessGroup::B;
  int rank = 0;  ///< rank of the detecting curve within its group

  PairKey key() const { return make_pair_key(blue_id, red_id); }
};

struct ChargeTransaction {
  int t = 0;           ///< weight change between t and t+1
  int g_rank = 0;      ///< G curve whose confined change caused it
  char target = 'F';   ///< 'F' or 'H'
  int target_rank = 0;
};

struct ChargeLedger {
  std::vector<int> charge_f;
  std::vector<int> charge_h;
  std::vector<ChargeTransaction> transactions;
};

struct CurveEvent {
  int t = 0;
  int from = 0;
  int to = 0;
  std::string kind;  ///< witness, charge, confined, change
};

struct CurveLog {
  std::string curve;
  std::vector<CurveEvent> events;
};

struct Certificate {
  CertificateCase kind = CertificateCase::Case1;
  int target = 0;
  std::vector<CertifiedWitness> witnesses;  ///< sorted by pair

  // Case2 only.
  std::optional<Border> border;
  std::vector<int> f_set;
  std::vector<int> g_set;
  std::vector<int> h_set;
  ChargeLedger ledger;
  bool exact_border_search = false;

  std::vector<CurveLog> logs;
};

Certificate case1_certificate(const Timeline& tl);

/// B_k itself when it is >= delta, else the nearest red point left of B_k.
Border initial_border(const Timeline& tl, int k);

/// Applies the two local improvement rules until neither changes the border.
/// R1 replaces the border by the nearest opposite-color curve left of a
/// rank curve that lies strictly right of it and stays below delta; R2 adopts
/// or splices in a rank curve that stays >= delta where it runs right of the
/// border. Every accepted step dominates the previous border pointwise.
Border maximize_border(const Timeline& tl, const Border& start);

/// A border of maximum position sum among all borders (either color) that
/// dominate `floor` pointwise. Such a border is maximal in the pointwise
/// order. Exact layered search over (element at t, element at t+N) pairs.
Border dominating_border(const Timeline& tl, const Border& floor);

struct Partition {
  std::vector<int> f;
  std::vector<int> g;
  std::vector<int> h;
};

/// Splits the border's color class by position in pi^0 relative to the
/// border and its mirror: F at or left of the border, H at or right of the
/// mirror, G strictly between.
Partition partition_fgh(const Timeline& tl, const Border& gamma);

/// Half-period F/G/H scan with charge bookkeeping. Throws InsufficientBorder
/// when a counting obligation fails and ProofGap when a detected event does
/// not have the shape the argument requires.
Certificate case2_certificate(const Timeline& tl, const Border& gamma);

Certificate certify(const Timeline& tl);
Certificate certify(const AllowableSequence& seq);

/// Rank curves (of G and of the whole border color) that stay below delta
/// yet lie strictly between the border and its mirror at every time.
/// Nonempty means the border is not maximal. Curves reaching past the mirror
/// are not covered: the nearest opposite-color curve they induce can fail
/// the mirror condition.
std::vector<std::string> lemma3_violations(const Timeline& tl, const Border& border);

struct VerificationReport {
  bool ok = false;
  std::vector<std::string> diagnostics;
};

/// Independent checker: recomputes every witness from scratch permutations.
VerificationReport verify_certificate(const AllowableSequence& seq, const Certificate& cert);

}  // namespace balines
