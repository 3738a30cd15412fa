#pragma once

#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/invariants.hpp"

namespace zsum {

enum class BoundId {
  basic_upper,
  basic_lower,
  commutator,
  commutator_refined,
  pgroup,
  pgroup_noncyclic,
  nilpotent,
  d_quotient,
  fpq_exact_D,
  fpq_exact_d,
  fpq_eta,
  near_dihedral_exact_d,
  two_over_p,
  three_over_four,
  mpn_lower,
};

const std::vector<BoundId>& all_bounds();
std::string_view to_string(BoundId id);
BoundId parse_bound(std::string_view text);

struct Rational {
  long num = 0;
  long den = 1;
};
std::string to_string(const Rational& r);
// Sign of a - b.
int compare(const Rational& a, const Rational& b);

// Closed range [lo, hi] known for an integer quantity; hi = kUnknown when
// nothing better than "finite" is known.
struct Interval {
  static constexpr long kUnknown = LONG_MAX;
  long lo = 0;
  long hi = kUnknown;

  static Interval exact(long v) { return {v, v}; }
  bool is_exact() const { return lo == hi; }
};

// What an invariant result certifies: the value exactly when exhaustive,
// otherwise the witness lower end and the best classical upper end.
Interval certified_range(const InvariantResult& r, std::size_t group_order);

// C_n ⋊ C_m realized inside a concrete group: ord(alpha) = n, ord(tau) = m,
// tau⁻¹ alpha tau = alpha^r, and tau^i alpha^j runs over G exactly once.
struct PresentationMatch {
  Element alpha = 0;
  Element tau = 0;
  long n = 1;
  long m = 1;
  long r = 1;

  Element element(const FiniteGroup& g, long i, long j) const;
};

struct FpqMatch {
  long p, q;
  PresentationMatch pres;
};
struct MpnMatch {
  long p, n;
  PresentationMatch pres;
};
struct NearDihedralMatch {
  long q;
  PresentationMatch pres;
};

std::optional<FpqMatch> match_fpq(const GroupPtr& g);
std::optional<MpnMatch> match_mpn(const GroupPtr& g);
std::optional<NearDihedralMatch> match_near_dihedral(const GroupPtr& g);
// Dihedral of order 2n with n odd (n >= 3).
bool is_dihedral_odd(const GroupPtr& g);
bool is_nilpotent(const FiniteGroup& g);
// Maximal proper subgroups.
std::vector<Subgroup> maximal_subgroups(const GroupPtr& g);

// Computed values feeding the bound formulas.
struct SubgroupValue {
  Subgroup subgroup;
  InvariantResult result;
};

struct BoundContext {
  std::optional<InvariantResult> d;
  std::optional<InvariantResult> D;
  std::optional<InvariantResult> eta;
  std::optional<std::vector<SubgroupValue>> maximal_D;  // D(H), H maximal
  std::optional<std::vector<SubgroupValue>> quotient_d;  // d(H), G/H ≅ C_p²
};

enum class BoundDirection { upper, lower, exact };
enum class BoundStatus { holds, tight, violated, consistent, unchecked };
std::string_view to_string(BoundStatus s);
std::string_view to_string(BoundDirection d);

struct BoundEvaluation {
  BoundId id;
  Invariant target = Invariant::D;
  BoundDirection direction = BoundDirection::upper;
  bool applicable = false;
  std::string reason;  // why not applicable, or what the value is made of
  Rational value;      // value from the lower ends of its inputs
  Rational value_hi;   // equal to value when all inputs are exact
  bool conditional = false;
  BoundStatus status = BoundStatus::unchecked;
};

// Evaluates the formula and applicability; status is left unchecked.
// Throws not_applicable / missing_context.
BoundEvaluation evaluate_bound(BoundId id, const GroupPtr& g, const BoundContext& ctx);
// Evaluates and compares against the context; never throws for
// inapplicable bounds (applicable = false instead).
BoundEvaluation check_bound(BoundId id, const GroupPtr& g, const BoundContext& ctx);

enum class WitnessKind { fpq_atom, fpq_free, mpn_atom, near_dihedral_free };
std::string_view to_string(WitnessKind k);
WitnessKind parse_witness_kind(std::string_view text);

struct Witness {
  WitnessKind kind;
  GroupPtr group;
  Sequence sequence;
  int expected_length = 0;
  bool expects_atom = false;  // otherwise product-one-free
};

// Explicit extremal sequences in the canonical presented groups.
// fpq_atom takes (p, q[, r]), fpq_free (p, q), mpn_atom (p, n),
// near_dihedral_free (q).
Witness make_witness(WitnessKind kind, const std::vector<long>& params);
// Same sequences inside an arbitrary group matched to the family.
std::optional<Witness> witness_in_group(WitnessKind kind, const GroupPtr& g);

struct WitnessCheck {
  WitnessKind kind;
  Sequence sequence;
  int expected_length = 0;
  bool expects_atom = false;
  bool length_ok = false;
  bool predicate_ok = false;
  bool passed() const { return length_ok && predicate_ok; }
};
WitnessCheck check_witness(const Witness& w, std::size_t dp_budget = kDefaultDpBudget);

enum class EqualityCheck { confirmed, violated, unknown };
std::string_view to_string(EqualityCheck e);

struct BoundReport {
  GroupPtr group;
  InvariantResult d, D, eta;
  std::vector<BoundEvaluation> bounds;
  std::vector<WitnessCheck> witnesses;
  // Commutator bound: equality exactly when G is abelian.
  EqualityCheck commutator_equality = EqualityCheck::unknown;
  std::vector<std::string> violations;
  double seconds = 0.0;
};

BoundReport verify_group(const GroupPtr& g, const SearchBudget& budget = {});

// Smallest applicable upper bound on D(G) (floored) among the bounds whose
// inputs are known from `ctx`, with its id.
std::optional<std::pair<long, BoundId>> best_upper_bound(const GroupPtr& g, const BoundContext& ctx);

}  // namespace zsum
