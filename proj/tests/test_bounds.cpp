#include "doctest.h"
#include "oracles.hpp"
#include "zsum/bounds.hpp"
#include "zsum/error.hpp"

using namespace zsum;

namespace {

BoundContext full_context(const GroupPtr& g) {
  BoundContext ctx;
  ctx.d = small_davenport(g);
  ctx.D = large_davenport(g);
  ctx.eta = eta(g);
  return ctx;
}

std::string value_of(BoundId id, const GroupPtr& g, const BoundContext& ctx = {}) {
  return to_string(evaluate_bound(id, g, ctx).value);
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(compare({1, 2}, {2, 4}) == 0);
  CHECK(compare({2, 3}, {3, 4}) < 0);
  CHECK(compare({7, 1}, {13, 2}) > 0);
  CHECK(to_string(Rational{27, 2}) == "27/2");
  CHECK(to_string(Rational{14, 1}) == "14");
}

TEST_CASE("bound formulas on small examples") {
  auto c6 = build_group("C:6");
  auto ctx6 = full_context(c6);
  auto ev = check_bound(BoundId::commutator, c6, ctx6);
  CHECK(to_string(ev.value) == "6");
  CHECK(ev.status == BoundStatus::tight);

  auto m27 = build_group("M:3,3");
  CHECK(value_of(BoundId::pgroup, m27) == "13");
  CHECK(value_of(BoundId::pgroup_noncyclic, m27) == "15");
  CHECK(value_of(BoundId::mpn_lower, m27) == "12");

  auto f37 = build_group("F:3,7");
  CHECK(value_of(BoundId::two_over_p, f37) == "14");
  CHECK(value_of(BoundId::fpq_exact_D, f37) == "14");
  CHECK(value_of(BoundId::fpq_exact_d, f37) == "8");
  CHECK(value_of(BoundId::fpq_eta, f37) == "10");
  CHECK(value_of(BoundId::fpq_eta, build_group("F:2,3")) == "4");

  auto nd = build_group("MC:5,4,2");
  CHECK(value_of(BoundId::near_dihedral_exact_d, nd) == "7");
  CHECK(value_of(BoundId::three_over_four, nd) == "15");

  auto best = best_upper_bound(f37, {});
  REQUIRE(best.has_value());
  CHECK(best->first == 14);
}

TEST_CASE("applicability") {
  auto c8 = build_group("C:8");
  CHECK_THROWS_AS(evaluate_bound(BoundId::pgroup, c8, {}), Error);
  CHECK_THROWS_AS(evaluate_bound(BoundId::two_over_p, c8, {}), Error);
  CHECK_THROWS_AS(evaluate_bound(BoundId::fpq_exact_D, build_group("D:8"), {}), Error);
  CHECK_THROWS_AS(evaluate_bound(BoundId::three_over_four, build_group("D:10"), {}), Error);
  CHECK_NOTHROW(evaluate_bound(BoundId::three_over_four, build_group("D:8"), {}));
  CHECK_THROWS_AS(evaluate_bound(BoundId::near_dihedral_exact_d, build_group("F:2,5"), {}), Error);
  CHECK_THROWS_AS(evaluate_bound(BoundId::mpn_lower, build_group("C:2x2x2"), {}), Error);
  // D_8 has the M_{2^3} presentation.
  CHECK(value_of(BoundId::mpn_lower, build_group("D:8")) == "6");

  try {
    evaluate_bound(BoundId::basic_lower, c8, {});
    FAIL("expected missing context");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::missing_context);
  }
  try {
    evaluate_bound(BoundId::pgroup, c8, {});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_applicable);
  }
  auto ev = check_bound(BoundId::pgroup, c8, {});
  CHECK_FALSE(ev.applicable);
  CHECK_FALSE(ev.reason.empty());

  for (BoundId id : all_bounds()) CHECK(parse_bound(to_string(id)) == id);
  CHECK_THROWS(parse_bound("nope"));
}

TEST_CASE("family recognition") {
  auto f = match_fpq(build_group("F:3,7"));
  REQUIRE(f.has_value());
  CHECK(f->p == 3);
  CHECK(f->q == 7);
  auto d10 = match_fpq(build_group("D:10"));
  REQUIRE(d10.has_value());
  CHECK(d10->p == 2);
  CHECK(d10->q == 5);
  CHECK_FALSE(match_fpq(build_group("D:8")).has_value());

  auto m = match_mpn(build_group("M:3,3"));
  REQUIRE(m.has_value());
  CHECK(m->p == 3);
  CHECK(m->n == 3);
  auto m16 = match_mpn(build_group("M:2,4"));
  REQUIRE(m16.has_value());
  CHECK(m16->n == 4);

  auto nd = match_near_dihedral(build_group("MC:5,4,2"));
  REQUIRE(nd.has_value());
  CHECK(nd->q == 5);
  CHECK_FALSE(match_near_dihedral(build_group("MC:3,4,2")).has_value());

  CHECK(is_dihedral_odd(build_group("D:10")));
  CHECK(is_dihedral_odd(build_group("F:2,7")));
  CHECK_FALSE(is_dihedral_odd(build_group("D:8")));
  CHECK_FALSE(is_dihedral_odd(build_group("D:12")));
  CHECK(is_nilpotent(*build_group("M:3,3")));
  CHECK(is_nilpotent(*build_group("C:6")));
  CHECK_FALSE(is_nilpotent(*build_group("F:2,3")));

  std::vector<std::size_t> sizes;
  for (const auto& h : maximal_subgroups(build_group("F:2,3"))) sizes.push_back(h.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 2, 2, 3});
}

TEST_CASE("witness constructions") {
  for (auto [p, q] : {std::pair{2L, 3L}, {2L, 5L}, {2L, 7L}, {3L, 7L}, {2L, 11L}, {5L, 11L}, {3L, 13L}, {2L, 13L}}) {
    CAPTURE(p);
    CAPTURE(q);
    auto atom = check_witness(make_witness(WitnessKind::fpq_atom, {p, q}));
    CHECK(atom.sequence.length() == 2 * q);
    CHECK(atom.passed());
    auto free = check_witness(make_witness(WitnessKind::fpq_free, {p, q}));
    CHECK(free.sequence.length() == q + p - 2);
    CHECK(free.passed());
  }
  // Every admissible r for F_{3,7}.
  for (long r : {2L, 4L}) CHECK(check_witness(make_witness(WitnessKind::fpq_atom, {3, 7, r})).passed());

  for (auto [p, n] : {std::pair{3L, 3L}, {2L, 3L}, {2L, 4L}}) {
    auto w = check_witness(make_witness(WitnessKind::mpn_atom, {p, n}));
    long pn1 = 1;
    for (long k = 1; k < n; ++k) pn1 *= p;
    CHECK(w.sequence.length() == pn1 + p);
    CHECK(w.passed());
  }
  for (long q : {5L, 13L}) {
    auto w = check_witness(make_witness(WitnessKind::near_dihedral_free, {q}));
    CHECK(w.sequence.length() == q + 2);
    CHECK(w.passed());
  }

  CHECK_THROWS_AS(make_witness(WitnessKind::fpq_atom, {3, 5}), Error);
  CHECK_THROWS_AS(make_witness(WitnessKind::fpq_atom, {2}), Error);
  CHECK_THROWS_AS(make_witness(WitnessKind::near_dihedral_free, {7}), Error);
  CHECK_THROWS_AS(make_witness(WitnessKind::mpn_atom, {3, 2}), Error);

  // Same sequences inside groups that are only isomorphic to the family.
  auto in_mc = witness_in_group(WitnessKind::near_dihedral_free, build_group("MC:5,4,2"));
  REQUIRE(in_mc.has_value());
  CHECK(check_witness(*in_mc).passed());
  auto in_d10 = witness_in_group(WitnessKind::fpq_atom, build_group("D:10"));
  REQUIRE(in_d10.has_value());
  CHECK(check_witness(*in_d10).passed());
  CHECK_FALSE(witness_in_group(WitnessKind::fpq_atom, build_group("D:8")).has_value());
}

TEST_CASE("the fpq atom matches its definition") {
  auto w = make_witness(WitnessKind::fpq_atom, {2, 3});
  auto terms = w.sequence.terms();
  CHECK(oracle::atom(w.group, terms));
}

TEST_CASE("certified ranges") {
  InvariantResult r;
  r.kind = Invariant::D;
  r.value = 9;
  r.exhaustive = true;
  CHECK(certified_range(r, 12).is_exact());
  r.exhaustive = false;
  auto iv = certified_range(r, 12);
  CHECK(iv.lo == 9);
  CHECK(iv.hi == 12);
  r.kind = Invariant::d;
  CHECK(certified_range(r, 12).hi == 11);
  r.kind = Invariant::eta;
  CHECK(certified_range(r, 12).hi == Interval::kUnknown);
}

TEST_CASE("verify reports") {
  auto s3 = verify_group(build_group("F:2,3"));
  CHECK(s3.violations.empty());
  CHECK(s3.d.value == 3);
  CHECK(s3.D.value == 6);
  CHECK(s3.commutator_equality == EqualityCheck::confirmed);
  for (const auto& ev : s3.bounds) {
    if (!ev.applicable) continue;
    CAPTURE(to_string(ev.id));
    CHECK(ev.status != BoundStatus::violated);
    if (ev.id == BoundId::fpq_exact_D || ev.id == BoundId::fpq_exact_d) CHECK(ev.status == BoundStatus::tight);
  }
  CHECK_FALSE(s3.witnesses.empty());

  auto trivial = verify_group(build_group("C:1"));
  CHECK(trivial.violations.empty());
  CHECK(trivial.d.value == 0);
  CHECK(trivial.D.value == 1);

  auto nd = verify_group(build_group("MC:5,4,2"));
  CHECK(nd.violations.empty());
  CHECK(nd.d.value == 7);
  bool seen = false;
  for (const auto& ev : nd.bounds)
    if (ev.id == BoundId::three_over_four) {
      seen = ev.applicable;
      CHECK(to_string(ev.value) == "15");
    }
  CHECK(seen);

  auto c6 = verify_group(build_group("C:6"));
  CHECK(c6.commutator_equality == EqualityCheck::confirmed);
  CHECK(c6.violations.empty());
}

TEST_CASE("budget gaps leave bounds unchecked rather than violated") {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  auto rep = verify_group(build_group("F:3,7"), tiny);
  CHECK(rep.violations.empty());
  CHECK_FALSE(rep.D.exhaustive);
}
