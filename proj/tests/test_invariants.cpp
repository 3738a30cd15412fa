#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zsum/invariants.hpp"

using namespace zsum;

namespace {

std::string table(const char* name) { return std::string("T:") + ZSUM_CATALOG_DIR + "/tables/" + name + ".txt"; }

void check_witness(const InvariantResult& r, const GroupPtr& g) {
  switch (r.kind) {
    case Invariant::d:
      CHECK(r.witness.length() == r.value);
      CHECK(is_product_one_free(r.witness));
      break;
    case Invariant::D:
      CHECK(r.witness.length() == r.value);
      CHECK(is_atom(r.witness));
      break;
    case Invariant::eta:
      CHECK(r.witness.length() == r.value - 1);
      if (g->order() > 1) CHECK_FALSE(big_pi_upto(r.witness, g->max_element_order()).contains(0));
      break;
  }
}

}  // namespace

TEST_CASE("cyclic groups") {
  for (long n = 1; n <= 12; ++n) {
    CAPTURE(n);
    auto g = build_group(GroupSpec::cyclic(n));
    auto d = small_davenport(g);
    auto D = large_davenport(g);
    auto e = eta(g);
    CHECK(d.value == n - 1);
    CHECK(D.value == n);
    CHECK(e.value == n);
    CHECK(d.exhaustive);
    CHECK(D.exhaustive);
    CHECK(e.exhaustive);
    check_witness(d, g);
    check_witness(D, g);
    check_witness(e, g);
  }
}

TEST_CASE("trivial group conventions") {
  auto g = build_group("C:1");
  CHECK(small_davenport(g).value == 0);
  CHECK(large_davenport(g).value == 1);
  auto e = eta(g);
  CHECK(e.value == 1);
  CHECK_FALSE(e.note.empty());
}

TEST_CASE("frozen values on small groups") {
  struct Row {
    std::string spec;
    int d, D, eta;
  };
  // d and D were cross-checked against the brute-force oracles below where
  // feasible; eta against random sampling.
  const std::vector<Row> rows = {
      {"C:2x2", 2, 3, 4},        {"C:3x3", 4, 5, 7},         {"C:2x4", 4, 5, 6},       {"C:2x2x2", 3, 4, 8},
      {"C:2x6", 6, 7, 8},        {"F:2,3", 3, 6, 4},         {"D:8", 4, 6, 5},         {table("q8"), 4, 6, 5},
      {"D:10", 5, 10, 6},        {"D:12", 6, 9, 7},          {"MC:3,4,2", 6, 9, 7},    {table("a4"), 4, 7, 9},
      {"D:14", 7, 14, 8},        {"D:16", 8, 12, 9},         {"MC:8,2,3", 8, 12, 9},   {table("q16"), 8, 12, 9},
      {"M:2,4", 8, 10, 9},       {"MC:4,4,3", 6, 8, 9},      {table("c2xd8"), 5, 7, 7}, {table("c2xq8"), 5, 7, 7},
      {table("pauli"), 5, 7, 7}, {table("c2sq_c4"), 5, 7, 8},
  };
  for (const auto& row : rows) {
    CAPTURE(row.spec);
    auto g = build_group(row.spec);
    auto d = small_davenport(g);
    auto D = large_davenport(g);
    auto e = eta(g);
    CHECK(d.value == row.d);
    CHECK(D.value == row.D);
    CHECK(e.value == row.eta);
    CHECK((d.exhaustive && D.exhaustive && e.exhaustive));
    check_witness(d, g);
    check_witness(D, g);
    check_witness(e, g);
    CHECK(d.value + 1 <= D.value);
    CHECK(D.value <= static_cast<int>(g->order()));
    if (g->is_abelian()) CHECK(D.value == d.value + 1);
  }
}

TEST_CASE("d agrees with brute-force enumeration") {
  for (const std::string& spec : {std::string("C:2x2"), std::string("C:6"), std::string("F:2,3"), std::string("D:8"),
                                  table("q8"), std::string("C:2x4"), std::string("C:3x3")}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    CHECK(small_davenport(g).value == oracle::small_davenport(g));
  }
}

TEST_CASE("D agrees with direct atom enumeration") {
  for (const std::string& spec : {std::string("C:2x2"), std::string("C:5"), std::string("F:2,3"), std::string("D:8"),
                                  table("q8"), std::string("C:2x4")}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    int longest = 0;
    for (int len = 1; len <= static_cast<int>(g->order()); ++len)
      if (!atoms_of_length(g, len).empty()) longest = len;
    CHECK(large_davenport(g).value == longest);
  }
  // atoms_of_length itself against the definition on F:2,3.
  auto s3 = build_group("F:2,3");
  std::vector<Element> elems;
  for (Element x = 0; x < 6; ++x) elems.push_back(x);
  for (int len = 1; len <= 6; ++len) {
    std::size_t count = 0;
    oracle::for_each_multiset(elems, len, [&](const std::vector<Element>& t) { count += oracle::atom(s3, t); });
    CHECK(atoms_of_length(s3, len, false).size() == count);
  }
}

TEST_CASE("automorphism pruning does not change values") {
  SearchBudget plain;
  plain.use_automorphisms = false;
  for (const std::string& spec : {std::string("F:2,3"), std::string("D:8"), std::string("C:3x3"), table("a4"),
                                  std::string("MC:3,4,2"), std::string("D:10")}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    CHECK(small_davenport(g).value == small_davenport(g, plain).value);
    CHECK(large_davenport(g).value == large_davenport(g, plain).value);
    CHECK(eta(g).value == eta(g, plain).value);
  }
}

TEST_CASE("canonical forms are automorphism invariant") {
  auto g = build_group("D:8");
  auto auts = search_automorphisms(g, true);
  CHECK(auts.size() == 8);
  CHECK(search_automorphisms(g, false).size() == 1);
  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    auto s = Sequence::from_terms(g, oracle::random_terms(g, 5, rng));
    auto c = canonical_form(s, auts);
    for (const auto& phi : auts) {
      Sequence image(g);
      for (Element x : s.terms()) image.add(phi[x]);
      CHECK(canonical_form(image, auts) == c);
    }
  }
}

TEST_CASE("every sequence of length eta has a short product-one subsequence") {
  std::mt19937_64 rng(43);
  for (const std::string& spec : {std::string("C:2x2"), std::string("C:3x3"), std::string("F:2,3"), std::string("D:8"),
                                  table("a4"), std::string("D:10")}) {
    CAPTURE(spec);
    auto g = build_group(spec);
    const int value = eta(g).value;
    for (int it = 0; it < 300; ++it) {
      auto s = Sequence::from_terms(g, oracle::random_terms(g, value, rng));
      CHECK(big_pi_upto(s, g->max_element_order()).contains(0));
    }
  }
}

TEST_CASE("budgets produce flagged partial results") {
  auto g = build_group("F:3,7");
  SearchBudget tiny;
  tiny.max_nodes = 5;
  auto d = small_davenport(g, tiny);
  CHECK_FALSE(d.exhaustive);
  CHECK(d.value <= 8);
  check_witness(d, g);
  auto D = large_davenport(g, tiny);
  CHECK_FALSE(D.exhaustive);
  CHECK(D.value <= 14);
  check_witness(D, g);
  auto e = eta(g, tiny);
  CHECK_FALSE(e.exhaustive);
  check_witness(e, g);
}

TEST_CASE("searches are deterministic") {
  auto g = build_group("MC:3,4,2");
  for (auto inv : {Invariant::d, Invariant::D, Invariant::eta}) {
    auto a = compute_invariant(inv, g);
    auto b = compute_invariant(inv, g);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
  }
}

TEST_CASE("invariant names") {
  CHECK(parse_invariant("d") == Invariant::d);
  CHECK(parse_invariant("D") == Invariant::D);
  CHECK(parse_invariant("eta") == Invariant::eta);
  CHECK(to_string(Invariant::eta) == "eta");
  CHECK_THROWS(parse_invariant("x"));
}
