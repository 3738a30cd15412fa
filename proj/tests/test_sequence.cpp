#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zsum/error.hpp"
#include "zsum/lattice.hpp"
#include "zsum/sequence.hpp"

using namespace zsum;
using oracle::must;

namespace {

std::set<Element> as_set(const ElementSet& s) {
  auto e = s.elements();
  return {e.begin(), e.end()};
}

Sequence seq(const GroupPtr& g, const char* text) { return parse_sequence(g, text); }

std::vector<Element> outside(const GroupPtr& g, const Subgroup& h) {
  std::vector<Element> out;
  for (Element x = 0; x < g->order(); ++x)
    if (!h.contains(x)) out.push_back(x);
  return out;
}

std::vector<Element> nonidentity(const Subgroup& h) {
  std::vector<Element> out;
  for (Element x : h.members.elements())
    if (x != 0) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("sequence basics") {
  auto g = build_group("F:2,3");
  auto s = seq(g, "a, a, t");
  CHECK(s.length() == 3);
  CHECK(s.multiplicity(must(g, "a")) == 2);
  CHECK(s.max_multiplicity() == 2);
  CHECK(s.support().size() == 2);
  CHECK(s.to_string() == "a[2] . t");
  CHECK(seq(g, "a[2] . t") == s);
  CHECK(seq(g, "#1 #1 #3") == s);
  CHECK(seq(g, "t").divides(s));
  CHECK_FALSE(seq(g, "t, t").divides(s));
  CHECK(s.without(seq(g, "a")) == seq(g, "a, t"));
  CHECK((seq(g, "a") * seq(g, "a, t")) == s);
  CHECK_THROWS_AS(seq(g, "x"), Error);
  CHECK(seq(g, "a[0], t").length() == 1);
  CHECK_THROWS_AS(seq(g, "a[-1]"), Error);
  CHECK_THROWS_AS(seq(g, "a[2x]"), Error);
  CHECK_THROWS_AS(seq(g, "a[2"), Error);

  CHECK(count_in(s, ElementSet::all(g)) == 3);
  CHECK(count_in(s, commutator_subgroup(g).members) == 2);
  CHECK(count_in(s, ElementSet(g)) == 0);
}

TEST_CASE("pi_set examples") {
  auto g = build_group("F:2,3");
  CHECK(as_set(pi_set(Sequence(g))) == std::set<Element>{0});
  CHECK(as_set(pi_set(seq(g, "ta"))) == std::set<Element>{must(g, "ta")});
  CHECK(as_set(pi_set(seq(g, "t, a"))) == std::set<Element>{must(g, "ta"), must(g, "ta^2")});
  // tau^{p-1} . a^{[q-1]} . tau a^{r+1} . a^{[q-1]} with p=2, q=3, r=2.
  auto atom_seq = seq(g, "t, a[2], t, a[2]");
  CHECK(pi_set(atom_seq).contains(0));
  CHECK(is_atom(atom_seq));
}

TEST_CASE("big_pi examples") {
  auto f37 = build_group("F:3,7");
  CHECK_FALSE(big_pi(seq(f37, "a[6], t[2]")).contains(0));
  auto c4 = build_group("C:4");
  auto s = seq(c4, "a, a, a^3");
  CHECK(as_set(big_pi(s)) == std::set<Element>{0, 1, 2, 3});
  CHECK_FALSE(big_pi_upto(s, 1).contains(0));
  CHECK(big_pi_upto(s, 2).contains(0));
  CHECK(big_pi_upto(seq(c4, "1, a"), 1).contains(0));
}

TEST_CASE("product-one predicates") {
  auto nd = build_group("ND:5");
  CHECK(is_product_one(Sequence(nd)));
  CHECK(is_product_one_free(Sequence(nd)));
  CHECK_FALSE(is_atom(Sequence(nd)));
  CHECK(is_product_one_free(seq(nd, "a[4], t[3]")));
  auto f25 = build_group("F:2,5");
  CHECK(is_product_one(seq(f25, "a[5]")));
  for (Element x = 1; x < f25->order(); ++x) {
    auto s = Sequence::from_terms(f25, {x, f25->inv(x)});
    CHECK(is_atom(s));
  }
  auto s3 = build_group("F:2,3");
  CHECK_FALSE(is_atom(seq(s3, "a[6]")));
  CHECK(is_atom(seq(s3, "a[3]")));
}

TEST_CASE("budget overflow is reported") {
  auto g = build_group("C:2x2x2");
  Sequence s(g);
  for (Element x = 1; x < 8; ++x) s.add(x, 3);
  CHECK_THROWS_AS(pi_set(s, 1000), Error);
  CHECK_NOTHROW(pi_set(s));
}

TEST_CASE("ordered products and cyclic shifts") {
  auto g = build_group("F:2,3");
  auto t = must(g, "t");
  auto a = must(g, "a");
  OrderedSequence s(g, {t, a});
  CHECK(ordered_product(s) == must(g, "ta"));
  auto shifted = cyclic_shift(s, 1);
  CHECK(shifted.terms() == std::vector<Element>{a, t});
  CHECK(ordered_product(shifted) == g->conj(ordered_product(s), t));
  CHECK(cyclic_shift(s, 0) == s);
  CHECK(cyclic_shift(s, 2) == s);

  std::mt19937_64 rng(7);
  auto f = build_group("F:3,7");
  for (int it = 0; it < 200; ++it) {
    OrderedSequence x(f, oracle::random_terms(f, 6, rng));
    const long k = static_cast<long>(rng() % 6);
    auto y = cyclic_shift(x, k);
    CHECK(y.multiset() == x.multiset());
    Element c = ordered_product(x.slice(0, static_cast<std::size_t>(k)));
    CHECK(ordered_product(y) == f->conj(ordered_product(x), c));
    if (ordered_product(x) == 0) CHECK(ordered_product(y) == 0);
  }
}

TEST_CASE("ordering_with_product realizes every member of pi") {
  std::mt19937_64 rng(11);
  auto g = build_group("M:3,3");
  for (int it = 0; it < 100; ++it) {
    auto s = Sequence::from_terms(g, oracle::random_terms(g, 6, rng));
    auto pi = pi_set(s);
    for (Element x = 0; x < g->order(); ++x) {
      auto ord = ordering_with_product(s, x);
      CHECK(ord.has_value() == pi.contains(x));
      if (ord) {
        CHECK(ordered_product(*ord) == x);
        CHECK(ord->multiset() == s);
      }
    }
  }
}

TEST_CASE("pi_set matches brute force over orderings") {
  std::mt19937_64 rng(20240517);
  const std::vector<std::string> specs = {"C:6", "C:2x2", "F:2,3", "D:8", "T:" ZSUM_CATALOG_DIR "/tables/q8.txt",
                                          "D:10", "D:12", "MC:3,4,2", "T:" ZSUM_CATALOG_DIR "/tables/a4.txt",
                                          "C:3x3"};
  std::vector<GroupPtr> groups;
  for (const auto& s : specs) groups.push_back(build_group(s));
  for (int it = 0; it < 500; ++it) {
    const auto& g = groups[rng() % groups.size()];
    const int len = static_cast<int>(rng() % 8);
    auto terms = oracle::random_terms(g, len, rng);
    auto s = Sequence::from_terms(g, terms);
    CAPTURE(g->label());
    CAPTURE(s.to_string());
    CHECK(as_set(pi_set(s)) == oracle::products_all_orderings(g, terms));
  }
}

TEST_CASE("predicates match brute force") {
  std::mt19937_64 rng(3);
  for (const char* spec : {"F:2,3", "D:8", "C:2x4", "D:10"}) {
    auto g = build_group(spec);
    for (int it = 0; it < 150; ++it) {
      const int len = 1 + static_cast<int>(rng() % 6);
      auto terms = oracle::random_terms(g, len, rng);
      std::sort(terms.begin(), terms.end());
      auto s = Sequence::from_terms(g, terms);
      CAPTURE(s.to_string());
      CHECK(is_product_one(s) == oracle::product_one(g, terms));
      CHECK(is_product_one_free(s) == oracle::product_one_free(g, terms));
      CHECK(is_atom(s) == oracle::atom(g, terms));
      std::set<Element> pi;
      oracle::for_each_submultiset(terms, [&](const std::vector<Element>& t) {
        auto p = oracle::products_all_orderings(g, t);
        pi.insert(p.begin(), p.end());
      });
      CHECK(as_set(big_pi(s)) == pi);
    }
  }
}

TEST_CASE("lattice push and pop") {
  auto g = build_group("F:2,3");
  auto rm = std::make_shared<const RightMultiplier>(*g);
  std::mt19937_64 rng(5);
  auto as_mask = [&](const std::uint64_t* words) {
    ElementSet out(g);
    for (Element x = 0; x < g->order(); ++x)
      if ((words[x >> 6] >> (x & 63)) & 1u) out.insert(x);
    return out;
  };
  for (int it = 0; it < 40; ++it) {
    auto terms = oracle::random_terms(g, 7, rng);
    std::sort(terms.begin(), terms.end());
    ProductLattice lat(rm, kDefaultDpBudget);
    const int cap = 3;
    ProductLattice capped(rm, kDefaultDpBudget, cap);
    Sequence s(g);
    std::vector<ElementSet> unions;
    for (Element x : terms) {
      lat.push(x);
      capped.push(x);
      s.add(x);
      CHECK(as_mask(lat.union_set()) == big_pi(s));
      CHECK(as_mask(capped.union_set()) == big_pi_upto(s, cap));
      CHECK(as_mask(lat.set(lat.full_rank())) == pi_set(s));
      unions.push_back(big_pi(s));
    }
    while (lat.length() > 1) {
      lat.pop();
      unions.pop_back();
      CHECK(as_mask(lat.union_set()) == unions.back());
    }
  }
}

TEST_CASE("product set identities") {
  std::mt19937_64 rng(17);
  for (const char* spec : {"F:3,7", "ND:5", "M:3,3", "D:12"}) {
    auto g = build_group(spec);
    auto gp = commutator_subgroup(g);
    auto proj = quotient(g, gp);
    for (int it = 0; it < 100; ++it) {
      auto terms = oracle::random_terms(g, 1 + static_cast<int>(rng() % 6), rng);
      auto s = Sequence::from_terms(g, terms);
      auto pi = pi_set(s);
      const Element x = static_cast<Element>(rng() % g->order());
      auto sx = s;
      sx.add(x);
      auto pix = pi_set(sx);
      CHECK(pi.times(x).subset_of(pix));
      CHECK(pi.times_left(x).subset_of(pix));
      // pi(S) lies in a single G'-coset, inside G' when the image is product-one.
      std::set<Element> images;
      for (Element y : pi.elements()) images.insert(proj.projection[y]);
      CHECK(images.size() == 1);
      std::vector<Element> image_terms;
      for (Element y : terms) image_terms.push_back(proj.projection[y]);
      if (oracle::product_one(proj.image, image_terms)) CHECK(pi.subset_of(gp.members));
    }
  }
  auto ab = build_group("C:2x6");
  for (int it = 0; it < 50; ++it)
    CHECK(pi_set(Sequence::from_terms(ab, oracle::random_terms(ab, 5, rng))).size() == 1);
}

// ---------------------------------------------------------------------------
// Product-set lower bounds in F_pq and the near-dihedral group.

TEST_CASE("pi(x.S) >= min(q, |x.S|) for S over G' minus 1 and x outside G'") {
  for (const char* spec : {"F:2,3", "F:2,5", "F:2,7", "F:3,7"}) {
    auto g = build_group(spec);
    const long q = g->presentation()->n;
    auto gp = commutator_subgroup(g);
    auto inner = nonidentity(gp);
    auto outer = outside(g, gp);
    for (int len = 0; len <= q - 1; ++len) {
      oracle::for_each_multiset(inner, len, [&](const std::vector<Element>& terms) {
        for (Element x : outer) {
          auto s = Sequence::from_terms(g, terms);
          s.add(x);
          CHECK(static_cast<long>(pi_set(s).size()) >= std::min<long>(q, s.length()));
        }
      });
    }
  }
}

TEST_CASE("pi(g1.g2.S) >= min(q, 2|S|+1) when g1, g2, g1g2 lie outside G'") {
  auto g = build_group("F:3,7");
  auto gp = commutator_subgroup(g);
  auto inner = nonidentity(gp);
  auto outer = outside(g, gp);
  for (int len = 0; len <= 3; ++len) {
    oracle::for_each_multiset(inner, len, [&](const std::vector<Element>& terms) {
      for (Element g1 : outer)
        for (Element g2 : outer) {
          if (g2 < g1 || gp.contains(g->mul(g1, g2))) continue;
          auto s = Sequence::from_terms(g, terms);
          s.add(g1);
          s.add(g2);
          CHECK(static_cast<long>(pi_set(s).size()) >= std::min<long>(7, 2 * len + 1));
        }
    });
  }
}

TEST_CASE("pi(S) >= min(p, |S|) when supp(S) generates F_pq") {
  std::mt19937_64 rng(29);
  for (const char* spec : {"F:2,3", "F:2,5", "F:2,7", "F:3,7"}) {
    auto g = build_group(spec);
    const long p = g->presentation()->m;
    std::vector<Element> elems;
    for (Element x = 1; x < g->order(); ++x) elems.push_back(x);
    for (int len = 1; len <= 3; ++len)
      oracle::for_each_multiset(elems, len, [&](const std::vector<Element>& terms) {
        if (subgroup_generated(g, terms).size() != g->order()) return;
        CHECK(static_cast<long>(pi_set(Sequence::from_terms(g, terms)).size()) >= std::min<long>(p, len));
      });
    for (int it = 0; it < 300; ++it) {
      auto terms = oracle::random_terms(g, 1 + static_cast<int>(rng() % 8), rng, false);
      if (subgroup_generated(g, terms).size() != g->order()) continue;
      CHECK(static_cast<long>(pi_set(Sequence::from_terms(g, terms)).size()) >=
            std::min<long>(p, static_cast<long>(terms.size())));
    }
  }
}

TEST_CASE("1 in Pi(S) when pi(S) lies in G' and |S| >= q") {
  std::mt19937_64 rng(31);
  for (const char* spec : {"F:2,3", "F:2,5", "F:2,7", "F:3,7"}) {
    auto g = build_group(spec);
    const long q = g->presentation()->n;
    auto gp = commutator_subgroup(g);
    std::vector<Element> elems;
    for (Element x = 0; x < g->order(); ++x) elems.push_back(x);
    if (q <= 5)
      oracle::for_each_multiset(elems, static_cast<int>(q), [&](const std::vector<Element>& terms) {
        auto s = Sequence::from_terms(g, terms);
        if (pi_set(s).subset_of(gp.members)) CHECK(big_pi(s).contains(0));
      });
    int tested = 0;
    for (int it = 0; it < 3000 && tested < 300; ++it) {
      auto s = Sequence::from_terms(g, oracle::random_terms(g, static_cast<int>(q + rng() % 3), rng));
      if (!pi_set(s).subset_of(gp.members)) continue;
      ++tested;
      CHECK(big_pi(s).contains(0));
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("near-dihedral: 1 in pi(S) or |pi(S)| >= |S| when the image of S is an atom") {
  auto g = build_group("ND:5");
  auto gp = commutator_subgroup(g);
  auto proj = quotient(g, gp);
  std::vector<Element> elems;
  for (Element x = 0; x < g->order(); ++x) elems.push_back(x);
  int atoms = 0;
  // Atoms of C_4 have length at most 4.
  for (int len = 1; len <= 4; ++len)
    oracle::for_each_multiset(elems, len, [&](const std::vector<Element>& terms) {
      std::vector<Element> image;
      for (Element x : terms) image.push_back(proj.projection[x]);
      std::sort(image.begin(), image.end());
      if (!oracle::atom(proj.image, image)) return;
      ++atoms;
      auto pi = pi_set(Sequence::from_terms(g, terms));
      CHECK((pi.contains(0) || static_cast<int>(pi.size()) >= len));
    });
  CHECK(atoms > 0);
}
