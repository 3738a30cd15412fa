#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/element_set.hpp"

namespace zsum {

// Parsed form of `C:n`, `C:n1xn2x...`, `D:2n`, `MC:n,m,r`, `F:p,q[,r]`,
// `M:p,n`, `ND:q`, `T:path`.
struct GroupSpec {
  enum class Kind { cyclic, abelian, dihedral, metacyclic, fpq, mpn, near_dihedral, table };

  Kind kind = Kind::cyclic;
  std::vector<long> params;
  std::string path;

  static GroupSpec cyclic(long n) { return {Kind::cyclic, {n}, {}}; }
  static GroupSpec abelian(std::vector<long> factors) { return {Kind::abelian, std::move(factors), {}}; }
  static GroupSpec dihedral(long order) { return {Kind::dihedral, {order}, {}}; }
  static GroupSpec metacyclic(long n, long m, long r) { return {Kind::metacyclic, {n, m, r}, {}}; }
  static GroupSpec fpq(long p, long q) { return {Kind::fpq, {p, q}, {}}; }
  static GroupSpec fpq(long p, long q, long r) { return {Kind::fpq, {p, q, r}, {}}; }
  static GroupSpec mpn(long p, long n) { return {Kind::mpn, {p, n}, {}}; }
  static GroupSpec near_dihedral(long q) { return {Kind::near_dihedral, {q}, {}}; }
  static GroupSpec table(std::string path) { return {Kind::table, {}, std::move(path)}; }
};

GroupSpec parse_group_spec(std::string_view text);
std::string to_string(const GroupSpec& spec);

// C_n ⋊ C_m with generators a (order n) and t (order m), a t = t a^r.
// Element t^i a^j has index i*n + j.
struct MetacyclicPresentation {
  long n = 1;
  long m = 1;
  long r = 1;

  Element alpha_power(long j) const;
  Element element(long i, long j) const;
};

// Immutable Cayley-table group. Index 0 is the identity.
class FiniteGroup {
 public:
  // Validates the table (closure, identity at 0, inverses, associativity).
  FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names,
              std::string label, std::optional<MetacyclicPresentation> presentation = std::nullopt);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  Element pow(Element a, long k) const;
  Element conj(Element a, Element h) const { return mul(mul(inv(h), a), h); }  // h⁻¹ a h
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

  int element_order(Element a) const { return elem_order_[a]; }
  int max_element_order() const { return max_order_; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::string& name(Element a) const { return names_[a]; }
  std::optional<Element> find(std::string_view name) const;
  const std::string& label() const { return label_; }
  std::span<const Element> table() const { return table_; }
  const std::optional<MetacyclicPresentation>& presentation() const { return presentation_; }

  // FNV-1a over the multiplication table.
  std::uint64_t fingerprint() const;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<int> elem_order_;
  std::vector<std::string> names_;
  std::string label_;
  std::optional<MetacyclicPresentation> presentation_;
  int max_order_ = 1;
  int exponent_ = 1;
  bool abelian_ = true;
};

struct Subgroup {
  GroupPtr parent;
  ElementSet members;
  bool normal = false;  // set when normality has been established

  std::size_t size() const { return members.size(); }
  bool contains(Element g) const { return members.contains(g); }
};

struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr image;
  std::vector<Element> projection;
};

GroupPtr build_group(const GroupSpec& spec);
GroupPtr build_group(std::string_view spec_text);
GroupPtr load_table(const std::string& path);
GroupPtr group_from_table(std::size_t order, std::vector<Element> table, std::string label);

Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, Element x);
Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
ElementSet conjugation_orbit(const GroupPtr& g, const Subgroup& h, Element a);
std::vector<ElementSet> conjugacy_classes(const GroupPtr& g);
bool is_normal(const Subgroup& h);
bool is_subgroup(const ElementSet& members);
QuotientMap quotient(const GroupPtr& g, const Subgroup& n);

// Every subgroup, sorted by size then by mask.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
// Re-indexes a subgroup as a standalone group; `embedding[i]` is the parent element.
GroupPtr subgroup_as_group(const Subgroup& h, std::vector<Element>* embedding = nullptr);

// Automorphisms as element permutations (identity automorphism first).
std::vector<std::vector<Element>> automorphism_group(const GroupPtr& g, std::size_t order_limit = 64);

bool is_cyclic(const FiniteGroup& g);
// Prime-power order; returns the prime or 0.
long prime_power_base(std::size_t n);
bool is_prime(long n);
std::vector<long> prime_factors(long n);
long smallest_prime_factor(long n);

}  // namespace zsum
