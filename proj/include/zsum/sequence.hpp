#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsum/element_set.hpp"

namespace zsum {

inline constexpr std::size_t kDefaultDpBudget = std::size_t{1} << 22;

// Unordered multiset of group elements.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(GroupPtr group);
  Sequence(GroupPtr group, std::vector<int> multiplicities);
  static Sequence from_terms(GroupPtr group, const std::vector<Element>& terms);

  const GroupPtr& group() const { return group_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  int multiplicity(Element g) const { return mult_[g]; }
  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  int max_multiplicity() const;

  void add(Element g, int count = 1);
  void remove(Element g, int count = 1);

  std::vector<Element> support() const;
  // Terms in non-decreasing index order.
  std::vector<Element> terms() const;
  bool divides(const Sequence& other) const;
  Sequence operator*(const Sequence& other) const;
  // other⁻¹·this; other must divide this.
  Sequence without(const Sequence& other) const;

  std::vector<std::string> term_names() const;
  std::string to_string() const;

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.mult_ == b.mult_; }

 private:
  GroupPtr group_;
  std::vector<int> mult_;
  int length_ = 0;
};

// Sequence with a fixed order of terms.
class OrderedSequence {
 public:
  OrderedSequence() = default;
  OrderedSequence(GroupPtr group, std::vector<Element> terms) : group_(std::move(group)), terms_(std::move(terms)) {}

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Element operator[](std::size_t i) const { return terms_[i]; }

  Sequence multiset() const { return Sequence::from_terms(group_, terms_); }
  OrderedSequence slice(std::size_t begin, std::size_t end) const;
  std::vector<std::string> term_names() const;
  std::string to_string() const;

  friend bool operator==(const OrderedSequence& a, const OrderedSequence& b) { return a.terms_ == b.terms_; }

 private:
  GroupPtr group_;
  std::vector<Element> terms_;
};

// π(S): products over all orderings; {1} for the empty sequence.
ElementSet pi_set(const Sequence& s, std::size_t dp_budget = kDefaultDpBudget);
// Π(S): union of π(T) over nontrivial T | S.
ElementSet big_pi(const Sequence& s, std::size_t dp_budget = kDefaultDpBudget);
// Π_n(S): as big_pi restricted to 1 <= |T| <= n.
ElementSet big_pi_upto(const Sequence& s, int n, std::size_t dp_budget = kDefaultDpBudget);

bool is_product_one(const Sequence& s, std::size_t dp_budget = kDefaultDpBudget);
bool is_product_one_free(const Sequence& s, std::size_t dp_budget = kDefaultDpBudget);
bool is_atom(const Sequence& s, std::size_t dp_budget = kDefaultDpBudget);

// An ordering of s with the given product, if one exists.
std::optional<OrderedSequence> ordering_with_product(const Sequence& s, Element target,
                                                     std::size_t dp_budget = kDefaultDpBudget);

Element ordered_product(const OrderedSequence& s);
// Moves the first k (mod |S*|) terms to the end.
OrderedSequence cyclic_shift(const OrderedSequence& s, long k);

int count_in(const Sequence& s, const ElementSet& x);

// Terms are element names (or `#index`) separated by commas/whitespace; a
// `[k]` suffix repeats a term k times, e.g. "t, a[4], ta^2".
std::vector<Element> parse_terms(const GroupPtr& group, std::string_view text);
Sequence parse_sequence(const GroupPtr& group, std::string_view text);
OrderedSequence parse_ordered_sequence(const GroupPtr& group, std::string_view text);

}  // namespace zsum
