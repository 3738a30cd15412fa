#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "zsum/element_set.hpp"

namespace zsum {

// Word-level right multiplication A -> A·x on element masks, table driven for
// small groups.
class RightMultiplier {
 public:
  explicit RightMultiplier(const FiniteGroup& g);

  std::size_t words() const { return words_; }
  const FiniteGroup& group() const { return *group_; }

  // out |= in · x
  void apply_or(const std::uint64_t* in, Element x, std::uint64_t* out) const {
    if (words_ == 1 && !table_.empty()) {
      const std::uint64_t v = in[0];
      const std::uint64_t* t = &table_[static_cast<std::size_t>(x) * bytes_ * 256];
      std::uint64_t acc = 0;
      for (std::size_t b = 0; b < bytes_; ++b) acc |= t[b * 256 + ((v >> (8 * b)) & 0xff)];
      out[0] |= acc;
      return;
    }
    apply_or_slow(in, x, out);
  }

 private:
  void apply_or_slow(const std::uint64_t* in, Element x, std::uint64_t* out) const;

  const FiniteGroup* group_;
  std::size_t words_;
  std::size_t bytes_;
  std::vector<std::uint64_t> table_;
};

// Product sets f(U) = π(U) for every sub-multiset U of a growing multiset,
// indexed by the mixed-radix rank of U's multiplicity vector (types in push
// order, earliest type least significant). Terms are pushed one at a time;
// a push adds one block of states, a pop removes it.
//
//   f(∅) = {1},  f(U) = ∪_{x ∈ supp U} f(U∖x)·x
//
// With a length cap, states with |U| > cap are left empty and excluded from
// the running union Π_{≤cap}.
class ProductLattice {
 public:
  ProductLattice(std::shared_ptr<const RightMultiplier> rm, std::size_t state_budget, int length_cap = -1);

  // x must equal the most recently pushed type or be a type not yet present.
  void push(Element x);
  void pop();

  std::size_t states() const { return lens_.size(); }
  std::size_t length() const { return stack_.size(); }
  std::size_t full_rank() const { return states() - 1; }
  const std::uint64_t* set(std::size_t rank) const { return &sets_[rank * words_]; }
  bool contains(std::size_t rank, Element g) const { return (set(rank)[g >> 6] >> (g & 63)) & 1u; }
  int state_length(std::size_t rank) const { return lens_[rank]; }

  // Union of f(U) over nonempty U (within the length cap).
  const std::uint64_t* union_set() const { return &unions_[(stack_.size()) * words_]; }
  bool union_contains(Element g) const { return (union_set()[g >> 6] >> (g & 63)) & 1u; }

  const std::vector<Element>& types() const { return types_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<std::size_t>& weights() const { return weight_; }
  std::size_t words() const { return words_; }

  // Terms of the sub-multiset at `rank`, ordered so their product is
  // `target`; empty if target ∉ f(U). Requires the state to be uncapped.
  std::vector<Element> ordering_with_product(std::size_t rank, Element target) const;

 private:
  std::shared_ptr<const RightMultiplier> rm_;
  std::size_t words_;
  std::size_t budget_;
  int cap_;
  std::vector<Element> types_;
  std::vector<int> mult_;
  std::vector<std::size_t> weight_;
  std::vector<Element> stack_;
  std::vector<std::uint64_t> sets_;
  std::vector<int> lens_;
  std::vector<std::uint64_t> unions_;  // one running union per push depth
  std::vector<int> digits_;
};

}  // namespace zsum
