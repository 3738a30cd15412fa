#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zsum/bits.hpp"

namespace zsum {

using Element = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Subset of a group's elements as a dense mask.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(GroupPtr group);
  ElementSet(GroupPtr group, Bits mask);

  static ElementSet of(GroupPtr group, const std::vector<Element>& elements);
  static ElementSet all(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const Bits& mask() const { return mask_; }
  Bits& mask() { return mask_; }

  bool contains(Element g) const { return mask_.test(g); }
  void insert(Element g) { mask_.set(g); }
  void erase(Element g) { mask_.reset(g); }
  std::size_t size() const { return mask_.count(); }
  bool empty() const { return mask_.none(); }
  std::vector<Element> elements() const;

  bool subset_of(const ElementSet& other) const { return mask_.subset_of(other.mask_); }
  ElementSet& operator|=(const ElementSet& other) {
    mask_ |= other.mask_;
    return *this;
  }
  ElementSet operator&(const ElementSet& other) const {
    ElementSet out = *this;
    out.mask_ &= other.mask_;
    return out;
  }

  // {a*g : a in this}, {g*a : a in this}
  ElementSet times(Element g) const;
  ElementSet times_left(Element g) const;
  // A·B product set
  ElementSet product(const ElementSet& other) const;

  std::string to_string() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.mask_ == b.mask_; }

 private:
  GroupPtr group_;
  Bits mask_;
};

}  // namespace zsum
