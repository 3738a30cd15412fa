#include "zsum/element_set.hpp"

#include "zsum/group.hpp"

namespace zsum {

ElementSet::ElementSet(GroupPtr group) : group_(std::move(group)), mask_(group_->order()) {}

ElementSet::ElementSet(GroupPtr group, Bits mask) : group_(std::move(group)), mask_(std::move(mask)) {}

ElementSet ElementSet::of(GroupPtr group, const std::vector<Element>& elements) {
  ElementSet s(std::move(group));
  for (Element g : elements) s.insert(g);
  return s;
}

ElementSet ElementSet::all(GroupPtr group) {
  ElementSet s(std::move(group));
  for (Element g = 0; g < s.group_->order(); ++g) s.insert(g);
  return s;
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  mask_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

ElementSet ElementSet::times(Element g) const {
  ElementSet out(group_);
  mask_.for_each([&](std::size_t a) { out.insert(group_->mul(static_cast<Element>(a), g)); });
  return out;
}

ElementSet ElementSet::times_left(Element g) const {
  ElementSet out(group_);
  mask_.for_each([&](std::size_t a) { out.insert(group_->mul(g, static_cast<Element>(a))); });
  return out;
}

ElementSet ElementSet::product(const ElementSet& other) const {
  ElementSet out(group_);
  mask_.for_each([&](std::size_t a) {
    other.mask_.for_each(
        [&](std::size_t b) { out.insert(group_->mul(static_cast<Element>(a), static_cast<Element>(b))); });
  });
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  mask_.for_each([&](std::size_t a) {
    if (!first) s += ", ";
    first = false;
    s += group_->name(static_cast<Element>(a));
  });
  return s + "}";
}

}  // namespace zsum
