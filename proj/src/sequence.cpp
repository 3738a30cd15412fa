#include "zsum/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "zsum/error.hpp"
#include "zsum/group.hpp"
#include "zsum/lattice.hpp"

namespace zsum {

Sequence::Sequence(GroupPtr group) : group_(std::move(group)), mult_(group_->order(), 0) {}

Sequence::Sequence(GroupPtr group, std::vector<int> multiplicities)
    : group_(std::move(group)), mult_(std::move(multiplicities)) {
  if (mult_.size() != group_->order()) throw Error(ErrorCode::invalid_parameters, "multiplicity vector size");
  for (int m : mult_) {
    if (m < 0) throw Error(ErrorCode::invalid_parameters, "negative multiplicity");
    length_ += m;
  }
}

Sequence Sequence::from_terms(GroupPtr group, const std::vector<Element>& terms) {
  Sequence s(std::move(group));
  for (Element g : terms) s.add(g);
  return s;
}

int Sequence::max_multiplicity() const { return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end()); }

void Sequence::add(Element g, int count) {
  if (g >= mult_.size()) throw Error(ErrorCode::invalid_parameters, "element out of range");
  mult_[g] += count;
  length_ += count;
}

void Sequence::remove(Element g, int count) {
  if (g >= mult_.size() || mult_[g] < count) throw Error(ErrorCode::invalid_parameters, "term not present");
  mult_[g] -= count;
  length_ -= count;
}

std::vector<Element> Sequence::support() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > 0) out.push_back(static_cast<Element>(i));
  return out;
}

std::vector<Element> Sequence::terms() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (std::size_t i = 0; i < mult_.size(); ++i)
    for (int k = 0; k < mult_[i]; ++k) out.push_back(static_cast<Element>(i));
  return out;
}

bool Sequence::divides(const Sequence& other) const {
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > other.mult_[i]) return false;
  return true;
}

Sequence Sequence::operator*(const Sequence& other) const {
  Sequence out = *this;
  for (std::size_t i = 0; i < mult_.size(); ++i) out.add(static_cast<Element>(i), other.mult_[i]);
  return out;
}

Sequence Sequence::without(const Sequence& other) const {
  Sequence out = *this;
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (other.mult_[i]) out.remove(static_cast<Element>(i), other.mult_[i]);
  return out;
}

std::vector<std::string> Sequence::term_names() const {
  std::vector<std::string> out;
  for (Element g : terms()) out.push_back(group_->name(g));
  return out;
}

std::string Sequence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (!mult_[i]) continue;
    if (!s.empty()) s += " . ";
    s += group_->name(static_cast<Element>(i));
    if (mult_[i] > 1) s += "[" + std::to_string(mult_[i]) + "]";
  }
  return s.empty() ? "<empty>" : s;
}

OrderedSequence OrderedSequence::slice(std::size_t begin, std::size_t end) const {
  return OrderedSequence(group_, std::vector<Element>(terms_.begin() + static_cast<long>(begin),
                                                      terms_.begin() + static_cast<long>(end)));
}

std::vector<std::string> OrderedSequence::term_names() const {
  std::vector<std::string> out;
  for (Element g : terms_) out.push_back(group_->name(g));
  return out;
}

std::string OrderedSequence::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ", ";
    s += group_->name(terms_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

namespace {

ProductLattice lattice_of(const Sequence& s, std::size_t budget, int cap = -1) {
  auto rm = std::make_shared<const RightMultiplier>(*s.group());
  ProductLattice lat(std::move(rm), budget, cap);
  for (Element g : s.terms()) lat.push(g);
  return lat;
}

ElementSet to_set(const GroupPtr& g, const std::uint64_t* words) {
  ElementSet out(g);
  auto* dst = out.mask().data();
  std::copy_n(words, out.mask().word_count(), dst);
  return out;
}

}  // namespace

ElementSet pi_set(const Sequence& s, std::size_t dp_budget) {
  auto lat = lattice_of(s, dp_budget);
  return to_set(s.group(), lat.set(lat.full_rank()));
}

ElementSet big_pi(const Sequence& s, std::size_t dp_budget) {
  auto lat = lattice_of(s, dp_budget);
  return to_set(s.group(), lat.union_set());
}

ElementSet big_pi_upto(const Sequence& s, int n, std::size_t dp_budget) {
  if (n < 1) throw Error(ErrorCode::invalid_parameters, "Π_n needs n >= 1");
  auto lat = lattice_of(s, dp_budget, n);
  return to_set(s.group(), lat.union_set());
}

bool is_product_one(const Sequence& s, std::size_t dp_budget) {
  if (s.empty()) return true;
  return pi_set(s, dp_budget).contains(0);
}

bool is_product_one_free(const Sequence& s, std::size_t dp_budget) {
  if (s.empty()) return true;
  return !big_pi(s, dp_budget).contains(0);
}

bool is_atom(const Sequence& s, std::size_t dp_budget) {
  if (s.empty()) return false;
  auto lat = lattice_of(s, dp_budget);
  const std::size_t full = lat.full_rank();
  if (!lat.contains(full, 0)) return false;
  for (std::size_t u = 1; u < full; ++u)
    if (lat.contains(u, 0) && lat.contains(full - u, 0)) return false;
  return true;
}

std::optional<OrderedSequence> ordering_with_product(const Sequence& s, Element target, std::size_t dp_budget) {
  if (s.empty()) {
    if (target == 0) return OrderedSequence(s.group(), {});
    return std::nullopt;
  }
  auto lat = lattice_of(s, dp_budget);
  auto order = lat.ordering_with_product(lat.full_rank(), target);
  if (order.empty()) return std::nullopt;
  return OrderedSequence(s.group(), std::move(order));
}

Element ordered_product(const OrderedSequence& s) {
  Element x = 0;
  for (Element g : s.terms()) x = s.group()->mul(x, g);
  return x;
}

OrderedSequence cyclic_shift(const OrderedSequence& s, long k) {
  const long n = static_cast<long>(s.size());
  if (n == 0) return s;
  long shift = ((k % n) + n) % n;
  std::vector<Element> t(s.terms());
  std::rotate(t.begin(), t.begin() + shift, t.end());
  return OrderedSequence(s.group(), std::move(t));
}

int count_in(const Sequence& s, const ElementSet& x) {
  int total = 0;
  x.mask().for_each([&](std::size_t g) { total += s.multiplicity(static_cast<Element>(g)); });
  return total;
}

// ---------------------------------------------------------------------------

std::vector<Element> parse_terms(const GroupPtr& group, std::string_view text) {
  std::vector<Element> out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '.'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]) && text[j] != '[') ++j;
    std::string_view token = text.substr(i, j - i);
    int repeat = 1;
    if (j < text.size() && text[j] == '[') {
      auto close = text.find(']', j);
      if (close == std::string_view::npos) throw Error(ErrorCode::usage, "unterminated [k] in sequence literal");
      auto digits = text.substr(j + 1, close - j - 1);
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), repeat);
      if (ec != std::errc() || p != digits.data() + digits.size() || repeat < 0)
        throw Error(ErrorCode::usage, "bad repeat count");
      j = close + 1;
    }
    Element g = 0;
    if (!token.empty() && token[0] == '#') {
      unsigned long idx = 0;
      auto [p, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), idx);
      if (ec != std::errc() || idx >= group->order()) throw Error(ErrorCode::usage, "bad element index");
      g = static_cast<Element>(idx);
    } else {
      auto found = group->find(token);
      if (!found) throw Error(ErrorCode::usage, "unknown element '" + std::string(token) + "'");
      g = *found;
    }
    for (int k = 0; k < repeat; ++k) out.push_back(g);
    i = j;
  }
  return out;
}

Sequence parse_sequence(const GroupPtr& group, std::string_view text) {
  return Sequence::from_terms(group, parse_terms(group, text));
}

OrderedSequence parse_ordered_sequence(const GroupPtr& group, std::string_view text) {
  return OrderedSequence(group, parse_terms(group, text));
}

}  // namespace zsum
