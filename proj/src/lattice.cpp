#include "zsum/lattice.hpp"

#include <algorithm>

#include "zsum/error.hpp"
#include "zsum/group.hpp"

namespace zsum {

RightMultiplier::RightMultiplier(const FiniteGroup& g)
    : group_(&g), words_((g.order() + 63) / 64), bytes_((g.order() + 7) / 8) {
  if (words_ != 1) return;
  const std::size_t n = g.order();
  table_.assign(n * bytes_ * 256, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < bytes_; ++b)
      for (std::size_t v = 0; v < 256; ++v) {
        std::uint64_t acc = 0;
        for (std::size_t bit = 0; bit < 8; ++bit) {
          std::size_t a = 8 * b + bit;
          if (((v >> bit) & 1u) && a < n)
            acc |= std::uint64_t{1} << g.mul(static_cast<Element>(a), static_cast<Element>(x));
        }
        table_[(x * bytes_ + b) * 256 + v] = acc;
      }
}

void RightMultiplier::apply_or_slow(const std::uint64_t* in, Element x, std::uint64_t* out) const {
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t v = in[w];
    while (v) {
      auto a = static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
      Element y = group_->mul(a, x);
      out[y >> 6] |= std::uint64_t{1} << (y & 63);
      v &= v - 1;
    }
  }
}

ProductLattice::ProductLattice(std::shared_ptr<const RightMultiplier> rm, std::size_t state_budget, int length_cap)
    : rm_(std::move(rm)), words_(rm_->words()), budget_(state_budget), cap_(length_cap) {
  sets_.assign(words_, 0);
  sets_[0] = 1;  // f(∅) = {identity}
  lens_.assign(1, 0);
  unions_.assign(words_, 0);
}

void ProductLattice::push(Element x) {
  const bool same = !types_.empty() && types_.back() == x;
  if (!same) {
    types_.push_back(x);
    mult_.push_back(0);
    weight_.push_back(states());
  }
  const std::size_t t = types_.size() - 1;
  const std::size_t w = weight_[t];
  const int k = mult_[t] + 1;
  const std::size_t total = w * static_cast<std::size_t>(k + 1);
  if (total > budget_) {
    if (!same) {
      types_.pop_back();
      mult_.pop_back();
      weight_.pop_back();
    }
    throw Error(ErrorCode::budget_exceeded,
                "sub-multiset lattice needs " + std::to_string(total) + " states, budget " + std::to_string(budget_));
  }
  mult_[t] = k;
  stack_.push_back(x);

  const std::size_t base = static_cast<std::size_t>(k) * w;
  sets_.resize(total * words_, 0);
  lens_.resize(total);
  const std::size_t prev_union = (stack_.size() - 1) * words_;
  unions_.resize((stack_.size() + 1) * words_);
  std::uint64_t* uni = &unions_[stack_.size() * words_];
  std::copy_n(&unions_[prev_union], words_, uni);

  digits_.assign(t, 0);
  for (std::size_t rp = 0; rp < w; ++rp) {
    const std::size_t rank = base + rp;
    const int len = lens_[rp] + k;
    lens_[rank] = len;
    std::uint64_t* out = &sets_[rank * words_];
    std::fill_n(out, words_, 0);
    if (cap_ < 0 || len <= cap_) {
      rm_->apply_or(set(rank - w), x, out);
      for (std::size_t i = 0; i < t; ++i)
        if (digits_[i] > 0) rm_->apply_or(set(rank - weight_[i]), types_[i], out);
      for (std::size_t q = 0; q < words_; ++q) uni[q] |= out[q];
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (++digits_[i] <= mult_[i]) break;
      digits_[i] = 0;
    }
  }
}

void ProductLattice::pop() {
  if (stack_.empty()) return;
  const std::size_t t = types_.size() - 1;
  const std::size_t w = weight_[t];
  const int k = --mult_[t];
  const std::size_t total = w * static_cast<std::size_t>(k + 1);
  sets_.resize(total * words_);
  lens_.resize(total);
  stack_.pop_back();
  unions_.resize((stack_.size() + 1) * words_);
  if (k == 0) {
    types_.pop_back();
    mult_.pop_back();
    weight_.pop_back();
  }
}

std::vector<Element> ProductLattice::ordering_with_product(std::size_t rank, Element target) const {
  if (!contains(rank, target)) return {};
  const auto& g = rm_->group();
  std::vector<int> digit(types_.size());
  std::size_t r = rank;
  for (std::size_t i = types_.size(); i-- > 0;) {
    digit[i] = static_cast<int>(r / weight_[i]);
    r %= weight_[i];
  }
  std::vector<Element> reversed;
  while (rank != 0) {
    bool stepped = false;
    for (std::size_t i = 0; i < types_.size() && !stepped; ++i) {
      if (digit[i] == 0) continue;
      Element prev_target = g.mul(target, g.inv(types_[i]));
      std::size_t prev = rank - weight_[i];
      if (contains(prev, prev_target)) {
        reversed.push_back(types_[i]);
        target = prev_target;
        rank = prev;
        --digit[i];
        stepped = true;
      }
    }
    if (!stepped) return {};
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

}  // namespace zsum
