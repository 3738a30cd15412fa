// Random inputs satisfying the factorizer's hypotheses.
#pragma once

#include <random>
#include <vector>

#include "zsum/factorizer.hpp"

namespace instances {

struct Instance {
  zsum::OrderedSequence sequence;
  zsum::FactorizerConfig config;
};

inline std::vector<zsum::Subgroup> abelian_subgroups(const zsum::GroupPtr& g) {
  std::vector<zsum::Subgroup> out;
  for (auto& h : zsum::all_subgroups(g)) {
    auto hg = zsum::subgroup_as_group(h);
    if (hg->is_abelian()) out.push_back(std::move(h));
  }
  return out;
}

// Draws S*, H, omega, omega_H and omega_0; the prefix option is used only when
// the drawn prefix meets the hypotheses.
inline Instance random_instance(const zsum::GroupPtr& g, const std::vector<zsum::Subgroup>& abelian,
                                std::mt19937_64& rng) {
  using zsum::Element;
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
  const int len = 1 + static_cast<int>(rng() % 16);
  std::vector<Element> terms;
  for (int i = 0; i < len; ++i) terms.push_back(rng() % 5 == 0 ? 0 : pick(rng));

  Instance in;
  in.sequence = zsum::OrderedSequence(g, terms);
  auto& cfg = in.config;
  cfg.H = abelian[rng() % abelian.size()];
  cfg.omega = 1 + static_cast<int>(rng() % (len + 2));
  cfg.omega_0 = 0;
  if (len >= 2 && cfg.omega >= 2 && rng() % 2 == 0) {
    const int w0 = 2 + static_cast<int>(rng() % (std::min(len, cfg.omega) - 1));
    auto prefix = zsum::Sequence::from_terms(g, {terms.begin(), terms.begin() + w0});
    auto p = zsum::pi_set(prefix);
    auto z = zsum::center(g);
    if (static_cast<int>(p.size()) >= w0 && !p.subset_of(z.members)) cfg.omega_0 = w0;
  }
  int in_h = 0;
  for (std::size_t i = static_cast<std::size_t>(cfg.omega_0); i < terms.size(); ++i) in_h += cfg.H.contains(terms[i]);
  cfg.omega_H = static_cast<int>(rng() % static_cast<std::uint64_t>(in_h + 3)) - 2;
  return in;
}

}  // namespace instances
