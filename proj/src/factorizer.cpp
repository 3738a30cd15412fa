#include "zsum/factorizer.hpp"

#include <algorithm>

#include "zsum/error.hpp"

namespace zsum {

std::string_view to_string(FactorCase c) {
  switch (c) {
    case FactorCase::i: return "i";
    case FactorCase::ii: return "ii";
    case FactorCase::iii: return "iii";
  }
  return "?";
}

OrderedSequence Factorization::joined() const {
  std::vector<Element> all;
  for (const auto& t : blocks) all.insert(all.end(), t.terms().begin(), t.terms().end());
  all.insert(all.end(), remainder.terms().begin(), remainder.terms().end());
  return OrderedSequence(remainder.group(), std::move(all));
}

int Factorization::block_length() const {
  int n = 0;
  for (const auto& t : blocks) n += static_cast<int>(t.size());
  return n;
}

bool are_conjugate(const GroupPtr& g, Element a, Element b) {
  for (Element h = 0; h < g->order(); ++h)
    if (g->conj(a, h) == b) return true;
  return false;
}

namespace {

using Terms = std::vector<Element>;

[[noreturn]] void precondition(const std::string& what) { throw Error(ErrorCode::precondition_violated, what); }

ElementSet pi_of(const GroupPtr& g, const Terms& t) { return pi_set(Sequence::from_terms(g, t)); }

bool conjugation_closed(const GroupPtr& g, const ElementSet& a) {
  for (Element x : a.elements())
    for (Element h = 0; h < g->order(); ++h)
      if (!a.contains(g->conj(x, h))) return false;
  return true;
}

bool meets_outside_center(const ElementSet& a, const Subgroup& z) {
  for (Element x : a.elements())
    if (!z.contains(x)) return true;
  return false;
}

int count_in_h(const Terms& t, const Subgroup& h) {
  int n = 0;
  for (Element x : t) n += h.contains(x);
  return n;
}

bool generates_whole(const GroupPtr& g, const Terms& t) {
  return subgroup_generated(g, t).size() == g->order();
}

Element product(const GroupPtr& g, const Terms& t) {
  Element x = 0;
  for (Element y : t) x = g->mul(x, y);
  return x;
}

class Rewriter {
 public:
  Rewriter(const OrderedSequence& s, const FactorizerConfig& cfg, bool trace)
      : g_(s.group()), cfg_(cfg), trace_(trace) {
    const Terms& terms = s.terms();
    if (cfg.omega_0 > 0) {
      blocks_.emplace_back(terms.begin(), terms.begin() + cfg.omega_0);
      rem_.assign(terms.begin() + cfg.omega_0, terms.end());
    } else {
      rem_ = terms;
    }
    record("start", 0);
  }

  Factorization run() {
    Factorization f;
    for (;;) {
      const int sum = block_length();
      if (sum >= cfg_.omega) {
        f.which = FactorCase::ii;
        break;
      }
      if (count_in_h(rem_, cfg_.H) == cfg_.omega_H) {
        f.which = FactorCase::iii;
        break;
      }
      if (!generates_whole(g_, rem_)) {
        f.which = FactorCase::i;
        break;
      }
      ++steps_;
      if (!blocks_.empty() && !conjugation_closed(g_, pi_of(g_, blocks_.back())))
        absorb();
      else
        new_block();
    }
    for (auto& t : blocks_) f.blocks.emplace_back(g_, t);
    f.remainder = OrderedSequence(g_, rem_);
    f.rewrite_steps = steps_;
    f.trace = std::move(trace_log_);
    return f;
  }

 private:
  int block_length() const {
    int n = 0;
    for (const auto& t : blocks_) n += static_cast<int>(t.size());
    return n;
  }

  // Moves R*(1, x) past the blocks (re-ordering each block so the product is
  // unchanged) and then cyclically to the end.
  void commute_prefix(std::size_t x) {
    if (x == 0) return;
    const Terms prefix(rem_.begin(), rem_.begin() + static_cast<long>(x));
    const Element c = product(g_, prefix);
    for (auto& t : blocks_) {
      const Element target = g_->conj(product(g_, t), c);
      auto ordering = ordering_with_product(Sequence::from_terms(g_, t), target);
      if (!ordering) precondition("block cannot absorb the commuted prefix");
      t = ordering->terms();
    }
    rem_.erase(rem_.begin(), rem_.begin() + static_cast<long>(x));
    rem_.insert(rem_.end(), prefix.begin(), prefix.end());
  }

  // Case 1: the last block is not conjugation closed.
  void absorb() {
    const ElementSet last = pi_of(g_, blocks_.back());
    std::size_t x = 0;
    while (x < rem_.size() && last.times(rem_[x]) == last.times_left(rem_[x])) ++x;
    if (x == rem_.size()) precondition("no remainder term moves the last block");
    commute_prefix(x);
    blocks_.back().push_back(rem_.front());
    rem_.erase(rem_.begin());
    record("absorb", x);
  }

  // Case 2: all blocks conjugation closed (or none yet).
  void new_block() {
    const std::size_t n = rem_.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g_->commute(rem_[i], rem_[j])) continue;
        // rem_[i] commutes with everything strictly between i and j.
        std::rotate(rem_.begin() + static_cast<long>(i), rem_.begin() + static_cast<long>(i) + 1,
                    rem_.begin() + static_cast<long>(j));
        const std::size_t x = j - 1;
        commute_prefix(x);
        blocks_.push_back({rem_[0], rem_[1]});
        rem_.erase(rem_.begin(), rem_.begin() + 2);
        record("new_block", x);
        return;
      }
    }
    precondition("remainder generates G but its terms commute");
  }

  void record(const char* move, std::size_t prefix) {
    if (!trace_) return;
    FactorizerStep st;
    st.move = move;
    st.prefix = prefix;
    Terms all;
    for (const auto& t : blocks_) {
      st.blocks.emplace_back(g_, t);
      all.insert(all.end(), t.begin(), t.end());
    }
    st.remainder = OrderedSequence(g_, rem_);
    all.insert(all.end(), rem_.begin(), rem_.end());
    st.product = product(g_, all);
    trace_log_.push_back(std::move(st));
  }

  GroupPtr g_;
  const FactorizerConfig& cfg_;
  bool trace_;
  std::vector<Terms> blocks_;
  Terms rem_;
  int steps_ = 0;
  std::vector<FactorizerStep> trace_log_;
};

}  // namespace

Factorization factorize(const OrderedSequence& s, const FactorizerConfig& cfg, bool trace) {
  const auto& g = s.group();
  if (g->is_abelian()) precondition("G must be non-abelian");
  if (cfg.H.parent.get() != g.get() && cfg.H.parent->fingerprint() != g->fingerprint())
    precondition("H is not a subgroup of G");
  if (!is_subgroup(cfg.H.members)) precondition("H is not a subgroup");
  for (Element a : cfg.H.members.elements())
    for (Element b : cfg.H.members.elements())
      if (!g->commute(a, b)) precondition("H must be abelian");
  if (cfg.omega < 1) precondition("omega must be at least 1");
  const int len = static_cast<int>(s.size());
  if (cfg.omega_0 != 0 && (cfg.omega_0 < 2 || cfg.omega_0 > len)) precondition("omega_0 must be 0 or in [2, |S*|]");
  if (cfg.omega_0 > cfg.omega) precondition("omega_0 exceeds omega");
  Terms rest(s.terms().begin() + cfg.omega_0, s.terms().end());
  if (cfg.omega_0 > 0) {
    Terms s0(s.terms().begin(), s.terms().begin() + cfg.omega_0);
    auto p0 = pi_of(g, s0);
    if (static_cast<int>(p0.size()) < cfg.omega_0) precondition("|pi(S_0)| < |S_0|");
    if (!meets_outside_center(p0, center(g))) precondition("pi(S_0) lies in the center");
  }
  if (count_in_h(rest, cfg.H) < cfg.omega_H) precondition("fewer than omega_H terms from H after S_0");
  return Rewriter(s, cfg, trace).run();
}

std::vector<std::string> factorization_violations(const Factorization& f, const OrderedSequence& original,
                                                  const FactorizerConfig& cfg) {
  std::vector<std::string> v;
  const auto& g = original.group();
  const auto joined = f.joined();
  if (!(joined.multiset() == original.multiset())) v.push_back("multiset differs from the input");
  if (!are_conjugate(g, ordered_product(original), ordered_product(joined)))
    v.push_back("product is not conjugate to the input product");

  const auto z = center(g);
  const std::size_t r = f.blocks.size();
  int sum = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& t = f.blocks[i];
    const auto name = "T_" + std::to_string(i + 1);
    sum += static_cast<int>(t.size());
    auto p = pi_set(t.multiset());
    if (t.size() < 2) v.push_back(name + " has fewer than 2 terms");
    if (p.size() < t.size()) v.push_back("|pi(" + name + ")| < |" + name + "|");
    if (!meets_outside_center(p, z)) v.push_back("pi(" + name + ") lies in the center");
    if (i + 1 < r && !conjugation_closed(g, p)) v.push_back("pi(" + name + ") is not conjugation closed");
  }
  if (cfg.omega_0 > 0) {
    auto s0 = Sequence::from_terms(g, Terms(original.terms().begin(), original.terms().begin() + cfg.omega_0));
    if (r == 0 || !s0.divides(f.blocks[0].multiset())) v.push_back("S_0 does not divide T_1");
  }

  const Terms& rem = f.remainder.terms();
  const int in_h = count_in_h(rem, cfg.H);
  switch (f.which) {
    case FactorCase::i:
      if (sum > cfg.omega - 1) v.push_back("case i: block length exceeds omega-1");
      if (generates_whole(g, rem)) v.push_back("case i: remainder generates G");
      break;
    case FactorCase::ii:
      if (sum < cfg.omega || sum > cfg.omega + 1) v.push_back("case ii: block length outside [omega, omega+1]");
      if (sum == cfg.omega + 1 && (r == 0 || f.blocks.back().size() != 2 || sum - 2 != cfg.omega - 1))
        v.push_back("case ii: length omega+1 without a final 2-block");
      if (in_h < cfg.omega_H) v.push_back("case ii: fewer than omega_H remainder terms from H");
      break;
    case FactorCase::iii:
      if (sum > cfg.omega - 1) v.push_back("case iii: block length exceeds omega-1");
      if (in_h != cfg.omega_H) v.push_back("case iii: remainder does not have exactly omega_H terms from H");
      break;
  }
  return v;
}

bool check_factorization(const Factorization& f, const OrderedSequence& original, const FactorizerConfig& cfg) {
  return factorization_violations(f, original, cfg).empty();
}

}  // namespace zsum
