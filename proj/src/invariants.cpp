#include "zsum/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_set>

#include "zsum/error.hpp"
#include "zsum/group.hpp"
#include "zsum/lattice.hpp"

namespace zsum {

std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::d: return "d";
    case Invariant::D: return "D";
    case Invariant::eta: return "eta";
  }
  return "?";
}

Invariant parse_invariant(std::string_view text) {
  if (text == "d") return Invariant::d;
  if (text == "D") return Invariant::D;
  if (text == "eta") return Invariant::eta;
  throw Error(ErrorCode::usage, "unknown invariant '" + std::string(text) + "' (expected d, D or eta)");
}

std::vector<std::vector<Element>> search_automorphisms(const GroupPtr& g, bool use) {
  if (use && g->order() <= 64) return automorphism_group(g);
  std::vector<Element> id(g->order());
  std::iota(id.begin(), id.end(), Element{0});
  return {id};
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  explicit Stopwatch(const SearchBudget& b) : budget_(b), start_(Clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  // Counts one node; true once a limit is hit.
  bool tick() {
    ++nodes_;
    if (budget_.max_nodes && nodes_ > budget_.max_nodes) return true;
    if (budget_.time_limit > 0 && (nodes_ & 1023) == 0 && seconds() > budget_.time_limit) expired_ = true;
    return expired_;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const SearchBudget& budget_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool expired_ = false;
};

// Aut(G)-orbits on elements ordered by their smallest member.
std::vector<int> orbit_rank(const GroupPtr& g, const std::vector<std::vector<Element>>& auts,
                            std::vector<Element>* reps) {
  const std::size_t n = g->order();
  std::vector<int> rank(n, -1);
  int next = 0;
  for (Element x = 0; x < n; ++x) {
    if (rank[x] >= 0) continue;
    reps->push_back(x);
    for (const auto& phi : auts) rank[phi[x]] = next;
    ++next;
  }
  return rank;
}

// Depth-first search for the longest sequence S with 1 ∉ Π_{≤cap}(S).
// cap < 0 means no length restriction (the d(G) search).
class FreeSearch {
 public:
  FreeSearch(const GroupPtr& g, const SearchBudget& budget, int cap)
      : g_(g), budget_(budget), watch_(budget),
        lattice_(std::make_shared<const RightMultiplier>(*g), budget.dp_budget, cap), mult_(g->order(), 0) {}

  void run() {
    auto auts = search_automorphisms(g_, budget_.use_automorphisms);
    std::vector<Element> reps;
    auto rank = orbit_rank(g_, auts, &reps);
    allowed_.assign(g_->order(), 0);
    // Branch per orbit: its minimum is present and every term lies in an
    // orbit of equal or higher rank.
    for (Element root : reps) {
      if (root == 0) continue;
      for (Element x = 0; x < g_->order(); ++x) allowed_[x] = rank[x] >= rank[root];
      if (!extend(root)) break;
      descend(root);
      retract();
      if (aborted_) break;
    }
  }

  int best() const { return best_; }
  const std::vector<Element>& witness() const { return witness_; }
  bool aborted() const { return aborted_; }
  const std::string& abort_reason() const { return reason_; }
  std::uint64_t nodes() const { return watch_.nodes(); }
  double seconds() const { return watch_.seconds(); }

 private:
  bool extend(Element x) {
    try {
      lattice_.push(x);
    } catch (const Error& e) {
      aborted_ = true;
      reason_ = e.what();
      return false;
    }
    terms_.push_back(x);
    ++mult_[x];
    return true;
  }

  void retract() {
    lattice_.pop();
    --mult_[terms_.back()];
    terms_.pop_back();
  }

  void descend(Element last) {
    if (aborted_) return;
    if (watch_.tick()) {
      aborted_ = true;
      reason_ = "search budget exhausted";
      return;
    }
    const int len = static_cast<int>(terms_.size());
    if (len > best_) {
      best_ = len;
      witness_ = terms_;
    }
    std::vector<Element> cands;
    int room = 0;
    for (Element x = last; x < g_->order(); ++x) {
      if (!allowed_[x] || lattice_.union_contains(g_->inv(x))) continue;
      cands.push_back(x);
      room += g_->element_order(x) - 1 - mult_[x];
    }
    if (len + room <= best_) return;
    for (Element x : cands) {
      if (!extend(x)) return;
      descend(x);
      retract();
      if (aborted_) return;
    }
  }

  GroupPtr g_;
  const SearchBudget& budget_;
  Stopwatch watch_;
  ProductLattice lattice_;
  std::vector<int> mult_;
  std::vector<char> allowed_;
  std::vector<Element> terms_;
  std::vector<Element> witness_;
  int best_ = 0;
  bool aborted_ = false;
  std::string reason_;
};

InvariantResult free_search(Invariant kind, const GroupPtr& g, const SearchBudget& budget, int cap) {
  FreeSearch search(g, budget, cap);
  search.run();
  InvariantResult r;
  r.kind = kind;
  r.value = search.best();
  r.witness = Sequence::from_terms(g, search.witness());
  r.exhaustive = !search.aborted();
  r.nodes = search.nodes();
  r.seconds = search.seconds();
  if (search.aborted()) r.note = search.abort_reason();
  return r;
}

// Multiplicity vector packed into bytes, used as a hash key.
std::string pack(const std::vector<int>& m) {
  std::string key(m.size(), '\0');
  for (std::size_t i = 0; i < m.size(); ++i) key[i] = static_cast<char>(m[i]);
  return key;
}

std::string canonical_key(const std::vector<int>& m, const std::vector<std::vector<Element>>& auts,
                          std::string& scratch) {
  std::string best = pack(m);
  scratch.assign(m.size(), '\0');
  for (std::size_t a = 1; a < auts.size(); ++a) {
    const auto& phi = auts[a];
    for (std::size_t x = 0; x < m.size(); ++x) scratch[phi[x]] = static_cast<char>(m[x]);
    // Larger multiplicities on smaller indices sort first.
    if (std::lexicographical_compare(best.begin(), best.end(), scratch.begin(), scratch.end(),
                                     [](char u, char v) { return static_cast<unsigned char>(u) >
                                                                 static_cast<unsigned char>(v); }))
      continue;
    if (scratch != best) best = scratch;
  }
  return best;
}

std::vector<int> unpack(const std::string& key) {
  std::vector<int> m(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) m[i] = static_cast<unsigned char>(key[i]);
  return m;
}

}  // namespace

Sequence canonical_form(const Sequence& s, const std::vector<std::vector<Element>>& automorphisms) {
  std::string scratch;
  return Sequence(s.group(), unpack(canonical_key(s.multiplicities(), automorphisms, scratch)));
}

InvariantResult small_davenport(const GroupPtr& g, const SearchBudget& budget) {
  return free_search(Invariant::d, g, budget, -1);
}

InvariantResult eta(const GroupPtr& g, const SearchBudget& budget) {
  if (g->order() == 1) {
    InvariantResult r;
    r.kind = Invariant::eta;
    r.value = 1;
    r.witness = Sequence(g);
    r.exhaustive = true;
    r.note = "trivial group: eta = 1 by convention";
    return r;
  }
  auto r = free_search(Invariant::eta, g, budget, g->max_element_order() - 1 > 0 ? g->max_element_order() - 1 : 1);
  r.value += 1;
  return r;
}

InvariantResult large_davenport(const GroupPtr& g, const SearchBudget& budget) {
  Stopwatch watch(budget);
  const std::size_t n = g->order();
  InvariantResult r;
  r.kind = Invariant::D;
  if (n == 1) {
    r.value = 1;
    r.witness = Sequence::from_terms(g, {0});
    r.exhaustive = true;
    return r;
  }
  if (n > 255) throw Error(ErrorCode::limit_exceeded, "D search supports groups of order at most 255");
  const auto auts = search_automorphisms(g, budget.use_automorphisms);
  const bool abelian = g->is_abelian();
  std::string scratch;

  // Level 2: g·g⁻¹.
  std::vector<std::string> level;
  {
    std::unordered_set<std::string> seen;
    for (Element x = 1; x < n; ++x) {
      std::vector<int> m(n, 0);
      ++m[x];
      ++m[g->inv(x)];
      auto key = canonical_key(m, auts, scratch);
      if (seen.insert(key).second) level.push_back(std::move(key));
    }
    std::sort(level.begin(), level.end());
  }
  int length = 2;
  bool aborted = false;

  // An atom of length L+1 merges (two adjacent terms of a product-one
  // ordering) to an atom of length L, so every atom of length L+1 arises
  // from some atom of length L by splitting a term z into x·(x⁻¹z).
  while (length < static_cast<int>(n)) {
    if (budget.max_length && length >= budget.max_length) {
      aborted = true;
      r.note = "stopped at max_length";
      break;
    }
    std::vector<std::string> next;
    std::unordered_set<std::string> raw_seen, seen;
    for (const auto& key : level) {
      auto m = unpack(key);
      for (Element z = 1; z < n && !aborted; ++z) {
        if (!m[z]) continue;
        for (Element x = 1; x < n; ++x) {
          if (x == z) continue;
          Element y = g->mul(g->inv(x), z);
          --m[z];
          ++m[x];
          ++m[y];
          bool skip = abelian && (m[x] > g->element_order(x) || m[y] > g->element_order(y));
          std::string raw = skip ? std::string() : pack(m);
          if (!skip && raw_seen.insert(raw).second) {
            auto canon = canonical_key(m, auts, scratch);
            if (seen.insert(canon).second) {
              if (watch.tick()) {
                aborted = true;
                r.note = "search budget exhausted";
              } else {
                try {
                  if (is_atom(Sequence(g, unpack(canon)), budget.dp_budget)) next.push_back(std::move(canon));
                } catch (const Error& e) {
                  aborted = true;
                  r.note = e.what();
                }
              }
            }
          }
          ++m[z];
          --m[x];
          --m[y];
          if (aborted) break;
        }
      }
      if (aborted) break;
    }
    if (aborted) break;
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    level = std::move(next);
    ++length;
  }

  // Witness: smallest sorted term list among the longest atoms found.
  std::vector<Element> best_terms;
  for (const auto& key : level) {
    auto terms = Sequence(g, unpack(key)).terms();
    if (best_terms.empty() || terms < best_terms) best_terms = std::move(terms);
  }
  r.value = length;
  r.witness = Sequence::from_terms(g, best_terms);
  r.exhaustive = !aborted;
  r.nodes = watch.nodes();
  r.seconds = watch.seconds();
  return r;
}

InvariantResult compute_invariant(Invariant inv, const GroupPtr& g, const SearchBudget& budget) {
  switch (inv) {
    case Invariant::d: return small_davenport(g, budget);
    case Invariant::D: return large_davenport(g, budget);
    case Invariant::eta: return eta(g, budget);
  }
  throw Error(ErrorCode::usage, "unknown invariant");
}

std::vector<Sequence> atoms_of_length(const GroupPtr& g, int length, bool up_to_automorphism) {
  const std::size_t n = g->order();
  const auto auts = search_automorphisms(g, up_to_automorphism);
  std::vector<Sequence> out;
  std::unordered_set<std::string> seen;
  std::string scratch;
  std::vector<int> m(n, 0);
  // Multisets of the given length over G∖{1} (plus the single atom "1").
  if (length == 1) {
    out.push_back(Sequence::from_terms(g, {0}));
    return out;
  }
  auto rec = [&](auto&& self, Element from, int left) -> void {
    if (left == 0) {
      Sequence s(g, m);
      if (!is_atom(s)) return;
      auto key = canonical_key(m, auts, scratch);
      if (seen.insert(key).second) out.emplace_back(g, unpack(key));
      return;
    }
    for (Element x = from; x < n; ++x) {
      ++m[x];
      self(self, x, left - 1);
      --m[x];
    }
  };
  rec(rec, 1, length);
  std::sort(out.begin(), out.end(),
            [](const Sequence& a, const Sequence& b) { return a.multiplicities() > b.multiplicities(); });
  return out;
}

}  // namespace zsum
