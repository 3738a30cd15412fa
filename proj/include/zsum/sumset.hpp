#pragma once

#include <optional>
#include <string>
#include <vector>

namespace zsum {

// Subset of Z/p.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(long p);
  PrimeSet(long p, const std::vector<long>& members);

  long modulus() const { return p_; }
  bool contains(long x) const { return mask_[static_cast<std::size_t>(norm(x))] != 0; }
  void insert(long x) { mask_[static_cast<std::size_t>(norm(x))] = 1; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<long> members() const;
  // {k·a : a in A}
  PrimeSet scaled(long k) const;
  std::string to_string() const;

  friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.p_ == b.p_ && a.mask_ == b.mask_; }

 private:
  long norm(long x) const { return ((x % p_) + p_) % p_; }

  long p_ = 1;
  std::vector<char> mask_;
};

PrimeSet sumset(const PrimeSet& a, const PrimeSet& b);

// The common difference d in [1, (p-1)/2] when A is an arithmetic
// progression (d = 1 for sets of size 0, 1, p-1 or p, where every
// difference works).
std::optional<long> progression_difference(const PrimeSet& a);
bool is_arithmetic_progression(const PrimeSet& a);
// True when A is an AP with difference d or -d.
bool is_progression_with_difference(const PrimeSet& a, long d);

// |A+B| < min(p-1, |A|+|B|)  implies  A, B are APs with a common difference.
// Requires |A|, |B| >= 2.
bool vosper_check(const PrimeSet& a, const PrimeSet& b);
// |A+B| >= min(p, |A|+|B|-1)
bool cauchy_davenport_holds(const PrimeSet& a, const PrimeSet& b);

// Union of the orbits g·{1, r, ..., r^{p-1}} for the chosen g, plus {0}
// when requested. r must have multiplicative order `order` modulo q.
PrimeSet orbit_union_sets(long q, long r, long order, const std::vector<long>& orbit_reps, bool with_zero);
// Multiplicative order of r modulo q (0 when gcd(r, q) != 1).
long multiplicative_order(long r, long q);
// Orbit representatives (smallest member) of x -> r·x on the nonzero residues.
std::vector<long> orbit_representatives(long q, long r);

}  // namespace zsum
