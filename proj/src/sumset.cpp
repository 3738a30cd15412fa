#include "zsum/sumset.hpp"

#include <numeric>

#include "zsum/error.hpp"
#include "zsum/group.hpp"

namespace zsum {

PrimeSet::PrimeSet(long p) : p_(p), mask_(static_cast<std::size_t>(p), 0) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_parameters, "modulus must be prime");
}

PrimeSet::PrimeSet(long p, const std::vector<long>& members) : PrimeSet(p) {
  for (long x : members) insert(x);
}

std::size_t PrimeSet::size() const {
  std::size_t n = 0;
  for (char c : mask_) n += c != 0;
  return n;
}

std::vector<long> PrimeSet::members() const {
  std::vector<long> out;
  for (long x = 0; x < p_; ++x)
    if (mask_[static_cast<std::size_t>(x)]) out.push_back(x);
  return out;
}

PrimeSet PrimeSet::scaled(long k) const {
  PrimeSet out(p_);
  for (long x : members()) out.insert(x * norm(k));
  return out;
}

std::string PrimeSet::to_string() const {
  std::string s = "{";
  for (long x : members()) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(x);
  }
  return s + "} mod " + std::to_string(p_);
}

PrimeSet sumset(const PrimeSet& a, const PrimeSet& b) {
  if (a.modulus() != b.modulus()) throw Error(ErrorCode::modulus_mismatch, "sumset of sets with different moduli");
  PrimeSet out(a.modulus());
  const auto bm = b.members();
  for (long x : a.members())
    for (long y : bm) out.insert(x + y);
  return out;
}

bool is_progression_with_difference(const PrimeSet& a, long d) {
  const long p = a.modulus();
  const long n = static_cast<long>(a.size());
  if (n <= 1 || n >= p - 1) return true;
  d = ((d % p) + p) % p;
  if (d == 0) return false;
  // An AP {s, s+d, ...} has exactly one member whose predecessor is missing.
  long starts = 0;
  for (long x : a.members())
    if (!a.contains(x - d)) ++starts;
  return starts == 1;
}

std::optional<long> progression_difference(const PrimeSet& a) {
  const long p = a.modulus();
  const long n = static_cast<long>(a.size());
  if (n <= 1 || n >= p - 1) return 1;
  for (long d = 1; d <= (p - 1) / 2; ++d)
    if (is_progression_with_difference(a, d)) return d;
  return std::nullopt;
}

bool is_arithmetic_progression(const PrimeSet& a) { return progression_difference(a).has_value(); }

bool cauchy_davenport_holds(const PrimeSet& a, const PrimeSet& b) {
  const long s = static_cast<long>(sumset(a, b).size());
  return s >= std::min<long>(a.modulus(), static_cast<long>(a.size() + b.size()) - 1);
}

bool vosper_check(const PrimeSet& a, const PrimeSet& b) {
  if (a.size() < 2 || b.size() < 2) throw Error(ErrorCode::size_precondition, "Vosper needs |A|, |B| >= 2");
  const long p = a.modulus();
  const long s = static_cast<long>(sumset(a, b).size());
  if (s >= std::min<long>(p - 1, static_cast<long>(a.size() + b.size()))) return true;
  for (long d = 1; d <= (p - 1) / 2; ++d)
    if (is_progression_with_difference(a, d) && is_progression_with_difference(b, d)) return true;
  return false;
}

long multiplicative_order(long r, long q) {
  r = ((r % q) + q) % q;
  if (std::gcd(r, q) != 1) return 0;
  long x = r, k = 1;
  while (x != 1 % q) {
    x = x * r % q;
    ++k;
  }
  return k;
}

std::vector<long> orbit_representatives(long q, long r) {
  std::vector<char> seen(static_cast<std::size_t>(q), 0);
  std::vector<long> reps;
  for (long g = 1; g < q; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    reps.push_back(g);
    long x = g;
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      x = x * r % q;
    } while (x != g);
  }
  return reps;
}

PrimeSet orbit_union_sets(long q, long r, long order, const std::vector<long>& orbit_reps, bool with_zero) {
  if (multiplicative_order(r, q) != order) throw Error(ErrorCode::bad_order, "r does not have the stated order mod q");
  PrimeSet out(q);
  if (with_zero) out.insert(0);
  for (long g : orbit_reps) {
    long x = ((g % q) + q) % q;
    for (long k = 0; k < order; ++k, x = x * r % q) out.insert(x);
  }
  return out;
}

}  // namespace zsum
