#include "zsum/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "zsum/error.hpp"

namespace zsum {

namespace {

struct BoundName {
  BoundId id;
  std::string_view name;
};

constexpr BoundName kBoundNames[] = {
    {BoundId::basic_upper, "basic_upper"},
    {BoundId::basic_lower, "basic_lower"},
    {BoundId::commutator, "commutator"},
    {BoundId::commutator_refined, "commutator_refined"},
    {BoundId::pgroup, "pgroup"},
    {BoundId::pgroup_noncyclic, "pgroup_noncyclic"},
    {BoundId::nilpotent, "nilpotent"},
    {BoundId::d_quotient, "d_quotient"},
    {BoundId::fpq_exact_D, "fpq_exact_D"},
    {BoundId::fpq_exact_d, "fpq_exact_d"},
    {BoundId::fpq_eta, "fpq_eta"},
    {BoundId::near_dihedral_exact_d, "near_dihedral_exact_d"},
    {BoundId::two_over_p, "two_over_p"},
    {BoundId::three_over_four, "three_over_four"},
    {BoundId::mpn_lower, "mpn_lower"},
};

long gcd_l(long a, long b) { return std::gcd(a, b); }

Rational make_rational(long num, long den) {
  long g = gcd_l(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  return {num / g, den / g};
}

Rational integer(long v) { return {v, 1}; }
// den = 0 stands for "unbounded".
constexpr Rational kInfinite{1, 0};
bool is_infinite(const Rational& r) { return r.den == 0; }

Rational from_interval_end(long v) { return v == Interval::kUnknown ? kInfinite : integer(v); }

int cmp_int(long x, const Rational& b) {
  if (x == Interval::kUnknown) return is_infinite(b) ? 0 : 1;
  if (is_infinite(b)) return -1;
  __int128 lhs = static_cast<__int128>(x) * b.den;
  return lhs < b.num ? -1 : (lhs > b.num ? 1 : 0);
}

}  // namespace

const std::vector<BoundId>& all_bounds() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> v;
    for (const auto& b : kBoundNames) v.push_back(b.id);
    return v;
  }();
  return ids;
}

std::string_view to_string(BoundId id) {
  for (const auto& b : kBoundNames)
    if (b.id == id) return b.name;
  return "?";
}

BoundId parse_bound(std::string_view text) {
  for (const auto& b : kBoundNames)
    if (b.name == text) return b.id;
  throw Error(ErrorCode::usage, "unknown bound '" + std::string(text) + "'");
}

std::string to_string(const Rational& r) {
  if (is_infinite(r)) return "inf";
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int compare(const Rational& a, const Rational& b) {
  if (is_infinite(a) || is_infinite(b)) return is_infinite(a) - is_infinite(b);
  __int128 l = static_cast<__int128>(a.num) * b.den;
  __int128 r = static_cast<__int128>(b.num) * a.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::holds: return "holds";
    case BoundStatus::tight: return "tight";
    case BoundStatus::violated: return "violated";
    case BoundStatus::consistent: return "consistent";
    case BoundStatus::unchecked: return "unchecked";
  }
  return "?";
}

std::string_view to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::upper: return "upper";
    case BoundDirection::lower: return "lower";
    case BoundDirection::exact: return "exact";
  }
  return "?";
}

std::string_view to_string(EqualityCheck e) {
  switch (e) {
    case EqualityCheck::confirmed: return "confirmed";
    case EqualityCheck::violated: return "violated";
    case EqualityCheck::unknown: return "unknown";
  }
  return "?";
}

Interval certified_range(const InvariantResult& r, std::size_t group_order) {
  if (r.exhaustive) return Interval::exact(r.value);
  const long n = static_cast<long>(group_order);
  switch (r.kind) {
    case Invariant::d: return {r.value, std::max<long>(r.value, n - 1)};
    case Invariant::D: return {r.value, std::max<long>(r.value, n)};
    case Invariant::eta: return {r.value, Interval::kUnknown};
  }
  return {r.value, Interval::kUnknown};
}

// ---------------------------------------------------------------------------
// structure recognition

Element PresentationMatch::element(const FiniteGroup& g, long i, long j) const {
  return g.mul(g.pow(tau, i), g.pow(alpha, j));
}

namespace {

std::optional<PresentationMatch> match_metacyclic(const FiniteGroup& g, long n, long m,
                                                  const std::function<bool(long)>& r_ok) {
  if (static_cast<long>(g.order()) != n * m) return std::nullopt;
  std::vector<long> pos(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_order(a) != n) continue;
    std::fill(pos.begin(), pos.end(), -1);
    Element x = 0;
    for (long j = 0; j < n; ++j, x = g.mul(x, a)) pos[x] = j;
    for (Element t = 0; t < g.order(); ++t) {
      if (g.element_order(t) != m) continue;
      long r = pos[g.conj(a, t)];
      if (r < 0 || !r_ok(r)) continue;
      bool disjoint = true;
      Element y = t;
      for (long k = 1; k < m && disjoint; ++k, y = g.mul(y, t)) disjoint = pos[y] < 0;
      if (disjoint) return PresentationMatch{a, t, n, m, r};
    }
  }
  return std::nullopt;
}

long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  for (; e > 0; --e) r = r * b % m;
  return r;
}

}  // namespace

std::optional<FpqMatch> match_fpq(const GroupPtr& g) {
  if (g->is_abelian()) return std::nullopt;
  const long n = static_cast<long>(g->order());
  auto f = prime_factors(n);
  if (f.size() != 2 || f[0] * f[1] != n) return std::nullopt;
  const long p = f[0], q = f[1];
  if ((q - 1) % p != 0) return std::nullopt;
  auto m = match_metacyclic(*g, q, p, [](long r) { return r != 1; });
  if (!m) return std::nullopt;
  return FpqMatch{p, q, *m};
}

std::optional<MpnMatch> match_mpn(const GroupPtr& g) {
  if (g->is_abelian()) return std::nullopt;
  const long p = prime_power_base(g->order());
  if (!p) return std::nullopt;
  long k = 0;
  for (std::size_t x = g->order(); x > 1; x /= static_cast<std::size_t>(p)) ++k;
  if (k < 3) return std::nullopt;
  long n = 1;
  for (long i = 0; i < k - 1; ++i) n *= p;
  const long r = (1 + n / p) % n;
  auto m = match_metacyclic(*g, n, p, [r](long x) { return x == r; });
  if (!m) return std::nullopt;
  return MpnMatch{p, k, *m};
}

std::optional<NearDihedralMatch> match_near_dihedral(const GroupPtr& g) {
  const long n = static_cast<long>(g->order());
  if (n % 4 != 0) return std::nullopt;
  const long q = n / 4;
  if (!is_prime(q) || q % 4 != 1) return std::nullopt;
  auto m = match_metacyclic(*g, q, 4, [q](long r) { return pow_mod(r, 2, q) == q - 1; });
  if (!m) return std::nullopt;
  return NearDihedralMatch{q, *m};
}

bool is_dihedral_odd(const GroupPtr& g) {
  const long n2 = static_cast<long>(g->order());
  if (n2 % 2 != 0) return false;
  const long n = n2 / 2;
  if (n < 3 || n % 2 == 0) return false;
  return match_metacyclic(*g, n, 2, [n](long r) { return r == n - 1; }).has_value();
}

bool is_nilpotent(const FiniteGroup& g) {
  const long n = static_cast<long>(g.order());
  for (long p : prime_factors(n)) {
    long sylow = 1;
    for (long x = n; x % p == 0; x /= p) sylow *= p;
    long count = 0;
    for (Element a = 0; a < g.order(); ++a) {
      long o = g.element_order(a);
      while (o % p == 0) o /= p;
      if (o == 1) ++count;
    }
    if (count != sylow) return false;
  }
  return true;
}

std::vector<Subgroup> maximal_subgroups(const GroupPtr& g) {
  auto subs = all_subgroups(g);
  std::vector<Subgroup> proper;
  for (auto& s : subs)
    if (s.size() < g->order()) proper.push_back(s);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j)
      if (j != i && proper[j].size() > proper[i].size() && proper[i].members.subset_of(proper[j].members))
        maximal = false;
    if (maximal) out.push_back(proper[i]);
  }
  return out;
}

namespace {

// Normal H with G/H ≅ C_p × C_p; sets *prime.
std::vector<Subgroup> cp2_kernels(const GroupPtr& g, long* prime) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g)) {
    const std::size_t index = g->order() / h.size();
    const long p = prime_power_base(index);
    if (!p || static_cast<std::size_t>(p * p) != index || !is_normal(h)) continue;
    auto qm = quotient(g, h);
    if (is_cyclic(*qm.image)) continue;
    h.normal = true;
    *prime = p;
    out.push_back(h);
  }
  return out;
}

long centralizer_index_min(const GroupPtr& g) {
  auto z = center(g);
  long best = 0;
  for (Element x = 0; x < g->order(); ++x) {
    if (z.contains(x)) continue;
    long idx = static_cast<long>(g->order() / centralizer(g, x).size());
    if (!best || idx < best) best = idx;
  }
  return best;
}

[[noreturn]] void not_applicable(const std::string& why) { throw Error(ErrorCode::not_applicable, why); }

Interval need(const std::optional<InvariantResult>& r, const GroupPtr& g, const char* what) {
  if (!r) throw Error(ErrorCode::missing_context, std::string("bound needs ") + what);
  return certified_range(*r, g->order());
}

Rational add(const Rational& a, long k) {
  if (is_infinite(a)) return a;
  return make_rational(a.num + k * a.den, a.den);
}

}  // namespace

BoundEvaluation evaluate_bound(BoundId id, const GroupPtr& g, const BoundContext& ctx) {
  BoundEvaluation ev;
  ev.id = id;
  ev.applicable = true;
  const long n = static_cast<long>(g->order());
  auto set_exact = [&](Rational v) { ev.value = ev.value_hi = v; };

  switch (id) {
    case BoundId::basic_upper:
      ev.target = Invariant::D;
      set_exact(integer(n));
      ev.reason = "|G|";
      break;
    case BoundId::basic_lower: {
      ev.target = Invariant::D;
      ev.direction = BoundDirection::lower;
      auto d = need(ctx.d, g, "d(G)");
      ev.value = integer(d.lo + 1);
      ev.value_hi = add(from_interval_end(d.hi), 1);
      ev.reason = "d(G)+1";
      break;
    }
    case BoundId::commutator: {
      ev.target = Invariant::D;
      const long gp = static_cast<long>(commutator_subgroup(g).size());
      auto d = need(ctx.d, g, "d(G)");
      ev.value = integer(d.lo + 2 * gp - 1);
      ev.value_hi = add(from_interval_end(d.hi), 2 * gp - 1);
      ev.reason = "d(G)+2|G'|-1 with |G'|=" + std::to_string(gp);
      break;
    }
    case BoundId::commutator_refined: {
      if (g->is_abelian()) not_applicable("G is abelian");
      const long gp = static_cast<long>(commutator_subgroup(g).size());
      if (!is_prime(gp)) not_applicable("G' is not cyclic of prime order");
      const long p = centralizer_index_min(g);
      const long k = gp + (gp - 2) / (p - 1);
      auto d = need(ctx.d, g, "d(G)");
      if (!ctx.maximal_D) throw Error(ErrorCode::missing_context, "bound needs D(H) for maximal subgroups");
      long lo = d.lo + k;
      Rational hi = add(from_interval_end(d.hi), k);
      for (const auto& sv : *ctx.maximal_D) {
        auto dh = certified_range(sv.result, sv.subgroup.size());
        lo = std::max(lo, dh.lo + k - 2);
        Rational h2 = add(from_interval_end(dh.hi), k - 2);
        if (compare(h2, hi) > 0) hi = h2;
        if (!sv.result.exhaustive) ev.conditional = true;
      }
      ev.target = Invariant::D;
      ev.value = integer(lo);
      ev.value_hi = hi;
      ev.reason = "max(d(G)+k, D(H)+k-2 over maximal H), k=|G'|+floor((|G'|-2)/(p-1)), p=" + std::to_string(p);
      break;
    }
    case BoundId::pgroup: {
      const long p = prime_power_base(g->order());
      if (!p) not_applicable("not a p-group");
      if (g->is_abelian()) not_applicable("G is abelian");
      ev.target = Invariant::D;
      set_exact(make_rational((p * p + 2 * p - 2) * n, p * p * p));
      ev.reason = "(p^2+2p-2)/p^3 |G|, p=" + std::to_string(p);
      break;
    }
    case BoundId::pgroup_noncyclic: {
      const long p = prime_power_base(g->order());
      if (!p) not_applicable("not a p-group");
      if (is_cyclic(*g)) not_applicable("G is cyclic");
      ev.target = Invariant::D;
      set_exact(make_rational((2 * p - 1) * n, p * p));
      ev.reason = "(2p-1)/p^2 |G|, p=" + std::to_string(p);
      break;
    }
    case BoundId::nilpotent: {
      if (g->is_abelian()) not_applicable("G is abelian");
      if (!is_nilpotent(*g)) not_applicable("G is not nilpotent");
      const long p = smallest_prime_factor(n);
      ev.target = Invariant::D;
      set_exact(make_rational((p * p + 2 * p - 2) * n, p * p * p));
      ev.reason = "(p^2+2p-2)/p^3 |G|, p=" + std::to_string(p);
      break;
    }
    case BoundId::d_quotient: {
      long p = 0;
      auto kernels = cp2_kernels(g, &p);
      if (kernels.empty()) not_applicable("no normal H with G/H = C_p x C_p");
      if (!ctx.quotient_d) throw Error(ErrorCode::missing_context, "bound needs d(H) for C_p^2 kernels");
      ev.target = Invariant::d;
      Rational lo = kInfinite, hi = kInfinite;
      for (const auto& sv : *ctx.quotient_d) {
        auto dh = certified_range(sv.result, sv.subgroup.size());
        Rational l = integer((dh.lo + 2) * p - 2);
        Rational h = dh.hi == Interval::kUnknown ? kInfinite : integer((dh.hi + 2) * p - 2);
        if (compare(l, lo) < 0) lo = l;
        if (compare(h, hi) < 0) hi = h;
        if (!sv.result.exhaustive) ev.conditional = true;
      }
      if (is_infinite(lo)) throw Error(ErrorCode::missing_context, "no d(H) values supplied");
      ev.value = lo;
      ev.value_hi = hi;
      ev.reason = "min over H of (d(H)+2)p-2, p=" + std::to_string(p);
      break;
    }
    case BoundId::fpq_exact_D:
    case BoundId::fpq_exact_d:
    case BoundId::fpq_eta: {
      auto m = match_fpq(g);
      if (!m) not_applicable("G is not F_pq");
      if (id == BoundId::fpq_exact_D) {
        ev.target = Invariant::D;
        ev.direction = BoundDirection::exact;
        set_exact(integer(2 * m->q));
        ev.reason = "2q";
      } else if (id == BoundId::fpq_exact_d) {
        ev.target = Invariant::d;
        ev.direction = BoundDirection::exact;
        set_exact(integer(m->q + m->p - 2));
        ev.reason = "q+p-2";
      } else {
        ev.target = Invariant::eta;
        set_exact(integer(m->q + 2 * m->p - 3));
        ev.reason = "q+2p-3";
      }
      ev.reason += ", p=" + std::to_string(m->p) + ", q=" + std::to_string(m->q);
      break;
    }
    case BoundId::near_dihedral_exact_d: {
      auto m = match_near_dihedral(g);
      if (!m) not_applicable("G is not near-dihedral");
      ev.target = Invariant::d;
      ev.direction = BoundDirection::exact;
      set_exact(integer(m->q + 2));
      ev.reason = "q+2, q=" + std::to_string(m->q);
      break;
    }
    case BoundId::two_over_p: {
      if (is_cyclic(*g)) not_applicable("G is cyclic");
      const long p = smallest_prime_factor(n);
      ev.target = Invariant::D;
      set_exact(make_rational(2 * n, p));
      ev.reason = "2|G|/p, p=" + std::to_string(p);
      break;
    }
    case BoundId::three_over_four: {
      if (is_cyclic(*g)) not_applicable("G is cyclic");
      if (is_dihedral_odd(g)) not_applicable("G is dihedral of order 2n, n odd");
      ev.target = Invariant::D;
      set_exact(make_rational(3 * n, 4));
      ev.reason = "3|G|/4";
      break;
    }
    case BoundId::mpn_lower: {
      auto m = match_mpn(g);
      if (!m) not_applicable("G is not M_{p^n}");
      long pn1 = 1;
      for (long i = 0; i < m->n - 1; ++i) pn1 *= m->p;
      ev.target = Invariant::D;
      ev.direction = BoundDirection::lower;
      set_exact(integer(pn1 + m->p));
      ev.reason = "p^(n-1)+p, p=" + std::to_string(m->p) + ", n=" + std::to_string(m->n);
      break;
    }
  }
  return ev;
}

BoundEvaluation check_bound(BoundId id, const GroupPtr& g, const BoundContext& ctx) {
  BoundEvaluation ev;
  try {
    ev = evaluate_bound(id, g, ctx);
  } catch (const Error& e) {
    ev.id = id;
    if (e.code() == ErrorCode::not_applicable) {
      ev.applicable = false;
    } else if (e.code() == ErrorCode::missing_context) {
      ev.applicable = true;
      ev.status = BoundStatus::unchecked;
    } else {
      throw;
    }
    ev.reason = e.what();
    return ev;
  }
  const std::optional<InvariantResult>* src = nullptr;
  switch (ev.target) {
    case Invariant::d: src = &ctx.d; break;
    case Invariant::D: src = &ctx.D; break;
    case Invariant::eta: src = &ctx.eta; break;
  }
  if (!*src) {
    ev.status = BoundStatus::unchecked;
    return ev;
  }
  const Interval x = certified_range(**src, g->order());
  const bool all_exact = x.is_exact() && compare(ev.value, ev.value_hi) == 0;
  const bool equal = all_exact && cmp_int(x.lo, ev.value) == 0;
  switch (ev.direction) {
    case BoundDirection::upper:
      if (cmp_int(x.lo, ev.value_hi) > 0)
        ev.status = BoundStatus::violated;
      else if (equal)
        ev.status = BoundStatus::tight;
      else if (cmp_int(x.hi, ev.value) <= 0)
        ev.status = BoundStatus::holds;
      else
        ev.status = BoundStatus::consistent;
      break;
    case BoundDirection::lower:
      if (x.hi != Interval::kUnknown && cmp_int(x.hi, ev.value) < 0)
        ev.status = BoundStatus::violated;
      else if (equal)
        ev.status = BoundStatus::tight;
      else if (cmp_int(x.lo, ev.value_hi) >= 0)
        ev.status = BoundStatus::holds;
      else
        ev.status = BoundStatus::consistent;
      break;
    case BoundDirection::exact:
      if (equal)
        ev.status = BoundStatus::tight;
      else if ((x.hi != Interval::kUnknown && cmp_int(x.hi, ev.value) < 0) || cmp_int(x.lo, ev.value_hi) > 0 ||
               all_exact)
        ev.status = BoundStatus::violated;
      else
        ev.status = BoundStatus::consistent;
      break;
  }
  return ev;
}

// ---------------------------------------------------------------------------
// witnesses

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::fpq_atom: return "fpq_atom";
    case WitnessKind::fpq_free: return "fpq_free";
    case WitnessKind::mpn_atom: return "mpn_atom";
    case WitnessKind::near_dihedral_free: return "near_dihedral_free";
  }
  return "?";
}

WitnessKind parse_witness_kind(std::string_view text) {
  for (auto k : {WitnessKind::fpq_atom, WitnessKind::fpq_free, WitnessKind::mpn_atom, WitnessKind::near_dihedral_free})
    if (to_string(k) == text) return k;
  throw Error(ErrorCode::usage, "unknown witness kind '" + std::string(text) + "'");
}

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

Witness build_witness(WitnessKind kind, const GroupPtr& g, const PresentationMatch& pm, long p, long q) {
  const auto& G = *g;
  Witness w{kind, g, Sequence(g), 0, false};
  auto add = [&](long i, long j, int count = 1) { w.sequence.add(pm.element(G, i, mod(j, pm.n)), count); };
  switch (kind) {
    case WitnessKind::fpq_atom:
      // τ^{p-1} · α^[q-1] · τα^{r+1} · α^[q-1]
      add(p - 1, 0);
      add(0, 1, static_cast<int>(q - 1));
      add(1, pm.r + 1);
      add(0, 1, static_cast<int>(q - 1));
      w.expected_length = static_cast<int>(2 * q);
      w.expects_atom = true;
      break;
    case WitnessKind::fpq_free:
      add(0, 1, static_cast<int>(q - 1));
      add(1, 0, static_cast<int>(p - 1));
      w.expected_length = static_cast<int>(q + p - 2);
      break;
    case WitnessKind::mpn_atom:
      // τ^{p-1}α · α^[p-1] · τα^{1-p} · α^[p^{n-1}-1], with q standing for p^{n-1}
      add(p - 1, 1);
      add(0, 1, static_cast<int>(p - 1));
      add(1, 1 - p);
      add(0, 1, static_cast<int>(q - 1));
      w.expected_length = static_cast<int>(q + p);
      w.expects_atom = true;
      break;
    case WitnessKind::near_dihedral_free:
      add(0, 1, static_cast<int>(q - 1));
      add(1, 0, 3);
      w.expected_length = static_cast<int>(q + 2);
      break;
  }
  return w;
}

PresentationMatch from_presentation(const GroupPtr& g) {
  const auto& pres = *g->presentation();
  return PresentationMatch{pres.element(0, 1), pres.element(1, 0), pres.n, pres.m, pres.r};
}

void need_params(const std::vector<long>& params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi)
    throw Error(ErrorCode::invalid_parameters, "wrong number of witness parameters");
}

}  // namespace

Witness make_witness(WitnessKind kind, const std::vector<long>& params) {
  switch (kind) {
    case WitnessKind::fpq_atom:
    case WitnessKind::fpq_free: {
      need_params(params, 2, kind == WitnessKind::fpq_atom ? 3 : 2);
      auto spec = params.size() == 3 ? GroupSpec::fpq(params[0], params[1], params[2])
                                     : GroupSpec::fpq(params[0], params[1]);
      auto g = build_group(spec);
      return build_witness(kind, g, from_presentation(g), params[0], params[1]);
    }
    case WitnessKind::mpn_atom: {
      need_params(params, 2, 2);
      auto g = build_group(GroupSpec::mpn(params[0], params[1]));
      auto pm = from_presentation(g);
      return build_witness(kind, g, pm, params[0], pm.n);
    }
    case WitnessKind::near_dihedral_free: {
      need_params(params, 1, 1);
      auto g = build_group(GroupSpec::near_dihedral(params[0]));
      return build_witness(kind, g, from_presentation(g), 0, params[0]);
    }
  }
  throw Error(ErrorCode::invalid_parameters, "unknown witness kind");
}

std::optional<Witness> witness_in_group(WitnessKind kind, const GroupPtr& g) {
  switch (kind) {
    case WitnessKind::fpq_atom:
    case WitnessKind::fpq_free:
      if (auto m = match_fpq(g)) return build_witness(kind, g, m->pres, m->p, m->q);
      break;
    case WitnessKind::mpn_atom:
      if (auto m = match_mpn(g)) return build_witness(kind, g, m->pres, m->p, m->pres.n);
      break;
    case WitnessKind::near_dihedral_free:
      if (auto m = match_near_dihedral(g)) return build_witness(kind, g, m->pres, 0, m->q);
      break;
  }
  return std::nullopt;
}

WitnessCheck check_witness(const Witness& w, std::size_t dp_budget) {
  WitnessCheck c;
  c.kind = w.kind;
  c.sequence = w.sequence;
  c.expected_length = w.expected_length;
  c.expects_atom = w.expects_atom;
  c.length_ok = w.sequence.length() == w.expected_length;
  c.predicate_ok = w.expects_atom ? is_atom(w.sequence, dp_budget) : is_product_one_free(w.sequence, dp_budget);
  return c;
}

// ---------------------------------------------------------------------------

BoundReport verify_group(const GroupPtr& g, const SearchBudget& budget) {
  const auto start = std::chrono::steady_clock::now();
  BoundReport rep;
  rep.group = g;
  rep.d = small_davenport(g, budget);
  rep.D = large_davenport(g, budget);
  rep.eta = eta(g, budget);

  // Witnesses coming out of the searches are re-checked from scratch.
  if (!is_product_one_free(rep.d.witness, budget.dp_budget) || rep.d.witness.length() != rep.d.value)
    rep.violations.push_back("d witness is not product-one free of the reported length");
  if (!is_atom(rep.D.witness, budget.dp_budget) || rep.D.witness.length() != rep.D.value)
    rep.violations.push_back("D witness is not an atom of the reported length");
  if (g->order() > 1 && (rep.eta.witness.length() != rep.eta.value - 1 ||
                         big_pi_upto(rep.eta.witness, g->max_element_order(), budget.dp_budget).contains(0)))
    rep.violations.push_back("eta witness has a short product-one subsequence");

  BoundContext ctx;
  ctx.d = rep.d;
  ctx.D = rep.D;
  ctx.eta = rep.eta;
  if (!g->is_abelian() && is_prime(static_cast<long>(commutator_subgroup(g).size()))) {
    std::vector<SubgroupValue> vals;
    for (auto& h : maximal_subgroups(g)) vals.push_back({h, large_davenport(subgroup_as_group(h), budget)});
    ctx.maximal_D = std::move(vals);
  }
  {
    long p = 0;
    auto kernels = cp2_kernels(g, &p);
    if (!kernels.empty()) {
      std::vector<SubgroupValue> vals;
      for (auto& h : kernels) vals.push_back({h, small_davenport(subgroup_as_group(h), budget)});
      ctx.quotient_d = std::move(vals);
    }
  }

  for (BoundId id : all_bounds()) {
    auto ev = check_bound(id, g, ctx);
    if (ev.applicable && ev.status == BoundStatus::violated)
      rep.violations.push_back(std::string(to_string(id)) + " violated (" + ev.reason + ")");
    if (id == BoundId::commutator && ev.applicable && ev.status != BoundStatus::unchecked) {
      const Interval x = certified_range(rep.D, g->order());
      if (g->is_abelian()) {
        if (ev.status == BoundStatus::tight)
          rep.commutator_equality = EqualityCheck::confirmed;
        else if (ev.status == BoundStatus::holds || ev.status == BoundStatus::violated)
          rep.commutator_equality = EqualityCheck::violated;
      } else {
        if (ev.status == BoundStatus::tight)
          rep.commutator_equality = EqualityCheck::violated;
        else if (x.hi != Interval::kUnknown && cmp_int(x.hi, ev.value) < 0)
          rep.commutator_equality = EqualityCheck::confirmed;
      }
      if (rep.commutator_equality == EqualityCheck::violated)
        rep.violations.push_back("commutator bound equality does not match abelianness");
    }
    rep.bounds.push_back(std::move(ev));
  }

  for (auto kind : {WitnessKind::fpq_atom, WitnessKind::fpq_free, WitnessKind::mpn_atom,
                    WitnessKind::near_dihedral_free}) {
    auto w = witness_in_group(kind, g);
    if (!w) continue;
    auto c = check_witness(*w, budget.dp_budget);
    if (!c.passed()) rep.violations.push_back(std::string(to_string(kind)) + " witness failed");
    rep.witnesses.push_back(std::move(c));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::optional<std::pair<long, BoundId>> best_upper_bound(const GroupPtr& g, const BoundContext& ctx) {
  std::optional<std::pair<long, BoundId>> best;
  for (BoundId id : all_bounds()) {
    BoundEvaluation ev;
    try {
      ev = evaluate_bound(id, g, ctx);
    } catch (const Error&) {
      continue;
    }
    if (ev.target != Invariant::D || ev.direction == BoundDirection::lower || is_infinite(ev.value_hi)) continue;
    const long v = ev.value_hi.num / ev.value_hi.den;
    if (!best || v < best->first) best = std::make_pair(v, id);
  }
  return best;
}

}  // namespace zsum
