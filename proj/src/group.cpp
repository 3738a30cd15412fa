#include "zsum/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "zsum/error.hpp"

namespace zsum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameters: return "invalid-parameters";
    case ErrorCode::malformed_table: return "table-file-malformed";
    case ErrorCode::non_associative: return "non-associative-table";
    case ErrorCode::not_normal: return "not-normal";
    case ErrorCode::limit_exceeded: return "limit-exceeded";
    case ErrorCode::budget_exceeded: return "budget-exceeded";
    case ErrorCode::not_applicable: return "not-applicable";
    case ErrorCode::missing_context: return "missing-context";
    case ErrorCode::precondition_violated: return "precondition-violated";
    case ErrorCode::modulus_mismatch: return "modulus-mismatch";
    case ErrorCode::size_precondition: return "size-precondition";
    case ErrorCode::bad_order: return "bad-order-of-r";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// number theory helpers

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long smallest_prime_factor(long n) {
  auto f = prime_factors(n);
  return f.empty() ? 0 : f.front();
}

long prime_power_base(std::size_t n) {
  auto f = prime_factors(static_cast<long>(n));
  return f.size() == 1 ? f.front() : 0;
}

namespace {

long mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long pow_mod(long b, long e, long n) {
  long result = 1 % n;
  b = mod(b, n);
  while (e > 0) {
    if (e & 1) result = result * b % n;
    b = b * b % n;
    e >>= 1;
  }
  return result;
}

long multiplicative_order(long r, long n) {
  r = mod(r, n);
  if (std::gcd(r, n) != 1) return 0;
  long x = r % n;
  for (long k = 1; k <= n; ++k) {
    if (x == 1 % n) return k;
    x = x * r % n;
  }
  return 0;
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::invalid_parameters, what); }

long parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) invalid("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<long> split_longs(std::string_view s, char sep) {
  std::vector<long> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(parse_long(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string power_name(const std::string& letter, long e) {
  if (e == 0) return "";
  if (e == 1) return letter;
  return letter + "^" + std::to_string(e);
}

GroupPtr metacyclic_group(long n, long m, long r, std::string label) {
  if (n < 1 || m < 1) invalid("metacyclic needs n, m >= 1");
  if (std::gcd(mod(r, n), n) != 1 && n > 1) invalid("metacyclic needs gcd(r, n) = 1");
  if (pow_mod(r, m, n) != 1 % n) invalid("metacyclic needs r^m = 1 mod n");
  std::size_t order = static_cast<std::size_t>(n * m);
  std::vector<long> rpow(static_cast<std::size_t>(m));
  for (long c = 0; c < m; ++c) rpow[c] = pow_mod(r, c, n);
  std::vector<Element> table(order * order);
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < m; ++c)
        for (long d = 0; d < n; ++d) {
          // (t^a a^b)(t^c a^d) = t^(a+c) a^(b r^c + d)
          long i = (a + c) % m;
          long j = (b * rpow[c] + d) % n;
          table[(a * n + b) * order + (c * n + d)] = static_cast<Element>(i * n + j);
        }
  std::vector<std::string> names(order);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < n; ++j) {
      std::string s = power_name("t", i) + power_name("a", j);
      names[i * n + j] = s.empty() ? "1" : s;
    }
  return std::make_shared<const FiniteGroup>(order, std::move(table), std::move(names), std::move(label),
                                             MetacyclicPresentation{n, m, mod(r, n == 0 ? 1 : n)});
}

GroupPtr abelian_group(const std::vector<long>& factors, std::string label) {
  std::size_t order = 1;
  for (long f : factors) {
    if (f < 1) invalid("cyclic factors must be positive");
    order *= static_cast<std::size_t>(f);
  }
  if (order > 4096) invalid("group order too large");
  const std::size_t k = factors.size();
  auto digits = [&](std::size_t x) {
    std::vector<long> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = static_cast<long>(x % factors[i]);
      x /= factors[i];
    }
    return d;
  };
  auto index = [&](const std::vector<long>& d) {
    std::size_t x = 0;
    for (std::size_t i = k; i-- > 0;) x = x * factors[i] + static_cast<std::size_t>(d[i]);
    return x;
  };
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    auto dx = digits(x);
    for (std::size_t y = 0; y < order; ++y) {
      auto dy = digits(y);
      for (std::size_t i = 0; i < k; ++i) dy[i] = (dx[i] + dy[i]) % factors[i];
      table[x * order + y] = static_cast<Element>(index(dy));
    }
  }
  static const std::string letters = "abcdefghijklmnopqrsuvwxyz";
  std::vector<std::string> names(order);
  for (std::size_t x = 0; x < order; ++x) {
    auto d = digits(x);
    std::string s;
    for (std::size_t i = 0; i < k; ++i) s += power_name(std::string(1, letters[i % letters.size()]), d[i]);
    names[x] = s.empty() ? "1" : s;
  }
  std::optional<MetacyclicPresentation> pres;
  if (k == 1) pres = MetacyclicPresentation{factors[0], 1, 1};
  return std::make_shared<const FiniteGroup>(order, std::move(table), std::move(names), std::move(label), pres);
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec parse_group_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) invalid("group spec needs KIND:params, got '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (rest.empty()) invalid("empty group parameters");
  if (kind == "T") return GroupSpec::table(std::string(rest));
  if (kind == "C") {
    auto f = split_longs(rest, 'x');
    if (f.size() == 1) return GroupSpec::cyclic(f[0]);
    return GroupSpec::abelian(std::move(f));
  }
  auto p = split_longs(rest, ',');
  if (kind == "D" && p.size() == 1) return GroupSpec::dihedral(p[0]);
  if (kind == "MC" && p.size() == 3) return GroupSpec::metacyclic(p[0], p[1], p[2]);
  if (kind == "F" && p.size() == 2) return GroupSpec::fpq(p[0], p[1]);
  if (kind == "F" && p.size() == 3) return GroupSpec::fpq(p[0], p[1], p[2]);
  if (kind == "M" && p.size() == 2) return GroupSpec::mpn(p[0], p[1]);
  if (kind == "ND" && p.size() == 1) return GroupSpec::near_dihedral(p[0]);
  invalid("unrecognised group spec '" + std::string(text) + "'");
}

std::string to_string(const GroupSpec& spec) {
  auto join = [&](char sep) {
    std::string s;
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(spec.params[i]);
    }
    return s;
  };
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return "C:" + join('x');
    case GroupSpec::Kind::abelian: return "C:" + join('x');
    case GroupSpec::Kind::dihedral: return "D:" + join(',');
    case GroupSpec::Kind::metacyclic: return "MC:" + join(',');
    case GroupSpec::Kind::fpq: return "F:" + join(',');
    case GroupSpec::Kind::mpn: return "M:" + join(',');
    case GroupSpec::Kind::near_dihedral: return "ND:" + join(',');
    case GroupSpec::Kind::table: return "T:" + spec.path;
  }
  return "?";
}

Element MetacyclicPresentation::alpha_power(long j) const { return static_cast<Element>(mod(j, n)); }

Element MetacyclicPresentation::element(long i, long j) const {
  return static_cast<Element>(mod(i, m) * n + mod(j, n));
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names,
                         std::string label, std::optional<MetacyclicPresentation> presentation)
    : order_(order),
      table_(std::move(table)),
      names_(std::move(names)),
      label_(std::move(label)),
      presentation_(presentation) {
  const std::size_t n = order_;
  if (n == 0) throw Error(ErrorCode::malformed_table, "group order must be positive");
  if (table_.size() != n * n) throw Error(ErrorCode::malformed_table, "table has wrong size");
  if (names_.size() != n) throw Error(ErrorCode::malformed_table, "names have wrong size");
  for (auto x : table_)
    if (x >= n) throw Error(ErrorCode::malformed_table, "table entry out of range");
  for (std::size_t a = 0; a < n; ++a)
    if (mul(0, static_cast<Element>(a)) != a || mul(static_cast<Element>(a), 0) != a)
      throw Error(ErrorCode::malformed_table, "index 0 is not a two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element ab = mul(static_cast<Element>(a), static_cast<Element>(b));
      const Element* row_ab = &table_[ab * n];
      for (std::size_t c = 0; c < n; ++c)
        if (row_ab[c] != mul(static_cast<Element>(a), mul(static_cast<Element>(b), static_cast<Element>(c))))
          throw Error(ErrorCode::non_associative, "associativity fails");
    }
  inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
        if (mul(static_cast<Element>(b), static_cast<Element>(a)) != 0)
          throw Error(ErrorCode::malformed_table, "inverse is not two-sided");
        inv_[a] = static_cast<Element>(b);
        found = true;
      }
    if (!found) throw Error(ErrorCode::malformed_table, "element without inverse");
  }
  elem_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    Element x = static_cast<Element>(a);
    int k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Element>(a));
      ++k;
    }
    elem_order_[a] = k;
    max_order_ = std::max(max_order_, k);
    exponent_ = std::lcm(exponent_, k);
  }
  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!commute(static_cast<Element>(a), static_cast<Element>(b))) {
        abelian_ = false;
        break;
      }
}

Element FiniteGroup::pow(Element a, long k) const {
  long o = elem_order_[a];
  k = mod(k, o);
  Element x = 0;
  for (long i = 0; i < k; ++i) x = mul(x, a);
  return x;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  for (std::size_t i = 0; i < order_; ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

std::uint64_t FiniteGroup::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](std::uint64_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  feed(order_);
  for (auto x : table_) feed(x);
  return h;
}

// ---------------------------------------------------------------------------
// construction

GroupPtr group_from_table(std::size_t order, std::vector<Element> table, std::string label) {
  if (table.size() != order * order) throw Error(ErrorCode::malformed_table, "table has wrong size");
  // Relabel so the identity sits at index 0.
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < order && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < order && ok; ++b) ok = table[a * order + b] == b && table[b * order + a] == b;
    if (ok) e = a;
  }
  if (!e) throw Error(ErrorCode::malformed_table, "table has no identity");
  std::vector<Element> perm(order);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::swap(perm[0], perm[*e]);  // perm: new index -> old index (an involution)
  std::vector<Element> relabeled(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      relabeled[a * order + b] = perm[table[perm[a] * order + perm[b]]];
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) names[a] = a == 0 ? "1" : "e" + std::to_string(perm[a]);
  return std::make_shared<const FiniteGroup>(order, std::move(relabeled), std::move(names), std::move(label));
}

GroupPtr load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::malformed_table, "cannot open '" + path + "'");
  long order = 0;
  if (!(in >> order) || order <= 0 || order > 4096)
    throw Error(ErrorCode::malformed_table, "first line must be the group order");
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(order * order));
  for (long i = 0; i < order * order; ++i) {
    long v = 0;
    if (!(in >> v)) throw Error(ErrorCode::malformed_table, "table truncated");
    if (v < 0 || v >= order) throw Error(ErrorCode::malformed_table, "table entry out of range");
    table.push_back(static_cast<Element>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::malformed_table, "trailing data after table");
  return group_from_table(static_cast<std::size_t>(order), std::move(table), "T:" + path);
}

GroupPtr build_group(const GroupSpec& spec) {
  const auto& p = spec.params;
  std::string label = to_string(spec);
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      if (p.size() != 1 || p[0] < 1) invalid("cyclic(n) needs n >= 1");
      return abelian_group({p[0]}, label);
    case GroupSpec::Kind::abelian:
      if (p.empty()) invalid("abelian needs at least one factor");
      return abelian_group(p, label);
    case GroupSpec::Kind::dihedral:
      if (p.size() != 1 || p[0] < 2 || p[0] % 2) invalid("dihedral needs an even order 2n >= 2");
      return metacyclic_group(p[0] / 2, 2, p[0] / 2 - 1, label);
    case GroupSpec::Kind::metacyclic:
      if (p.size() != 3) invalid("metacyclic needs n, m, r");
      return metacyclic_group(p[0], p[1], p[2], label);
    case GroupSpec::Kind::fpq: {
      if (p.size() < 2) invalid("fpq needs p, q");
      long pp = p[0], q = p[1];
      if (!is_prime(pp) || !is_prime(q)) invalid("fpq needs p and q prime");
      if ((q - 1) % pp != 0) invalid("fpq needs p | q-1");
      long r = 0;
      if (p.size() == 3) {
        r = mod(p[2], q);
        if (pow_mod(r, pp, q) != 1 || r == 1) invalid("fpq needs r^p = 1 and r != 1 mod q");
      } else {
        for (long c = 2; c < q && !r; ++c)
          if (multiplicative_order(c, q) == pp) r = c;
      }
      return metacyclic_group(q, pp, r, "F:" + std::to_string(pp) + "," + std::to_string(q) + "," + std::to_string(r));
    }
    case GroupSpec::Kind::mpn: {
      if (p.size() != 2 || !is_prime(p[0]) || p[1] < 3) invalid("mpn needs p prime and n >= 3");
      long big = 1;
      for (long i = 0; i < p[1] - 1; ++i) big *= p[0];
      if (big * p[0] > 4096) invalid("mpn order too large");
      return metacyclic_group(big, p[0], 1 + big / p[0], label);
    }
    case GroupSpec::Kind::near_dihedral: {
      if (p.size() != 1) invalid("near_dihedral needs q");
      long q = p[0];
      if (!is_prime(q) || q % 2 == 0 || q % 4 != 1) invalid("near_dihedral needs an odd prime q = 1 mod 4");
      long r = 0;
      for (long c = 2; c < q && !r; ++c)
        if (c * c % q == q - 1) r = c;
      return metacyclic_group(q, 4, r, label);
    }
    case GroupSpec::Kind::table:
      return load_table(spec.path);
  }
  invalid("unknown group kind");
}

GroupPtr build_group(std::string_view spec_text) { return build_group(parse_group_spec(spec_text)); }

// ---------------------------------------------------------------------------
// subgroups

namespace {

ElementSet closure(const GroupPtr& g, const std::vector<Element>& gens) {
  ElementSet out(g);
  out.insert(0);
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      Element y = g->mul(x, s);
      if (!out.contains(y)) {
        out.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

bool is_subgroup(const ElementSet& members) {
  const auto& g = members.group();
  if (!members.contains(0)) return false;
  auto elems = members.elements();
  for (Element a : elems) {
    if (!members.contains(g->inv(a))) return false;
    for (Element b : elems)
      if (!members.contains(g->mul(a, b))) return false;
  }
  return true;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Element>& gens) {
  Subgroup h{g, closure(g, gens), false};
  return h;
}

Subgroup whole_group(const GroupPtr& g) { return {g, ElementSet::all(g), true}; }
Subgroup trivial_subgroup(const GroupPtr& g) { return {g, ElementSet::of(g, {0}), true}; }

Subgroup center(const GroupPtr& g) {
  ElementSet z(g);
  const auto n = static_cast<Element>(g->order());
  for (Element a = 0; a < n; ++a) {
    bool central = true;
    for (Element b = 0; b < n && central; ++b) central = g->commute(a, b);
    if (central) z.insert(a);
  }
  return {g, z, true};
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::vector<Element> comms;
  const auto n = static_cast<Element>(g->order());
  ElementSet seen(g);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element c = g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y));
      if (!seen.contains(c)) {
        seen.insert(c);
        comms.push_back(c);
      }
    }
  return {g, closure(g, comms), true};
}

Subgroup centralizer(const GroupPtr& g, Element x) {
  ElementSet c(g);
  for (Element y = 0; y < g->order(); ++y)
    if (g->commute(x, y)) c.insert(y);
  return {g, c, false};
}

ElementSet conjugation_orbit(const GroupPtr& g, const Subgroup& h, Element a) {
  ElementSet orbit(g);
  h.members.mask().for_each([&](std::size_t x) { orbit.insert(g->conj(a, static_cast<Element>(x))); });
  return orbit;
}

std::vector<ElementSet> conjugacy_classes(const GroupPtr& g) {
  std::vector<ElementSet> classes;
  ElementSet covered(g);
  auto all = whole_group(g);
  for (Element a = 0; a < g->order(); ++a) {
    if (covered.contains(a)) continue;
    auto orbit = conjugation_orbit(g, all, a);
    covered |= orbit;
    classes.push_back(std::move(orbit));
  }
  return classes;
}

bool is_normal(const Subgroup& h) {
  const auto& g = h.parent;
  auto elems = h.members.elements();
  for (Element x = 0; x < g->order(); ++x)
    for (Element a : elems)
      if (!h.members.contains(g->conj(a, x))) return false;
  return true;
}

QuotientMap quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_normal(n)) throw Error(ErrorCode::not_normal, "quotient by a non-normal subgroup");
  const std::size_t order = g->order();
  std::vector<Element> proj(order, static_cast<Element>(order));
  std::vector<Element> reps;
  auto kernel = n.members.elements();
  for (Element x = 0; x < order; ++x) {
    if (proj[x] != order) continue;
    auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : kernel) proj[g->mul(x, k)] = idx;
  }
  const std::size_t m = reps.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = proj[g->mul(reps[i], reps[j])];
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) names[i] = i == 0 ? "1" : "[" + g->name(reps[i]) + "]";
  auto image = std::make_shared<const FiniteGroup>(m, std::move(table), std::move(names), g->label() + "/N");
  Subgroup kern = n;
  kern.normal = true;
  return {g, kern, image, std::move(proj)};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  auto key = [](const ElementSet& s) { return s.mask().indices(); };
  std::set<std::vector<std::size_t>> seen;
  std::vector<ElementSet> found;
  std::vector<ElementSet> cyclic;
  for (Element x = 0; x < g->order(); ++x) {
    auto c = closure(g, {x});
    if (seen.insert(key(c)).second) {
      found.push_back(c);
      cyclic.push_back(c);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.subset_of(found[i])) continue;
      std::vector<Element> gens = found[i].elements();
      for (Element y : c.elements()) gens.push_back(y);
      auto joined = closure(g, gens);
      if (seen.insert(key(joined)).second) found.push_back(joined);
    }
  }
  std::sort(found.begin(), found.end(), [&](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return key(a) < key(b);
  });
  std::vector<Subgroup> out;
  for (auto& s : found) {
    Subgroup h{g, s, false};
    h.normal = is_normal(h);
    out.push_back(std::move(h));
  }
  return out;
}

GroupPtr subgroup_as_group(const Subgroup& h, std::vector<Element>* embedding) {
  const auto& g = h.parent;
  auto elems = h.members.elements();  // ascending, identity first
  const std::size_t m = elems.size();
  std::vector<Element> index(g->order(), 0);
  for (std::size_t i = 0; i < m; ++i) index[elems[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = index[g->mul(elems[i], elems[j])];
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) names[i] = g->name(elems[i]);
  if (embedding) *embedding = elems;
  return std::make_shared<const FiniteGroup>(m, std::move(table), std::move(names),
                                             g->label() + "<" + std::to_string(m) + ">");
}

bool is_cyclic(const FiniteGroup& g) { return static_cast<std::size_t>(g.max_element_order()) == g.order(); }

// ---------------------------------------------------------------------------
// automorphisms

std::vector<std::vector<Element>> automorphism_group(const GroupPtr& g, std::size_t order_limit) {
  const std::size_t n = g->order();
  if (n > order_limit)
    throw Error(ErrorCode::limit_exceeded, "automorphism search limited to order " + std::to_string(order_limit));
  // Greedy generating set, preferring high-order elements.
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return g->element_order(a) > g->element_order(b); });
  std::vector<Element> gens;
  ElementSet span = closure(g, {});
  for (Element x : by_order) {
    if (span.size() == n) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
  }

  std::vector<std::vector<Element>> result;
  if (gens.empty()) {
    result.push_back({0});
    return result;
  }
  const Element unset = static_cast<Element>(n);
  std::vector<Element> images(gens.size());

  // Extends the map along right multiplication by the first k generators;
  // returns false on inconsistency or loss of injectivity.
  auto extend = [&](std::size_t k, std::vector<Element>& map) {
    map.assign(n, unset);
    std::vector<char> used(n, 0);
    map[0] = 0;
    used[0] = 1;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
      Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < k; ++i) {
        Element y = g->mul(x, gens[i]);
        Element fy = g->mul(map[x], images[i]);
        if (map[y] == unset) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Element> map;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      if (extend(k, map)) result.push_back(map);
      return;
    }
    for (Element cand = 1; cand < n; ++cand) {
      if (g->element_order(cand) != g->element_order(gens[k])) continue;
      images[k] = cand;
      if (extend(k + 1, map)) self(self, k + 1);
    }
  };
  search(search, 0);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace zsum
