// zsum: command-line front end.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "zsum/bounds.hpp"
#include "zsum/error.hpp"
#include "zsum/factorizer.hpp"
#include "zsum/invariants.hpp"
#include "zsum/report.hpp"
#include "zsum/sequence.hpp"

namespace fs = std::filesystem;
using namespace zsum;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

struct Options {
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0.0;
  std::size_t dp_budget = kDefaultDpBudget;
  bool no_aut = false;
  std::string format = "json";
  std::string cache_dir;
  std::uint64_t seed = 20240517;
  int jobs = 0;

  SearchBudget budget() const {
    SearchBudget b;
    b.max_nodes = budget_nodes;
    b.time_limit = budget_seconds;
    b.dp_budget = dp_budget;
    b.use_automorphisms = !no_aut;
    return b;
  }
};

// Fixed-width text table; csv when requested.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, bool csv) const {
    if (csv) {
      print_csv_row(os, header_);
      for (const auto& r : rows_) print_csv_row(os, r);
      return;
    }
    std::vector<std::size_t> w(header_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = header_[i].size();
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        if (i + 1 < r.size()) os << "  ";
      }
      os << "\n";
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  static void print_csv_row(std::ostream& os, const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ",";
      if (r[i].find_first_of(",\"\n") != std::string::npos) {
        os << '"';
        for (char c : r[i]) os << (c == '"' ? "\"\"" : std::string(1, c));
        os << '"';
      } else {
        os << r[i];
      }
    }
    os << "\n";
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

void emit(const Options& opt, const json& j, const Table& t) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    t.print(std::cout, opt.format == "csv");
}

std::string range_text(const InvariantResult& r, std::size_t order) {
  const Interval iv = certified_range(r, order);
  if (iv.is_exact()) return std::to_string(iv.lo);
  return "[" + std::to_string(iv.lo) + ", " + (iv.hi == Interval::kUnknown ? "?" : std::to_string(iv.hi)) + "]";
}

// ---------------------------------------------------------------------------

int cmd_info(const Options& opt, const std::string& spec) {
  auto g = build_group(spec);
  json j = group_info_json(g);
  Table t({"field", "value"});
  for (const char* key : {"group", "order", "abelian", "cyclic", "exponent", "max_order", "center_order",
                          "commutator_order", "automorphisms", "fingerprint"})
    if (j.contains(key)) t.add({key, j[key].is_string() ? j[key].get<std::string>() : j[key].dump()});
  t.add({"class_sizes", j["class_sizes"].dump()});
  t.add({"families", j["families"].dump()});
  emit(opt, j, t);
  return kOk;
}

InvariantResult run_invariant(const Options& opt, Invariant inv, const GroupPtr& g) {
  std::optional<ResultCache> cache;
  if (!opt.cache_dir.empty()) cache.emplace(opt.cache_dir);
  if (cache)
    if (auto hit = cache->load(g, inv)) return *hit;
  auto r = compute_invariant(inv, g, opt.budget());
  if (inv == Invariant::D) {
    BoundContext ctx;
    ctx.D = r;
    if (auto ub = best_upper_bound(g, ctx)) {
      r.upper_bound = static_cast<int>(ub->first);
      r.upper_source = std::string(to_string(ub->second));
    }
  }
  if (cache) cache->store(g, r);
  return r;
}

int cmd_invariant(const Options& opt, const std::string& which, const std::string& spec) {
  const Invariant inv = parse_invariant(which);
  auto g = build_group(spec);
  auto r = run_invariant(opt, inv, g);
  Table t({"group", "invariant", "value", "exhaustive", "certified", "upper_bound", "nodes", "seconds", "witness"});
  t.add({g->label(), std::string(to_string(inv)), std::to_string(r.value), r.exhaustive ? "yes" : "no",
         range_text(r, g->order()), r.upper_bound ? std::to_string(*r.upper_bound) : "-", std::to_string(r.nodes),
         fmt_seconds(r.seconds), r.witness.to_string()});
  emit(opt, to_json(r, g), t);
  return r.exhaustive ? kOk : kBudget;
}

void report_rows(Table& t, const BoundReport& rep) {
  t.add({rep.group->label(), std::to_string(rep.group->order()), range_text(rep.d, rep.group->order()),
         range_text(rep.D, rep.group->order()), range_text(rep.eta, rep.group->order()),
         std::string(to_string(rep.commutator_equality)), std::to_string(rep.violations.size()),
         fmt_seconds(rep.seconds)});
}

int report_exit(const BoundReport& rep) {
  if (!rep.violations.empty()) return kViolation;
  if (!rep.d.exhaustive || !rep.D.exhaustive || !rep.eta.exhaustive) return kBudget;
  return kOk;
}

int cmd_verify(const Options& opt, const std::string& spec) {
  auto g = build_group(spec);
  auto rep = verify_group(g, opt.budget());
  if (opt.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    Table t({"bound", "target", "direction", "value", "status", "note"});
    for (const auto& ev : rep.bounds) {
      if (!ev.applicable) continue;
      t.add({std::string(to_string(ev.id)), std::string(to_string(ev.target)), std::string(to_string(ev.direction)),
             to_string(ev.value), std::string(to_string(ev.status)), ev.conditional ? "conditional" : ""});
    }
    Table s({"group", "order", "d", "D", "eta", "commutator_equality", "violations", "seconds"});
    report_rows(s, rep);
    const bool csv = opt.format == "csv";
    s.print(std::cout, csv);
    std::cout << "\n";
    t.print(std::cout, csv);
    for (const auto& v : rep.violations) std::cerr << "violation: " << v << "\n";
  }
  return report_exit(rep);
}

int cmd_witness(const Options& opt, const std::string& kind_text, const std::vector<long>& params,
                const std::string& spec) {
  const WitnessKind kind = parse_witness_kind(kind_text);
  Witness w;
  if (!spec.empty()) {
    auto g = build_group(spec);
    auto found = witness_in_group(kind, g);
    if (!found) throw Error(ErrorCode::not_applicable, g->label() + " is not in the family of " + kind_text);
    w = *found;
  } else {
    w = make_witness(kind, params);
  }
  auto c = check_witness(w, opt.dp_budget);
  json j = to_json(c);
  j["group"] = w.group->label();
  Table t({"kind", "group", "length", "expected", "predicate", "passed", "sequence"});
  t.add({kind_text, w.group->label(), std::to_string(c.sequence.length()), std::to_string(c.expected_length),
         c.expects_atom ? "atom" : "product_one_free", c.passed() ? "yes" : "no", c.sequence.to_string()});
  emit(opt, j, t);
  return c.passed() ? kOk : kViolation;
}

struct FactorizeArgs {
  std::string group;
  std::string sequence;
  std::string subgroup;
  int omega = 1;
  int omega_h = 0;
  int omega0 = 0;
  int random_length = 0;
  bool trace = false;
};

int cmd_factorize(const Options& opt, const FactorizeArgs& a) {
  auto g = build_group(a.group);
  FactorizerConfig cfg;
  cfg.H = subgroup_generated(g, parse_terms(g, a.subgroup));
  cfg.omega = a.omega;
  cfg.omega_H = a.omega_h;
  cfg.omega_0 = a.omega0;

  OrderedSequence s;
  if (a.random_length > 0) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<Element> pick(1, static_cast<Element>(g->order() - 1));
    std::vector<Element> terms;
    for (int i = 0; i < a.random_length; ++i) terms.push_back(pick(rng));
    s = OrderedSequence(g, terms);
  } else {
    s = parse_ordered_sequence(g, a.sequence);
  }

  auto f = factorize(s, cfg, a.trace);
  auto problems = factorization_violations(f, s, cfg);
  json j = to_json(f);
  j["group"] = g->label();
  j["input"] = names_json(s);
  j["valid"] = problems.empty();
  j["problems"] = problems;
  Table t({"part", "terms"});
  for (std::size_t i = 0; i < f.blocks.size(); ++i) t.add({"T" + std::to_string(i + 1), f.blocks[i].to_string()});
  t.add({"R", f.remainder.to_string()});
  t.add({"case", std::string(to_string(f.which))});
  t.add({"valid", problems.empty() ? "yes" : "no"});
  emit(opt, j, t);
  for (const auto& p : problems) std::cerr << "violation: " << p << "\n";
  return problems.empty() ? kOk : kViolation;
}

// One group spec per line; '#' starts a comment; T: paths are relative to
// the catalog file.
std::vector<std::string> read_catalog(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_parameters, "cannot read catalog " + path.string());
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    if (line.rfind("T:", 0) == 0) {
      fs::path p = line.substr(2);
      if (p.is_relative()) p = path.parent_path() / p;
      line = "T:" + p.string();
    }
    specs.push_back(line);
  }
  return specs;
}

int cmd_catalog(const Options& opt, const std::string& path) {
  const auto specs = read_catalog(path);
  std::vector<std::optional<BoundReport>> reports(specs.size());
  std::vector<std::string> errors(specs.size());

  unsigned workers = opt.jobs > 0 ? static_cast<unsigned>(opt.jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(specs.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
      try {
        reports[i] = verify_group(build_group(specs[i]), opt.budget());
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int status = kOk;
  json out = json::array();
  Table t({"group", "order", "d", "D", "eta", "commutator_equality", "violations", "seconds"});
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << specs[i] << ": " << errors[i] << "\n";
      out.push_back({{"spec", specs[i]}, {"error", errors[i]}});
      status = std::max(status, static_cast<int>(kUsage));
      continue;
    }
    const auto& rep = *reports[i];
    out.push_back(to_json(rep));
    report_rows(t, rep);
    for (const auto& v : rep.violations) std::cerr << rep.group->label() << ": " << v << "\n";
    const int e = report_exit(rep);
    if (e == kViolation)
      status = kViolation;
    else if (e == kBudget && status == kOk)
      status = kBudget;
  }
  emit(opt, out, t);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product-one invariants of small finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);

  Options opt;
  app.add_option("--budget-nodes", opt.budget_nodes, "Search node limit")->check(CLI::PositiveNumber);
  app.add_option("--budget-seconds", opt.budget_seconds, "Search time limit")->check(CLI::PositiveNumber);
  app.add_option("--dp-budget", opt.dp_budget, "Sub-multiset DP size limit")->check(CLI::PositiveNumber);
  app.add_flag("--no-aut", opt.no_aut, "Disable automorphism pruning");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--cache-dir", opt.cache_dir, "Directory for cached invariant results");
  app.add_option("--seed", opt.seed, "Seed for randomized inputs");
  app.add_option("--jobs", opt.jobs, "Catalog worker threads")->check(CLI::PositiveNumber);

  std::string group, which, kind, path;
  std::vector<long> params;

  auto* info = app.add_subcommand("info", "Group structure");
  info->add_option("group", group, "Group spec")->required();

  auto* inv = app.add_subcommand("invariant", "Compute d, D or eta");
  inv->add_option("which", which, "d, D or eta")->required();
  inv->add_option("group", group, "Group spec")->required();

  auto* ver = app.add_subcommand("verify", "Invariants, bounds and witnesses for one group");
  ver->add_option("group", group, "Group spec")->required();

  auto* wit = app.add_subcommand("witness", "Emit and check an explicit witness sequence");
  wit->add_option("kind", kind, "fpq_atom, fpq_free, mpn_atom or near_dihedral_free")->required();
  wit->add_option("params", params, "Family parameters");
  wit->add_option("--group", group, "Build the witness inside this group instead");

  FactorizeArgs fa;
  auto* fac = app.add_subcommand("factorize", "Run the block factorizer on an ordered sequence");
  fac->add_option("group", fa.group, "Group spec")->required();
  fac->add_option("sequence", fa.sequence, "Ordered terms, e.g. \"t, a[2], ta\"");
  fac->add_option("--subgroup", fa.subgroup, "Generators of the abelian subgroup H")->required();
  fac->add_option("--omega", fa.omega, "Target block length");
  fac->add_option("--omega-h", fa.omega_h, "H-term threshold");
  fac->add_option("--omega0", fa.omega0, "Prefix length hypothesis (0 for none)");
  fac->add_option("--random-length", fa.random_length, "Use a random sequence of this length (see --seed)");
  fac->add_flag("--trace", fa.trace, "Record every rewrite");

  auto* cat = app.add_subcommand("catalog", "Verify every group listed in a catalog file");
  cat->add_option("path", path, "Catalog file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(opt, group);
    if (*inv) return cmd_invariant(opt, which, group);
    if (*ver) return cmd_verify(opt, group);
    if (*wit) return cmd_witness(opt, kind, params, group);
    if (*fac) {
      if (fa.sequence.empty() && fa.random_length <= 0) throw Error(ErrorCode::usage, "sequence or --random-length required");
      return cmd_factorize(opt, fa);
    }
    if (*cat) return cmd_catalog(opt, path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::budget_exceeded ? kBudget : kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
