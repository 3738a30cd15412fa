#include "zsum/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "zsum/error.hpp"

namespace zsum {

json names_json(const Sequence& s) { return s.term_names(); }
json names_json(const OrderedSequence& s) { return s.term_names(); }

json names_json(const ElementSet& s) {
  json out = json::array();
  for (Element x : s.elements()) out.push_back(s.group()->name(x));
  return out;
}

json group_info_json(const GroupPtr& g) {
  json j;
  j["group"] = g->label();
  j["order"] = g->order();
  j["abelian"] = g->is_abelian();
  j["cyclic"] = is_cyclic(*g);
  j["exponent"] = g->exponent();
  j["max_order"] = g->max_element_order();
  j["center_order"] = center(g).size();
  j["commutator_order"] = commutator_subgroup(g).size();
  std::vector<std::size_t> classes;
  for (const auto& c : conjugacy_classes(g)) classes.push_back(c.size());
  j["class_sizes"] = classes;
  if (g->order() <= 64) j["automorphisms"] = automorphism_group(g).size();
  json families = json::array();
  if (auto m = match_fpq(g)) families.push_back("F_" + std::to_string(m->p) + "," + std::to_string(m->q));
  if (auto m = match_mpn(g)) families.push_back("M_" + std::to_string(m->p) + "^" + std::to_string(m->n));
  if (auto m = match_near_dihedral(g)) families.push_back("near_dihedral_" + std::to_string(m->q));
  if (is_dihedral_odd(g)) families.push_back("dihedral_odd");
  if (is_nilpotent(*g)) families.push_back("nilpotent");
  j["families"] = families;
  json elems = json::array();
  for (Element x = 0; x < g->order(); ++x) elems.push_back({{"name", g->name(x)}, {"order", g->element_order(x)}});
  j["elements"] = elems;
  std::ostringstream fp;
  fp << std::hex << std::setw(16) << std::setfill('0') << g->fingerprint();
  j["fingerprint"] = fp.str();
  return j;
}

json to_json(const InvariantResult& r, const GroupPtr& g) {
  json j;
  j["group"] = g->label();
  j["invariant"] = to_string(r.kind);
  j["value"] = r.value;
  j["exhaustive"] = r.exhaustive;
  j["witness"] = names_json(r.witness);
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  if (r.upper_bound) {
    j["upper_bound"] = *r.upper_bound;
    j["upper_source"] = r.upper_source;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

InvariantResult invariant_from_json(const json& j, const GroupPtr& g) {
  InvariantResult r;
  r.kind = parse_invariant(j.at("invariant").get<std::string>());
  r.value = j.at("value").get<int>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  std::vector<Element> terms;
  for (const auto& name : j.at("witness")) {
    auto x = g->find(name.get<std::string>());
    if (!x) throw Error(ErrorCode::malformed_table, "cached witness names an unknown element");
    terms.push_back(*x);
  }
  r.witness = Sequence::from_terms(g, terms);
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.seconds = j.at("seconds").get<double>();
  if (j.contains("upper_bound")) {
    r.upper_bound = j["upper_bound"].get<int>();
    r.upper_source = j.at("upper_source").get<std::string>();
  }
  if (j.contains("note")) r.note = j["note"].get<std::string>();
  return r;
}

json to_json(const BoundEvaluation& ev) {
  json j;
  j["bound"] = to_string(ev.id);
  j["applicable"] = ev.applicable;
  j["reason"] = ev.reason;
  if (ev.applicable) {
    j["target"] = to_string(ev.target);
    j["direction"] = to_string(ev.direction);
    j["value"] = to_string(ev.value);
    j["value_hi"] = to_string(ev.value_hi);
    j["conditional"] = ev.conditional;
    j["status"] = to_string(ev.status);
  }
  return j;
}

json to_json(const WitnessCheck& w) {
  return {{"kind", to_string(w.kind)},
          {"length", w.sequence.length()},
          {"expected_length", w.expected_length},
          {"predicate", w.expects_atom ? "atom" : "product_one_free"},
          {"passed", w.passed()},
          {"sequence", names_json(w.sequence)}};
}

json to_json(const BoundReport& rep) {
  json j;
  j["group"] = rep.group->label();
  j["order"] = rep.group->order();
  j["abelian"] = rep.group->is_abelian();
  j["invariants"] = {to_json(rep.d, rep.group), to_json(rep.D, rep.group), to_json(rep.eta, rep.group)};
  json bounds = json::array();
  for (const auto& ev : rep.bounds) bounds.push_back(to_json(ev));
  j["bounds"] = bounds;
  json ws = json::array();
  for (const auto& w : rep.witnesses) ws.push_back(to_json(w));
  j["witnesses"] = ws;
  j["commutator_equality"] = to_string(rep.commutator_equality);
  j["violations"] = rep.violations;
  j["seconds"] = rep.seconds;
  return j;
}

json to_json(const Factorization& f) {
  json j;
  json blocks = json::array();
  for (const auto& t : f.blocks) blocks.push_back(names_json(t));
  j["blocks"] = blocks;
  j["remainder"] = names_json(f.remainder);
  j["case"] = to_string(f.which);
  j["rewrite_steps"] = f.rewrite_steps;
  if (!f.trace.empty()) {
    json steps = json::array();
    for (const auto& s : f.trace) {
      json b = json::array();
      for (const auto& t : s.blocks) b.push_back(names_json(t));
      steps.push_back({{"move", s.move},
                       {"prefix", s.prefix},
                       {"blocks", b},
                       {"remainder", names_json(s.remainder)},
                       {"product", f.remainder.group()->name(s.product)}});
    }
    j["trace"] = steps;
  }
  return j;
}

// ---------------------------------------------------------------------------

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::path_for(const GroupPtr& g, Invariant inv) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << g->fingerprint() << "-" << to_string(inv) << ".json";
  return dir_ / name.str();
}

std::optional<InvariantResult> ResultCache::load(const GroupPtr& g, Invariant inv) const {
  std::ifstream in(path_for(g, inv));
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("version", "") != kToolVersion) return std::nullopt;
  if (j.value("order", std::size_t{0}) != g->order()) return std::nullopt;
  const auto table = g->table();
  if (!j.contains("table") || j["table"] != json(std::vector<Element>(table.begin(), table.end())))
    return std::nullopt;
  try {
    return invariant_from_json(j.at("result"), g);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool ResultCache::store(const GroupPtr& g, const InvariantResult& r) const {
  if (!r.exhaustive) return false;
  std::filesystem::create_directories(dir_);
  const auto table = g->table();
  json j;
  j["version"] = kToolVersion;
  j["order"] = g->order();
  j["table"] = std::vector<Element>(table.begin(), table.end());
  j["result"] = to_json(r, g);
  const auto path = path_for(g, r.kind);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << "\n";
    if (!out) return false;
  }
  std::filesystem::rename(tmp, path);
  return true;
}

}  // namespace zsum
