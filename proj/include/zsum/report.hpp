#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "zsum/bounds.hpp"
#include "zsum/factorizer.hpp"
#include "zsum/invariants.hpp"

namespace zsum {

inline constexpr const char* kToolVersion = "0.1.0";

using json = nlohmann::ordered_json;

json names_json(const Sequence& s);
json names_json(const OrderedSequence& s);
json names_json(const ElementSet& s);

json group_info_json(const GroupPtr& g);
json to_json(const InvariantResult& r, const GroupPtr& g);
json to_json(const BoundEvaluation& ev);
json to_json(const BoundReport& rep);
json to_json(const WitnessCheck& w);
json to_json(const Factorization& f);

// Inverse of to_json(InvariantResult) against the given group.
InvariantResult invariant_from_json(const json& j, const GroupPtr& g);

// Exhaustive invariant results on disk, keyed by the Cayley-table
// fingerprint; entries store the full table and are ignored when the table
// or tool version differs.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<InvariantResult> load(const GroupPtr& g, Invariant inv) const;
  // Only exhaustive results are stored; returns whether one was written.
  bool store(const GroupPtr& g, const InvariantResult& r) const;
  std::filesystem::path path_for(const GroupPtr& g, Invariant inv) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace zsum
