#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zsum/sequence.hpp"

namespace zsum {

enum class Invariant { d, D, eta };

std::string_view to_string(Invariant inv);
Invariant parse_invariant(std::string_view text);

// Zero means unlimited for max_nodes, time_limit and max_length.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
  std::size_t dp_budget = kDefaultDpBudget;
  double time_limit = 0.0;
  bool use_automorphisms = true;
  int max_length = 0;
};

struct InvariantResult {
  Invariant kind = Invariant::d;
  int value = 0;
  Sequence witness;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::optional<int> upper_bound;  // informational only, never used as a certificate
  std::string upper_source;
  std::string note;
};

InvariantResult small_davenport(const GroupPtr& g, const SearchBudget& budget = {});
InvariantResult large_davenport(const GroupPtr& g, const SearchBudget& budget = {});
InvariantResult eta(const GroupPtr& g, const SearchBudget& budget = {});
InvariantResult compute_invariant(Invariant inv, const GroupPtr& g, const SearchBudget& budget = {});

// All atoms of length `length`, up to automorphism when requested, by direct
// enumeration of multisets. Slow; meant as a cross-check.
std::vector<Sequence> atoms_of_length(const GroupPtr& g, int length, bool up_to_automorphism = true);

// Lexicographically smallest image of `s` under the given automorphisms.
Sequence canonical_form(const Sequence& s, const std::vector<std::vector<Element>>& automorphisms);

// Automorphisms, or just the identity map when the group is too large or
// `use` is false.
std::vector<std::vector<Element>> search_automorphisms(const GroupPtr& g, bool use);

}  // namespace zsum
