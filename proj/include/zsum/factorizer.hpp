#pragma once

#include <string>
#include <vector>

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

namespace zsum {

struct FactorizerConfig {
  Subgroup H;  // abelian
  int omega = 1;
  int omega_H = 0;
  int omega_0 = 0;  // 0, or a prefix length in [2, |S*|]
};

enum class FactorCase { i, ii, iii };
std::string_view to_string(FactorCase c);

struct FactorizerStep {
  std::string move;    // "start", "absorb" or "new_block"
  std::size_t prefix = 0;  // remainder terms commuted past the blocks
  std::vector<OrderedSequence> blocks;
  OrderedSequence remainder;
  Element product = 0;
};

// S'* = T*_1 ⋯ T*_r · R*
struct Factorization {
  std::vector<OrderedSequence> blocks;
  OrderedSequence remainder;
  FactorCase which = FactorCase::i;
  int rewrite_steps = 0;
  std::vector<FactorizerStep> trace;

  OrderedSequence joined() const;
  int block_length() const;
};

// Rewrites S* into T*_1 ⋯ T*_r · R*. Throws precondition_violated when G is
// abelian, H is not an abelian subgroup, or the prefix hypotheses fail.
Factorization factorize(const OrderedSequence& s, const FactorizerConfig& cfg, bool trace = false);

// Every conclusion re-derived from scratch; empty when the factorization is
// valid.
std::vector<std::string> factorization_violations(const Factorization& f, const OrderedSequence& original,
                                                  const FactorizerConfig& cfg);
bool check_factorization(const Factorization& f, const OrderedSequence& original, const FactorizerConfig& cfg);

// Whether some h has h⁻¹ a h = b.
bool are_conjugate(const GroupPtr& g, Element a, Element b);

}  // namespace zsum
