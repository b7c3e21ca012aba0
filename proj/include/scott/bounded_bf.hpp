#ifndef SCOTT_BOUNDED_BF_HPP
#define SCOTT_BOUNDED_BF_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scott/coding.hpp"

namespace scott {

// Query for the bounded asymmetric relations ≤_n^a evaluated over the
// fragment [0, B] of the standard model. Quantifiers over sequences are
// restricted to entries in [0, B]; the universal block has length ≤ a and
// the existential block length ≤ existential_length_cap.
struct BoundedBfQuery {
  unsigned level = 0;                 // n
  Natural bound = 0;                  // a
  Natural u_code = 0;
  Natural v_code = 0;
  std::uint64_t universe_bound = 0;   // B
  std::uint64_t existential_length_cap = 0;
  bool level0_bound_by_a = false;     // variant: level-0 code range x ≤ a
};

// ū ≤_n^a v̄. Non-sequence codes make the relation false, never an error.
bool bbf_leq(const BoundedBfQuery& q);

struct BfPropertyReport {
  bool pass = true;
  std::uint64_t checks = 0;
  std::vector<std::string> counterexamples;
};

// Exhaustively checks, over all ū, v̄ with entries in [0, B] and length
// ≤ max_len: downward closure in the bound (a ≤ b) and nestedness in the
// level, for all n < max_n, a ≤ b ≤ max_a.
BfPropertyReport check_bf_properties(std::uint64_t B, unsigned max_n,
                                     std::uint64_t max_a, std::uint64_t max_len);

struct ProbeBounds {
  std::uint64_t elem_max = 0;  // entries of b̄, ā′, b̄′ range over [0, elem_max]
  std::uint64_t len_max = 0;   // lengths of b̄, b̄′ (ā′ matches |ā|)
  Natural x_max = 0;
  Natural y_max = 0;
};

enum class ProbeVerdict { HoldsWithinBounds, FailsWithinBounds };

// Evaluates, for the given ā and level n, the alternation
//   ∃b̄ ∀ā′ b̄′ ∃x ( āb̄ ≤_0^x ā′b̄′  →  ∀y ( ā ≤_n^y ā′ ) )
// with every quantifier restricted to the given ranges. The verdict is
// bound-relative by construction.
ProbeVerdict probe_standard_witness(const std::vector<Natural>& a_bar, unsigned n,
                                    const ProbeBounds& bounds);

} // namespace scott

#endif
