#ifndef SCOTT_FINITE_BF_HPP
#define SCOTT_FINITE_BF_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "scott/finite_structure.hpp"

namespace scott {

// Exact evaluation of the asymmetric relations ≤_n between pointed finite
// structures over the same vocabulary, by memoized expansion of the
// definition. One back-and-forth step extends a tuple by up to universe-size
// fresh elements; tuples with repeated entries are reduced to their
// repetition-free form first (the reduction is an equivalence, see README).
class BfSolver {
 public:
  BfSolver(const FiniteStructure& a, const FiniteStructure& b);

  // (A, x̄) ≤_n (B, ȳ)
  bool leq(const Tuple& x, const Tuple& y, unsigned n);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Key {
    bool dir;
    unsigned level;
    Tuple x, y;
    bool operator==(const Key& o) const {
      return dir == o.dir && level == o.level && x == o.x && y == o.y;
    }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
    std::size_t operator()(const Tuple& t) const;
  };
  using TypeKey = std::vector<std::uint64_t>;

  const FiniteStructure* side_[2];
  std::unordered_map<Tuple, TypeKey, KeyHash> type_cache_[2];
  std::unordered_map<Key, bool, KeyHash> memo_;

  const TypeKey& typekey(int side, const Tuple& t);
  bool leq_dir(bool dir, const Tuple& x, const Tuple& y, unsigned n);
  bool equal_length_case(bool dir, const Tuple& x, const Tuple& y, unsigned n);
  bool general_case(bool dir, const Tuple& x, const Tuple& y, unsigned n);
  bool exists_response(bool dir, const Tuple& base_x, const Tuple& yd, unsigned beta);
  bool atom_step_compatible(int side_x, const Tuple& xc, int side_y, const Tuple& yd,
                            std::size_t pos) const;
};

bool bf_leq_finite(const FiniteStructure& a, const Tuple& x,
                   const FiniteStructure& b, const Tuple& y, unsigned n);

struct TuplePartition {
  // classes[i] lists the member tuples, sorted; classes ordered by their
  // lexicographically least representative (length-major).
  std::vector<std::vector<Tuple>> classes;
};

// ≡_n classes of all non-empty tuples of length ≤ max_len (repeats included).
TuplePartition bf_partition(const FiniteStructure& a, unsigned n, std::size_t max_len);

// Literal evaluation of the freeness formula
//   ∀β<α ∀b̄ ∃ā′b̄′ ( āb̄ ≤_β ā′b̄′ ∧ ā ≰_α ā′ )
// with b̄ ranging over tuples of length ≤ max_len and |ā′| = |ā|, |b̄′| = |b̄|.
// α = 0 returns false by convention.
bool is_alpha_free_finite(const FiniteStructure& a, const Tuple& a_bar, unsigned alpha,
                          std::size_t max_len, BfSolver* solver = nullptr);

struct FiniteRank {
  unsigned rank = 0;
  bool capped = false;             // rank reported is only a lower bound
  std::optional<Tuple> witness;    // a (rank-1)-free tuple when rank ≥ 2
};

// Least α ≥ 1 such that no tuple of length ≤ max_len is α-free.
FiniteRank scott_rank_finite(const FiniteStructure& a, std::size_t max_len,
                             unsigned level_cap = 8);

} // namespace scott

#endif
