#include "scott/bounded_bf.hpp"

#include <map>
#include <sstream>

#include "scott/delta0.hpp"

namespace scott {

namespace {

// All sequences over [0, B] of length ≤ max_len, shortest first.
std::vector<std::vector<Natural>> sequences_up_to(std::uint64_t B, std::uint64_t max_len) {
  std::vector<std::vector<Natural>> out{{}};
  std::size_t layer_begin = 0;
  for (std::uint64_t len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (std::uint64_t v = 0; v <= B; ++v) {
        auto s = out[i];
        s.emplace_back(v);
        out.push_back(std::move(s));
      }
    layer_begin = layer_end;
  }
  return out;
}

std::vector<Natural> concat(const std::vector<Natural>& a, const std::vector<Natural>& b) {
  auto out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct MemoKey {
  unsigned level;
  std::vector<Natural> u, v;
  bool operator<(const MemoKey& o) const {
    if (level != o.level) return level < o.level;
    if (u != o.u) return u < o.u;
    return v < o.v;
  }
};

struct Evaluator {
  Natural a;
  std::uint64_t B;
  std::uint64_t cap;
  bool level0_bound_by_a;
  std::map<MemoKey, bool> memo;

  bool level0(const std::vector<Natural>& u, const std::vector<Natural>& v) {
    Natural x_max = level0_bound_by_a ? a : Natural(u.size());
    for (Natural x = 0; x <= x_max; ++x)
      if (tr_delta0(x, u) && !tr_delta0(x, v)) return false;
    return true;
  }

  bool leq(unsigned n, const std::vector<Natural>& u, const std::vector<Natural>& v) {
    MemoKey key{n, u, v};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool result;
    if (n == 0) {
      result = level0(u, v);
    } else {
      // ∀x̄ ∃ȳ (|x̄| ≤ a → v̄x̄ ≤_{n-1}^a ūȳ); note the role swap.
      std::uint64_t a_len = a < 0 ? 0 : (a > 64 ? 64 : a.convert_to<std::uint64_t>());
      auto xs = sequences_up_to(B, a_len);
      auto ys = sequences_up_to(B, cap);
      result = true;
      for (const auto& x : xs) {
        bool found = false;
        for (const auto& y : ys)
          if (leq(n - 1, concat(v, x), concat(u, y))) { found = true; break; }
        if (!found) { result = false; break; }
      }
    }
    memo.emplace(key, result);
    return result;
  }
};

std::string show_seq(const std::vector<Natural>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "]";
  return os.str();
}

} // namespace

bool bbf_leq(const BoundedBfQuery& q) {
  auto u = decode_seq(q.u_code);
  auto v = decode_seq(q.v_code);
  if (!u || !v) return false; // convention: non-sequence codes falsify
  Evaluator ev{q.bound, q.universe_bound, q.existential_length_cap, q.level0_bound_by_a, {}};
  return ev.leq(q.level, *u, *v);
}

BfPropertyReport check_bf_properties(std::uint64_t B, unsigned max_n,
                                     std::uint64_t max_a, std::uint64_t max_len) {
  BfPropertyReport report;
  auto tuples = sequences_up_to(B, max_len);
  auto query = [&](unsigned n, std::uint64_t a, const std::vector<Natural>& u,
                   const std::vector<Natural>& v) {
    BoundedBfQuery q;
    q.level = n;
    q.bound = a;
    q.u_code = encode_seq(u);
    q.v_code = encode_seq(v);
    q.universe_bound = B;
    q.existential_length_cap = a;
    return bbf_leq(q);
  };
  for (const auto& u : tuples)
    for (const auto& v : tuples) {
      // downward closure in the bound: a ≤ b ∧ ≤_n^b ⟹ ≤_n^a
      for (unsigned n = 0; n < max_n; ++n)
        for (std::uint64_t bb = 0; bb <= max_a; ++bb)
          for (std::uint64_t aa = 0; aa <= bb; ++aa) {
            ++report.checks;
            if (query(n, bb, u, v) && !query(n, aa, u, v)) {
              report.pass = false;
              std::ostringstream os;
              os << "downward closure fails: n=" << n << " a=" << aa << " b=" << bb
                 << " u=" << show_seq(u) << " v=" << show_seq(v);
              report.counterexamples.push_back(os.str());
            }
          }
      // nestedness: ≤_{n+1}^a ⟹ ≤_n^a
      for (unsigned n = 0; n < max_n; ++n)
        for (std::uint64_t aa = 0; aa <= max_a; ++aa) {
          ++report.checks;
          if (query(n + 1, aa, u, v) && !query(n, aa, u, v)) {
            report.pass = false;
            std::ostringstream os;
            os << "nestedness fails: n=" << n << " a=" << aa
               << " u=" << show_seq(u) << " v=" << show_seq(v);
            report.counterexamples.push_back(os.str());
          }
        }
    }
  return report;
}

ProbeVerdict probe_standard_witness(const std::vector<Natural>& a_bar, unsigned n,
                                    const ProbeBounds& bounds) {
  auto bs = sequences_up_to(bounds.elem_max, bounds.len_max);
  auto a_primes = [&] {
    std::vector<std::vector<Natural>> out{{}};
    for (std::size_t i = 0; i < a_bar.size(); ++i) {
      std::vector<std::vector<Natural>> next;
      for (const auto& p : out)
        for (std::uint64_t v = 0; v <= bounds.elem_max; ++v) {
          auto q = p;
          q.emplace_back(v);
          next.push_back(std::move(q));
        }
      out = std::move(next);
    }
    return out;
  }();

  auto leq = [&](unsigned lvl, const Natural& bound, const std::vector<Natural>& u,
                 const std::vector<Natural>& v) {
    BoundedBfQuery q;
    q.level = lvl;
    q.bound = bound;
    q.u_code = encode_seq(u);
    q.v_code = encode_seq(v);
    q.universe_bound = bounds.elem_max;
    q.existential_length_cap = bound < 0 ? 0 : (bound > 8 ? 8 : bound.convert_to<std::uint64_t>());
    return bbf_leq(q);
  };

  // ∃b̄ ∀ā′b̄′ ∃x ( āb̄ ≤_0^x ā′b̄′ → ∀y ( ā ≤_n^y ā′ ) )
  for (const auto& b : bs) {
    bool all_pairs_ok = true;
    for (const auto& ap : a_primes) {
      for (const auto& bp : bs) {
        bool exists_x = false;
        for (Natural x = 0; x <= bounds.x_max && !exists_x; ++x) {
          if (!leq(0, x, concat(a_bar, b), concat(ap, bp))) {
            exists_x = true; // antecedent fails, implication holds
            continue;
          }
          bool all_y = true;
          for (Natural y = 0; y <= bounds.y_max; ++y)
            if (!leq(n, y, a_bar, ap)) { all_y = false; break; }
          if (all_y) exists_x = true;
        }
        if (!exists_x) { all_pairs_ok = false; break; }
      }
      if (!all_pairs_ok) break;
    }
    if (all_pairs_ok) return ProbeVerdict::HoldsWithinBounds;
  }
  return ProbeVerdict::FailsWithinBounds;
}

} // namespace scott
