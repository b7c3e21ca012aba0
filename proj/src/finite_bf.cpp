#include "scott/finite_bf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace scott {

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Tuple concat(const Tuple& a, const Tuple& b) {
  Tuple out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Removes positions i where x[i] and y[i] both repeat the same earlier
// position. Returns false when the equality patterns disagree (the relation
// is then false at every level).
bool dedup_pair(const Tuple& x, const Tuple& y, Tuple& x_out, Tuple& y_out) {
  x_out.clear();
  y_out.clear();
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t fx = i, fy = i;
    for (std::size_t j = 0; j < i; ++j)
      if (x[j] == x[i]) { fx = j; break; }
    for (std::size_t j = 0; j < i; ++j)
      if (y[j] == y[i]) { fy = j; break; }
    if (fx != fy) return false;
    if (fx == i) {
      x_out.push_back(x[i]);
      y_out.push_back(y[i]);
    }
  }
  return true;
}

} // namespace

std::size_t BfSolver::KeyHash::operator()(const Key& k) const {
  std::uint64_t h = k.dir ? 0x1234 : 0x4321;
  h = hash_mix(h, k.level);
  for (auto e : k.x) h = hash_mix(h, e + 1);
  h = hash_mix(h, 0xffffffffULL);
  for (auto e : k.y) h = hash_mix(h, e + 1);
  return static_cast<std::size_t>(h);
}

std::size_t BfSolver::KeyHash::operator()(const Tuple& t) const {
  std::uint64_t h = 0x9e37;
  for (auto e : t) h = hash_mix(h, e + 1);
  return static_cast<std::size_t>(h);
}

BfSolver::BfSolver(const FiniteStructure& a, const FiniteStructure& b) {
  if (!same_vocabulary(a, b))
    throw std::invalid_argument("back-and-forth comparison requires a common vocabulary");
  side_[0] = &a;
  side_[1] = &b;
}

const BfSolver::TypeKey& BfSolver::typekey(int side, const Tuple& t) {
  // type_cache_ is declared with KeyHash but keyed by Tuple via this shim.
  auto& cache = type_cache_[side];
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;

  const FiniteStructure& s = *side_[side];
  TypeKey key;
  key.push_back(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t first = i;
    for (std::size_t j = 0; j < i; ++j)
      if (t[j] == t[i]) { first = j; break; }
    key.push_back(first);
  }
  for (const auto& rel : s.relations) {
    std::uint64_t word = 0;
    int bits = 0;
    std::vector<std::size_t> idx(rel.arity, 0);
    bool done = t.empty() && rel.arity > 0;
    while (!done) {
      Tuple args(rel.arity);
      for (std::size_t p = 0; p < rel.arity; ++p) args[p] = t[idx[p]];
      word = (word << 1) | (rel.tuples.count(args) ? 1u : 0u);
      if (++bits == 64) {
        key.push_back(word);
        word = 0;
        bits = 0;
      }
      std::size_t p = rel.arity;
      while (p > 0) {
        --p;
        if (++idx[p] < t.size()) break;
        idx[p] = 0;
        if (p == 0) done = true;
      }
      if (rel.arity == 0) done = true;
    }
    if (bits > 0) key.push_back(word | (1ULL << 63)); // mark partial word
    key.push_back(0xabcdULL);                         // relation separator
  }
  return cache.emplace(t, std::move(key)).first->second;
}

bool BfSolver::atom_step_compatible(int side_x, const Tuple& xc, int side_y, const Tuple& yd,
                                    std::size_t pos) const {
  const FiniteStructure& sx = *side_[side_x];
  const FiniteStructure& sy = *side_[side_y];
  for (std::size_t r = 0; r < sx.relations.size(); ++r) {
    std::size_t arity = sx.relations[r].arity;
    std::vector<std::size_t> idx(arity, 0);
    bool done = arity == 0;
    while (!done) {
      bool involves = false;
      for (auto p : idx)
        if (p == pos) { involves = true; break; }
      if (involves) {
        Tuple ax(arity), ay(arity);
        for (std::size_t p = 0; p < arity; ++p) {
          ax[p] = xc[idx[p]];
          ay[p] = yd[idx[p]];
        }
        if (sx.holds(r, ax) != sy.holds(r, ay)) return false;
      }
      std::size_t p = arity;
      while (p > 0) {
        --p;
        if (++idx[p] <= pos) break;
        idx[p] = 0;
        if (p == 0) done = true;
      }
    }
  }
  return true;
}

bool BfSolver::leq(const Tuple& x, const Tuple& y, unsigned n) {
  return leq_dir(true, x, y, n);
}

bool BfSolver::leq_dir(bool dir, const Tuple& x, const Tuple& y, unsigned n) {
  int sx = dir ? 0 : 1;
  int sy = dir ? 1 : 0;
  if (n == 0) {
    if (y.size() < x.size()) return false;
    Tuple y_restr(y.begin(), y.begin() + x.size());
    return typekey(sx, x) == typekey(sy, y_restr);
  }
  Key key{dir, n, x, y};
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  memo_.emplace(key, true); // levels strictly decrease; no cycles, placeholder unused
  bool result = x.size() == y.size() ? equal_length_case(dir, x, y, n)
                                     : general_case(dir, x, y, n);
  memo_[key] = result;
  return result;
}

// ∃c̄ fresh over base_x with |base_x c̄| = |yd|, atom-compatible with yd,
// such that (yd) ≤_beta (base_x c̄) with the roles swapped.
bool BfSolver::exists_response(bool dir, const Tuple& base_x, const Tuple& yd, unsigned beta) {
  int sx = dir ? 0 : 1;
  int sy = dir ? 1 : 0;
  std::uint32_t nx = side_[sx]->universe;
  Tuple xc = base_x;

  // DFS over completions of xc to |yd|. The equality pattern of yd is
  // mirrored exactly: a repeated spoiler entry forces the matching earlier
  // response, a fresh one excludes all earlier responses.
  std::function<bool()> go = [&]() -> bool {
    if (xc.size() == yd.size()) return leq_dir(!dir, yd, xc, beta);
    std::size_t pos = xc.size();
    std::size_t rep = pos;
    for (std::size_t j = 0; j < pos; ++j)
      if (yd[j] == yd[pos]) { rep = j; break; }
    auto try_elem = [&](std::uint32_t e) {
      xc.push_back(e);
      bool ok = atom_step_compatible(sx, xc, sy, yd, pos) && go();
      xc.pop_back();
      return ok;
    };
    if (rep != pos) return try_elem(xc[rep]);
    for (std::uint32_t e = 0; e < nx; ++e) {
      if (std::find(xc.begin(), xc.end(), e) != xc.end()) continue;
      if (try_elem(e)) return true;
    }
    return false;
  };
  return go();
}

// |x| == |y|, n ≥ 1: reduce to the repetition-free form, require equal atomic
// types, then play the extension game with fresh elements only.
bool BfSolver::equal_length_case(bool dir, const Tuple& x, const Tuple& y, unsigned n) {
  int sx = dir ? 0 : 1;
  int sy = dir ? 1 : 0;
  Tuple xd, yd;
  if (!dedup_pair(x, y, xd, yd)) return false;
  if (typekey(sx, xd) != typekey(sy, yd)) return false;
  if (!(xd == x && yd == y)) return leq_dir(dir, xd, yd, n); // memoize the canonical form

  std::uint32_t ny = side_[sy]->universe;
  for (unsigned beta = n; beta-- > 0;) {
    // ∀ d̄ (fresh, injective) extending y: ∃ c̄: (y d̄) ≤_beta (x c̄).
    Tuple ext = y;
    std::function<bool()> forall_d = [&]() -> bool {
      if (!exists_response(dir, x, ext, beta)) return false;
      if (ext.size() >= ny) return true;
      for (std::uint32_t e = 0; e < ny; ++e) {
        if (std::find(ext.begin(), ext.end(), e) != ext.end()) continue;
        ext.push_back(e);
        bool ok = forall_d();
        ext.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!forall_d()) return false;
  }
  return true;
}

// Unequal lengths: literal bounded expansion. When the left tuple is shorter
// the responses fill to the exact length and the recursion re-enters the
// equal-length path; the longer-left case only arises on small inputs.
bool BfSolver::general_case(bool dir, const Tuple& x, const Tuple& y, unsigned n) {
  int sy = dir ? 1 : 0;
  std::uint32_t ny = side_[sy]->universe;

  if (x.size() < y.size()) {
    for (unsigned beta = n; beta-- > 0;) {
      Tuple ext = y;
      std::function<bool()> forall_d = [&]() -> bool {
        if (!exists_response(dir, x, ext, beta)) return false;
        if (ext.size() >= y.size() + ny) return true;
        for (std::uint32_t e = 0; e < ny; ++e) {
          if (std::find(ext.begin(), ext.end(), e) != ext.end()) continue;
          ext.push_back(e);
          bool ok = forall_d();
          ext.pop_back();
          if (!ok) return false;
        }
        return true;
      };
      if (!forall_d()) return false;
    }
    return true;
  }

  // x longer than y: extensions with repeats, capped at universe + 1.
  std::size_t cap = ny + 1;
  std::vector<Tuple> exts{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= cap; ++len) {
    std::size_t end = exts.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::uint32_t e = 0; e < ny; ++e) {
        auto t = exts[i];
        t.push_back(e);
        exts.push_back(std::move(t));
      }
    begin = end;
  }
  int sxn = dir ? 0 : 1;
  std::uint32_t nx = side_[sxn]->universe;
  for (unsigned beta = n; beta-- > 0;) {
    for (const auto& d : exts) {
      Tuple yd = concat(y, d);
      std::size_t c_max = yd.size() > x.size() ? yd.size() - x.size() : 0;
      bool found = false;
      std::vector<Tuple> cs{{}};
      std::size_t b2 = 0;
      for (std::size_t len = 1; len <= c_max; ++len) {
        std::size_t e2 = cs.size();
        for (std::size_t i = b2; i < e2; ++i)
          for (std::uint32_t e = 0; e < nx; ++e) {
            auto t = cs[i];
            t.push_back(e);
            cs.push_back(std::move(t));
          }
        b2 = e2;
      }
      for (const auto& c : cs)
        if (leq_dir(!dir, yd, concat(x, c), beta)) { found = true; break; }
      if (!found) return false;
    }
  }
  return true;
}

bool bf_leq_finite(const FiniteStructure& a, const Tuple& x,
                   const FiniteStructure& b, const Tuple& y, unsigned n) {
  for (auto e : x)
    if (e >= a.universe) throw std::invalid_argument("tuple element outside universe");
  for (auto e : y)
    if (e >= b.universe) throw std::invalid_argument("tuple element outside universe");
  BfSolver solver(a, b);
  return solver.leq(x, y, n);
}

namespace {

void all_tuples_rec(std::uint32_t n, std::size_t len, Tuple& cur, std::vector<Tuple>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t e = 0; e < n; ++e) {
    cur.push_back(e);
    all_tuples_rec(n, len, cur, out);
    cur.pop_back();
  }
}

std::vector<Tuple> all_tuples(std::uint32_t n, std::size_t min_len, std::size_t max_len) {
  std::vector<Tuple> out;
  Tuple cur;
  for (std::size_t len = min_len; len <= max_len; ++len) all_tuples_rec(n, len, cur, out);
  return out;
}

std::vector<Tuple> injective_tuples(std::uint32_t n, std::size_t min_len, std::size_t max_len) {
  std::vector<Tuple> out;
  Tuple cur;
  std::function<void(std::size_t)> rec = [&](std::size_t len) {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < n; ++e) {
      if (std::find(cur.begin(), cur.end(), e) != cur.end()) continue;
      cur.push_back(e);
      rec(len);
      cur.pop_back();
    }
  };
  for (std::size_t len = min_len; len <= std::min<std::size_t>(max_len, n); ++len) rec(len);
  return out;
}

} // namespace

TuplePartition bf_partition(const FiniteStructure& a, unsigned n, std::size_t max_len) {
  BfSolver solver(a, a);
  TuplePartition part;
  std::vector<Tuple> reps;
  auto tuples = all_tuples(a.universe, 1, max_len); // generated in (length, lex) order
  for (const auto& t : tuples) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (reps[c].size() != t.size()) continue;
      if (solver.leq(t, reps[c], n) && solver.leq(reps[c], t, n)) {
        part.classes[c].push_back(t);
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(t);
      part.classes.push_back({t});
    }
  }
  return part;
}

bool is_alpha_free_finite(const FiniteStructure& a, const Tuple& a_bar, unsigned alpha,
                          std::size_t max_len, BfSolver* solver) {
  if (alpha == 0) return false; // 0-freeness is false by convention
  for (auto e : a_bar)
    if (e >= a.universe) throw std::invalid_argument("tuple element outside universe");
  BfSolver local(a, a);
  BfSolver& s = solver ? *solver : local;

  // Repetition-free form; freeness is invariant under the reduction.
  Tuple ab, ab2;
  if (!dedup_pair(a_bar, a_bar, ab, ab2)) return false;

  std::size_t room = a.universe > ab.size() ? a.universe - ab.size() : 0;
  std::size_t b_max = std::min(max_len, room);

  auto candidates_a = injective_tuples(a.universe, ab.size(), ab.size());
  for (unsigned beta = 0; beta < alpha; ++beta) {
    // ∀ b̄ (fresh over ā, repetition-free): ∃ ā′ b̄′ with āb̄ ≤_β ā′b̄′ ∧ ā ≰_α ā′
    std::vector<Tuple> b_choices{{}};
    {
      Tuple cur;
      std::function<void(std::size_t)> rec = [&](std::size_t len) {
        if (cur.size() == len) {
          b_choices.push_back(cur);
          return;
        }
        for (std::uint32_t e = 0; e < a.universe; ++e) {
          if (std::find(ab.begin(), ab.end(), e) != ab.end()) continue;
          if (std::find(cur.begin(), cur.end(), e) != cur.end()) continue;
          cur.push_back(e);
          rec(len);
          cur.pop_back();
        }
      };
      for (std::size_t len = 1; len <= b_max; ++len) rec(len);
    }
    // longest b̄ first: refutations pin the tuple down fastest
    std::stable_sort(b_choices.begin(), b_choices.end(),
                     [](const Tuple& l, const Tuple& r) { return l.size() > r.size(); });

    for (const auto& b : b_choices) {
      Tuple abb = concat(ab, b);
      bool witness = false;
      for (const auto& ap : candidates_a) {
        if (s.leq(ab, ap, alpha)) continue; // need ā ≰_α ā′
        auto bps = injective_tuples(a.universe, b.size(), b.size());
        for (const auto& bp : bps) {
          bool clash = false;
          for (auto e : bp)
            if (std::find(ap.begin(), ap.end(), e) != ap.end()) { clash = true; break; }
          if (clash) continue;
          if (s.leq(abb, concat(ap, bp), beta)) { witness = true; break; }
        }
        if (witness) break;
      }
      if (!witness) return false;
    }
  }
  return true;
}

FiniteRank scott_rank_finite(const FiniteStructure& a, std::size_t max_len,
                             unsigned level_cap) {
  BfSolver solver(a, a);
  auto tuples = injective_tuples(a.universe, 0, std::min<std::size_t>(max_len, a.universe));
  FiniteRank out;
  std::optional<Tuple> last_free;
  for (unsigned alpha = 1; alpha <= level_cap; ++alpha) {
    std::optional<Tuple> found;
    for (const auto& t : tuples)
      if (is_alpha_free_finite(a, t, alpha, max_len, &solver)) { found = t; break; }
    if (!found) {
      out.rank = alpha;
      out.witness = last_free;
      return out;
    }
    last_free = found;
  }
  out.rank = level_cap;
  out.capped = true;
  out.witness = last_free;
  return out;
}

} // namespace scott
