#ifndef SCOTT_DELTA0_HPP
#define SCOTT_DELTA0_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "scott/coding.hpp"

namespace scott {

// Terms over the vocabulary {0, 1, +, ·}. Immutable, shared subtrees.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Zero, One, Var, Add, Mul };
  Kind kind;
  unsigned var = 0;       // Var
  TermPtr left, right;    // Add, Mul

  static TermPtr zero();
  static TermPtr one();
  static TermPtr var_(unsigned idx);
  static TermPtr add(TermPtr l, TermPtr r);
  static TermPtr mul(TermPtr l, TermPtr r);
};

// Bounded-arithmetic formulas: atoms =, ≤; connectives ¬ ∧ ∨ →; bounded
// quantifiers (∀v ≤ t) and (∃v ≤ t). Every quantifier carries a bound term.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Eq, Le, Not, And, Or, Imp, Forall, Exists };
  Kind kind;
  TermPtr tleft, tright;  // Eq, Le
  FormulaPtr fleft, fright;
  unsigned var = 0;       // quantifiers
  TermPtr bound;          // quantifiers

  static FormulaPtr eq(TermPtr l, TermPtr r);
  static FormulaPtr le(TermPtr l, TermPtr r);
  static FormulaPtr not_(FormulaPtr f);
  static FormulaPtr and_(FormulaPtr l, FormulaPtr r);
  static FormulaPtr or_(FormulaPtr l, FormulaPtr r);
  static FormulaPtr imp(FormulaPtr l, FormulaPtr r);
  static FormulaPtr forall(unsigned v, TermPtr bound, FormulaPtr body);
  static FormulaPtr exists(unsigned v, TermPtr bound, FormulaPtr body);
};

bool term_equal(const TermPtr& a, const TermPtr& b);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<unsigned> free_vars(const FormulaPtr& f);

// S-expression syntax, e.g.
//   (exists (v2 (var v0)) (= (+ (var v2) (var v2)) (var v0)))
// Grammar documented in the README. Throws std::runtime_error with a
// position on syntax errors.
FormulaPtr parse_formula(const std::string& text);
std::string format_formula(const FormulaPtr& f);

using Env = std::map<unsigned, Natural>;

// Standard-model truth. Bounded quantifiers iterate up to the value of the
// bound term under the current environment. Missing variables throw.
bool eval_delta0(const FormulaPtr& f, const Env& env);
Natural eval_term(const TermPtr& t, const Env& env);

// Deterministic tree code: every node is pair(tag, payload). Injective.
Natural godel(const FormulaPtr& f);
// Inverse; nothing on naturals that do not code a formula.
std::optional<FormulaPtr> ungodel(const Natural& code);

// Truth-predicate view: Tr(code, args) is false unless `code` codes a
// formula whose free variables lie below |args|; otherwise evaluates it
// with v_i := args[i].
bool tr_delta0(const Natural& code, const std::vector<Natural>& args);

} // namespace scott

#endif
