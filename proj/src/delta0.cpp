#include "scott/delta0.hpp"

#include <sstream>
#include <stdexcept>

namespace scott {

TermPtr Term::zero() { return std::make_shared<Term>(Term{Kind::Zero, 0, nullptr, nullptr}); }
TermPtr Term::one() { return std::make_shared<Term>(Term{Kind::One, 0, nullptr, nullptr}); }
TermPtr Term::var_(unsigned idx) { return std::make_shared<Term>(Term{Kind::Var, idx, nullptr, nullptr}); }
TermPtr Term::add(TermPtr l, TermPtr r) { return std::make_shared<Term>(Term{Kind::Add, 0, std::move(l), std::move(r)}); }
TermPtr Term::mul(TermPtr l, TermPtr r) { return std::make_shared<Term>(Term{Kind::Mul, 0, std::move(l), std::move(r)}); }

FormulaPtr Formula::eq(TermPtr l, TermPtr r) {
  return std::make_shared<Formula>(Formula{Kind::Eq, std::move(l), std::move(r), nullptr, nullptr, 0, nullptr});
}
FormulaPtr Formula::le(TermPtr l, TermPtr r) {
  return std::make_shared<Formula>(Formula{Kind::Le, std::move(l), std::move(r), nullptr, nullptr, 0, nullptr});
}
FormulaPtr Formula::not_(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Kind::Not, nullptr, nullptr, std::move(f), nullptr, 0, nullptr});
}
FormulaPtr Formula::and_(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Kind::And, nullptr, nullptr, std::move(l), std::move(r), 0, nullptr});
}
FormulaPtr Formula::or_(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Kind::Or, nullptr, nullptr, std::move(l), std::move(r), 0, nullptr});
}
FormulaPtr Formula::imp(FormulaPtr l, FormulaPtr r) {
  return std::make_shared<Formula>(Formula{Kind::Imp, nullptr, nullptr, std::move(l), std::move(r), 0, nullptr});
}
FormulaPtr Formula::forall(unsigned v, TermPtr bound, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Kind::Forall, nullptr, nullptr, std::move(body), nullptr, v, std::move(bound)});
}
FormulaPtr Formula::exists(unsigned v, TermPtr bound, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{Kind::Exists, nullptr, nullptr, std::move(body), nullptr, v, std::move(bound)});
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Zero:
    case Term::Kind::One: return true;
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      return term_equal(a->left, b->left) && term_equal(a->right, b->right);
  }
  return false;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Le:
      return term_equal(a->tleft, b->tleft) && term_equal(a->tright, b->tright);
    case Formula::Kind::Not:
      return formula_equal(a->fleft, b->fleft);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      return formula_equal(a->fleft, b->fleft) && formula_equal(a->fright, b->fright);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->var == b->var && term_equal(a->bound, b->bound) &&
             formula_equal(a->fleft, b->fleft);
  }
  return false;
}

namespace {

void term_vars(const TermPtr& t, std::set<unsigned>& out) {
  if (!t) return;
  if (t->kind == Term::Kind::Var) out.insert(t->var);
  term_vars(t->left, out);
  term_vars(t->right, out);
}

void collect_free(const FormulaPtr& f, std::set<unsigned> bound, std::set<unsigned>& out) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Le: {
      std::set<unsigned> vs;
      term_vars(f->tleft, vs);
      term_vars(f->tright, vs);
      for (unsigned v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Not:
      collect_free(f->fleft, bound, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      collect_free(f->fleft, bound, out);
      collect_free(f->fright, bound, out);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::set<unsigned> vs; // the bound term is evaluated outside the binder
      term_vars(f->bound, vs);
      for (unsigned v : vs)
        if (!bound.count(v)) out.insert(v);
      bound.insert(f->var);
      collect_free(f->fleft, bound, out);
      return;
    }
  }
}

} // namespace

std::set<unsigned> free_vars(const FormulaPtr& f) {
  std::set<unsigned> out;
  collect_free(f, {}, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip() { while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "formula syntax error at position " << pos << ": " << msg;
    throw std::runtime_error(os.str());
  }

  char peek() {
    skip();
    if (pos >= s.size()) fail("unexpected end of input");
    return s[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string symbol() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && !isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    if (start == pos) fail("expected a symbol");
    return s.substr(start, pos - start);
  }

  bool at_end() {
    skip();
    return pos >= s.size();
  }
};

unsigned parse_var_name(Lexer& lx, const std::string& sym) {
  if (sym.size() < 2 || sym[0] != 'v') lx.fail("expected a variable like v0");
  for (std::size_t i = 1; i < sym.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(sym[i]))) lx.fail("bad variable index");
  return static_cast<unsigned>(std::stoul(sym.substr(1)));
}

TermPtr parse_term_sexp(Lexer& lx) {
  char c = lx.peek();
  if (c == '0') { ++lx.pos; return Term::zero(); }
  if (c == '1') { ++lx.pos; return Term::one(); }
  if (c != '(') lx.fail("expected a term");
  lx.expect('(');
  std::string head = lx.symbol();
  TermPtr result;
  if (head == "var") {
    result = Term::var_(parse_var_name(lx, lx.symbol()));
  } else if (head == "+" || head == "*") {
    TermPtr l = parse_term_sexp(lx);
    TermPtr r = parse_term_sexp(lx);
    result = head == "+" ? Term::add(l, r) : Term::mul(l, r);
  } else {
    lx.fail("unknown term head '" + head + "'");
  }
  lx.expect(')');
  return result;
}

FormulaPtr parse_formula_sexp(Lexer& lx) {
  lx.expect('(');
  std::string head = lx.symbol();
  FormulaPtr result;
  if (head == "=" || head == "le") {
    TermPtr l = parse_term_sexp(lx);
    TermPtr r = parse_term_sexp(lx);
    result = head == "=" ? Formula::eq(l, r) : Formula::le(l, r);
  } else if (head == "not") {
    result = Formula::not_(parse_formula_sexp(lx));
  } else if (head == "and" || head == "or" || head == "imp") {
    FormulaPtr l = parse_formula_sexp(lx);
    FormulaPtr r = parse_formula_sexp(lx);
    result = head == "and"  ? Formula::and_(l, r)
             : head == "or" ? Formula::or_(l, r)
                            : Formula::imp(l, r);
  } else if (head == "forall" || head == "exists") {
    lx.expect('(');
    unsigned v = parse_var_name(lx, lx.symbol());
    TermPtr bound = parse_term_sexp(lx);
    lx.expect(')');
    FormulaPtr body = parse_formula_sexp(lx);
    result = head == "forall" ? Formula::forall(v, bound, body)
                              : Formula::exists(v, bound, body);
  } else {
    lx.fail("unknown formula head '" + head + "'");
  }
  lx.expect(')');
  return result;
}

void format_term(const TermPtr& t, std::ostream& os) {
  switch (t->kind) {
    case Term::Kind::Zero: os << "0"; return;
    case Term::Kind::One: os << "1"; return;
    case Term::Kind::Var: os << "(var v" << t->var << ")"; return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      os << "(" << (t->kind == Term::Kind::Add ? "+" : "*") << " ";
      format_term(t->left, os);
      os << " ";
      format_term(t->right, os);
      os << ")";
      return;
  }
}

void format_rec(const FormulaPtr& f, std::ostream& os) {
  switch (f->kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Le:
      os << "(" << (f->kind == Formula::Kind::Eq ? "=" : "le") << " ";
      format_term(f->tleft, os);
      os << " ";
      format_term(f->tright, os);
      os << ")";
      return;
    case Formula::Kind::Not:
      os << "(not ";
      format_rec(f->fleft, os);
      os << ")";
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
      os << "(" << (f->kind == Formula::Kind::And ? "and" : f->kind == Formula::Kind::Or ? "or" : "imp") << " ";
      format_rec(f->fleft, os);
      os << " ";
      format_rec(f->fright, os);
      os << ")";
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      os << "(" << (f->kind == Formula::Kind::Forall ? "forall" : "exists") << " (v" << f->var << " ";
      format_term(f->bound, os);
      os << ") ";
      format_rec(f->fleft, os);
      os << ")";
      return;
  }
}

} // namespace

FormulaPtr parse_formula(const std::string& text) {
  Lexer lx{text};
  FormulaPtr f = parse_formula_sexp(lx);
  if (!lx.at_end()) lx.fail("trailing input");
  return f;
}

std::string format_formula(const FormulaPtr& f) {
  std::ostringstream os;
  format_rec(f, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Evaluation

Natural eval_term(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Var: {
      auto it = env.find(t->var);
      if (it == env.end())
        throw std::out_of_range("eval: variable v" + std::to_string(t->var) + " unassigned");
      return it->second;
    }
    case Term::Kind::Add: return eval_term(t->left, env) + eval_term(t->right, env);
    case Term::Kind::Mul: return eval_term(t->left, env) * eval_term(t->right, env);
  }
  throw std::logic_error("eval_term: bad kind");
}

bool eval_delta0(const FormulaPtr& f, const Env& env) {
  switch (f->kind) {
    case Formula::Kind::Eq: return eval_term(f->tleft, env) == eval_term(f->tright, env);
    case Formula::Kind::Le: return eval_term(f->tleft, env) <= eval_term(f->tright, env);
    case Formula::Kind::Not: return !eval_delta0(f->fleft, env);
    case Formula::Kind::And: return eval_delta0(f->fleft, env) && eval_delta0(f->fright, env);
    case Formula::Kind::Or: return eval_delta0(f->fleft, env) || eval_delta0(f->fright, env);
    case Formula::Kind::Imp: return !eval_delta0(f->fleft, env) || eval_delta0(f->fright, env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      Natural bound = eval_term(f->bound, env);
      Env inner = env;
      for (Natural v = 0; v <= bound; ++v) {
        inner[f->var] = v;
        bool b = eval_delta0(f->fleft, inner);
        if (f->kind == Formula::Kind::Exists && b) return true;
        if (f->kind == Formula::Kind::Forall && !b) return false;
      }
      return f->kind == Formula::Kind::Forall;
    }
  }
  throw std::logic_error("eval_delta0: bad kind");
}

// ---------------------------------------------------------------------------
// Gödel numbering: node = pair(tag, payload).
// Tags 0..4 are term nodes, 5..12 formula nodes. ungodel checks tags and
// payload shapes, so arbitrary naturals are rejected cleanly.

namespace {

enum Tag : unsigned {
  kZero = 0, kOne = 1, kVar = 2, kAdd = 3, kMul = 4,
  kEq = 5, kLe = 6, kNot = 7, kAnd = 8, kOr = 9, kImp = 10,
  kForall = 11, kExists = 12,
};

Natural godel_term(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: return pair_code(kZero, 0);
    case Term::Kind::One: return pair_code(kOne, 0);
    case Term::Kind::Var: return pair_code(kVar, t->var);
    case Term::Kind::Add: return pair_code(kAdd, pair_code(godel_term(t->left), godel_term(t->right)));
    case Term::Kind::Mul: return pair_code(kMul, pair_code(godel_term(t->left), godel_term(t->right)));
  }
  throw std::logic_error("godel_term: bad kind");
}

std::optional<TermPtr> ungodel_term(const Natural& code) {
  auto [tag, payload] = unpair_code(code);
  if (tag == kZero) return payload == 0 ? std::optional(Term::zero()) : std::nullopt;
  if (tag == kOne) return payload == 0 ? std::optional(Term::one()) : std::nullopt;
  if (tag == kVar) {
    if (payload > 1000000) return std::nullopt;
    return Term::var_(payload.convert_to<unsigned>());
  }
  if (tag == kAdd || tag == kMul) {
    auto [l, r] = unpair_code(payload);
    auto lt = ungodel_term(l);
    auto rt = ungodel_term(r);
    if (!lt || !rt) return std::nullopt;
    return tag == kAdd ? Term::add(*lt, *rt) : Term::mul(*lt, *rt);
  }
  return std::nullopt;
}

} // namespace

Natural godel(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq: return pair_code(kEq, pair_code(godel_term(f->tleft), godel_term(f->tright)));
    case Formula::Kind::Le: return pair_code(kLe, pair_code(godel_term(f->tleft), godel_term(f->tright)));
    case Formula::Kind::Not: return pair_code(kNot, godel(f->fleft));
    case Formula::Kind::And: return pair_code(kAnd, pair_code(godel(f->fleft), godel(f->fright)));
    case Formula::Kind::Or: return pair_code(kOr, pair_code(godel(f->fleft), godel(f->fright)));
    case Formula::Kind::Imp: return pair_code(kImp, pair_code(godel(f->fleft), godel(f->fright)));
    case Formula::Kind::Forall:
      return pair_code(kForall, pair_code(f->var, pair_code(godel_term(f->bound), godel(f->fleft))));
    case Formula::Kind::Exists:
      return pair_code(kExists, pair_code(f->var, pair_code(godel_term(f->bound), godel(f->fleft))));
  }
  throw std::logic_error("godel: bad kind");
}

std::optional<FormulaPtr> ungodel(const Natural& code) {
  if (code < 0) return std::nullopt;
  auto [tag, payload] = unpair_code(code);
  if (tag == kEq || tag == kLe) {
    auto [l, r] = unpair_code(payload);
    auto lt = ungodel_term(l);
    auto rt = ungodel_term(r);
    if (!lt || !rt) return std::nullopt;
    return tag == kEq ? Formula::eq(*lt, *rt) : Formula::le(*lt, *rt);
  }
  if (tag == kNot) {
    auto body = ungodel(payload);
    if (!body) return std::nullopt;
    return Formula::not_(*body);
  }
  if (tag == kAnd || tag == kOr || tag == kImp) {
    auto [l, r] = unpair_code(payload);
    auto lf = ungodel(l);
    auto rf = ungodel(r);
    if (!lf || !rf) return std::nullopt;
    if (tag == kAnd) return Formula::and_(*lf, *rf);
    if (tag == kOr) return Formula::or_(*lf, *rf);
    return Formula::imp(*lf, *rf);
  }
  if (tag == kForall || tag == kExists) {
    auto [v, rest] = unpair_code(payload);
    if (v > 1000000) return std::nullopt;
    auto [bc, body] = unpair_code(rest);
    auto bt = ungodel_term(bc);
    auto bf = ungodel(body);
    if (!bt || !bf) return std::nullopt;
    unsigned var = v.convert_to<unsigned>();
    return tag == kForall ? Formula::forall(var, *bt, *bf) : Formula::exists(var, *bt, *bf);
  }
  return std::nullopt;
}

bool tr_delta0(const Natural& code, const std::vector<Natural>& args) {
  auto f = ungodel(code);
  if (!f) return false;
  auto fv = free_vars(*f);
  for (unsigned v : fv)
    if (v >= args.size()) return false;
  Env env;
  for (std::size_t i = 0; i < args.size(); ++i) env[static_cast<unsigned>(i)] = args[i];
  return eval_delta0(*f, env);
}

} // namespace scott
