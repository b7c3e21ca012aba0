#ifndef SCOTT_ORDER_TERM_HPP
#define SCOTT_ORDER_TERM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace scott {

// Symbolic countable linear orders built from finite orders, ω, ω^k and η
// under + and finite multiples. Param leaves only appear inside cut-schema
// templates.
struct OrderTerm;
using OrderTermPtr = std::shared_ptr<const OrderTerm>;

struct OrderTerm {
  enum class Kind { Fin, Omega, OmegaPow, Eta, Sum, Mul, Param };
  Kind kind;
  std::uint64_t value = 0;  // Fin: n; OmegaPow: exponent; Mul: multiplier; Param: index
  OrderTermPtr left, right; // Sum: both; Mul: left only

  static OrderTermPtr fin(std::uint64_t n);
  static OrderTermPtr omega();
  static OrderTermPtr omega_pow(std::uint64_t k); // k ≥ 1; k == 1 normalizes to omega
  static OrderTermPtr eta();
  static OrderTermPtr sum(OrderTermPtr l, OrderTermPtr r);
  static OrderTermPtr mul(OrderTermPtr body, std::uint64_t n);
  static OrderTermPtr param(std::uint64_t index);
};

bool term_structurally_equal(const OrderTermPtr& a, const OrderTermPtr& b);

// Grammar: term := sum ; sum := prod ("+" prod)* ; prod := atom ("*" NAT)? ;
// atom := "0" | NAT | "w" | "w^" NAT | "eta" | "(" term ")".
// Exponent 0 is rejected; multiplier 0 yields Fin(0). The result is normalized.
OrderTermPtr parse_order_term(const std::string& text);

std::string format_order_term(const OrderTermPtr& t);

// Rewrites to the canonical shape: Mul unrolled, sums right-associated,
// Fin(0) dropped, adjacent Fin folded, Fin + ω (or ω^k) absorbed,
// OmegaPow(1) → Omega. Idempotent.
OrderTermPtr normalize(const OrderTermPtr& t);

// One way of removing a single point from the denoted order: the schema's
// left/right templates describe the two open parts; parameters range over ℕ.
struct CutSchema {
  OrderTermPtr left;
  OrderTermPtr right;
  unsigned param_count = 0;
};

// Complete, non-overlapping set of cut schemas for a normalized term.
std::vector<CutSchema> cut_schemas(const OrderTermPtr& t);

// Substitutes concrete values for Param leaves and normalizes.
OrderTermPtr instantiate(const OrderTermPtr& templ, const std::vector<std::uint64_t>& params);

} // namespace scott

#endif
