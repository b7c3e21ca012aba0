#ifndef SCOTT_FINITE_STRUCTURE_HPP
#define SCOTT_FINITE_STRUCTURE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace scott {

using Tuple = std::vector<std::uint32_t>;

struct Relation {
  std::string name;
  std::size_t arity = 0;
  std::set<Tuple> tuples;
};

// Finite relational structure: universe {0, ..., universe-1} plus named
// relations. Tuples are validated against the universe and the arity.
struct FiniteStructure {
  std::uint32_t universe = 0;
  std::vector<Relation> relations;

  void validate() const; // throws std::invalid_argument on violations
  bool holds(std::size_t rel_index, const Tuple& t) const;
};

bool same_vocabulary(const FiniteStructure& a, const FiniteStructure& b);

// File format: {"universe": n, "relations": {name: {"arity": k, "tuples": [[..], ..]}}}
FiniteStructure structure_from_json(const std::string& text);
std::string structure_to_json(const FiniteStructure& s);
FiniteStructure load_structure_file(const std::string& path);

// Builders used across tests and the CLI.
FiniteStructure make_linear_order(std::uint32_t n);      // binary "less"
FiniteStructure make_cycle_graph(std::uint32_t n);       // symmetric "edge"
FiniteStructure make_disjoint_cycles(std::uint32_t a, std::uint32_t b);

} // namespace scott

#endif
