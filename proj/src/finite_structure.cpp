#include "scott/finite_structure.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace scott {

void FiniteStructure::validate() const {
  for (const auto& r : relations) {
    for (const auto& t : r.tuples) {
      if (t.size() != r.arity)
        throw std::invalid_argument("relation " + r.name + ": tuple arity mismatch");
      for (auto e : t)
        if (e >= universe)
          throw std::invalid_argument("relation " + r.name + ": element outside universe");
    }
  }
}

bool FiniteStructure::holds(std::size_t rel_index, const Tuple& t) const {
  return relations[rel_index].tuples.count(t) > 0;
}

bool same_vocabulary(const FiniteStructure& a, const FiniteStructure& b) {
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (a.relations[i].name != b.relations[i].name ||
        a.relations[i].arity != b.relations[i].arity)
      return false;
  return true;
}

FiniteStructure structure_from_json(const std::string& text) {
  auto doc = nlohmann::ordered_json::parse(text);
  FiniteStructure s;
  s.universe = doc.at("universe").get<std::uint32_t>();
  if (doc.contains("relations")) {
    for (auto& [name, body] : doc.at("relations").items()) {
      Relation r;
      r.name = name;
      r.arity = body.at("arity").get<std::size_t>();
      for (auto& t : body.at("tuples")) {
        Tuple tup;
        for (auto& e : t) tup.push_back(e.get<std::uint32_t>());
        r.tuples.insert(std::move(tup));
      }
      s.relations.push_back(std::move(r));
    }
  }
  s.validate();
  return s;
}

std::string structure_to_json(const FiniteStructure& s) {
  nlohmann::ordered_json doc;
  doc["universe"] = s.universe;
  auto rels = nlohmann::ordered_json::object();
  for (const auto& r : s.relations) {
    nlohmann::ordered_json body;
    body["arity"] = r.arity;
    auto tuples = nlohmann::ordered_json::array();
    for (const auto& t : r.tuples) tuples.push_back(t);
    body["tuples"] = std::move(tuples);
    rels[r.name] = std::move(body);
  }
  doc["relations"] = std::move(rels);
  return doc.dump(2);
}

FiniteStructure load_structure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open structure file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return structure_from_json(text);
}

FiniteStructure make_linear_order(std::uint32_t n) {
  FiniteStructure s;
  s.universe = n;
  Relation less{"less", 2, {}};
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) less.tuples.insert({i, j});
  s.relations.push_back(std::move(less));
  return s;
}

FiniteStructure make_cycle_graph(std::uint32_t n) {
  FiniteStructure s;
  s.universe = n;
  Relation edge{"edge", 2, {}};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t j = (i + 1) % n;
    if (i != j) {
      edge.tuples.insert({i, j});
      edge.tuples.insert({j, i});
    }
  }
  s.relations.push_back(std::move(edge));
  return s;
}

FiniteStructure make_disjoint_cycles(std::uint32_t a, std::uint32_t b) {
  FiniteStructure s;
  s.universe = a + b;
  Relation edge{"edge", 2, {}};
  auto add_cycle = [&edge](std::uint32_t base, std::uint32_t n) {
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t j = (i + 1) % n;
      if (i != j) {
        edge.tuples.insert({base + i, base + j});
        edge.tuples.insert({base + j, base + i});
      }
    }
  };
  add_cycle(0, a);
  add_cycle(a, b);
  s.relations.push_back(std::move(edge));
  return s;
}

} // namespace scott
