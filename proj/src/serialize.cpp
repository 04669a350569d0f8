#include "qskein/serialize.hpp"

#include <stdexcept>
#include <vector>

#include "qskein/ring.hpp"

namespace qskein {

nlohmann::json to_json(const Partition& p) {
  nlohmann::json j = nlohmann::json::array();
  for (int part : p.parts()) j.push_back(part);
  return j;
}

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

nlohmann::json to_json(const SkeinElement& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [mono, coeff] : x.terms()) {
    j.push_back({{"h", to_json(mono.h)},
                 {"hs", to_json(mono.hs)},
                 {"coeff", coeff.to_string()}});
  }
  return j;
}

SkeinElement skein_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("element must be a JSON array");
  SkeinElement x;
  for (const auto& term : j) {
    SkeinMonomial mono{partition_from_json(term.at("h")),
                       partition_from_json(term.at("hs"))};
    RingElem coeff = parse_ring_elem(term.at("coeff").get<std::string>());
    x += SkeinElement(mono, coeff);
  }
  return x;
}

nlohmann::json to_json(const QExpansion& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [key, coeff] : x.coeffs) {
    j.push_back({{"lambda", to_json(key.first)},
                 {"mu", to_json(key.second)},
                 {"coeff", coeff.to_string()}});
  }
  return j;
}

QExpansion expansion_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("expansion must be a JSON array");
  QExpansion x;
  for (const auto& term : j) {
    BasisKey key{partition_from_json(term.at("lambda")),
                 partition_from_json(term.at("mu"))};
    RingElem coeff = parse_ring_elem(term.at("coeff").get<std::string>());
    if (coeff.is_zero()) continue;
    auto [it, inserted] = x.coeffs.emplace(key, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (it->second.is_zero()) x.coeffs.erase(it);
    }
  }
  return x;
}

nlohmann::json to_json(const LinkDiagram& d) {
  nlohmann::json crossings = nlohmann::json::array();
  for (const Crossing& c : d.crossings()) {
    nlohmann::json edges;
    if (c.sign > 0) {
      edges = {c.under_in, c.over_out, c.under_out, c.over_in};
    } else {
      edges = {c.under_in, c.over_in, c.under_out, c.over_out};
    }
    crossings.push_back({{"sign", c.sign}, {"edges", edges}});
  }
  return {{"crossings", crossings}, {"free_loops", d.free_loops()}};
}

LinkDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("crossings"))
    throw std::invalid_argument("diagram must be an object with a crossings list");
  std::vector<Crossing> cs;
  for (const auto& jc : j.at("crossings")) {
    const int sign = jc.at("sign").get<int>();
    const auto edges = jc.at("edges").get<std::vector<int>>();
    if (edges.size() != 4)
      throw std::invalid_argument("crossing needs exactly four edges");
    Crossing c;
    c.sign = sign;
    c.under_in = edges[0];
    c.under_out = edges[2];
    if (sign > 0) {
      c.over_out = edges[1];
      c.over_in = edges[3];
    } else {
      c.over_in = edges[1];
      c.over_out = edges[3];
    }
    cs.push_back(c);
  }
  const int free_loops = j.value("free_loops", 0);
  return LinkDiagram(std::move(cs), free_loops);
}

}  // namespace qskein
