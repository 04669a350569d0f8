#pragma once

#include <json.hpp>

#include "qskein/conversion.hpp"
#include "qskein/diagram.hpp"
#include "qskein/partition.hpp"
#include "qskein/skein.hpp"

namespace qskein {

// JSON shapes, all round-tripping through the text parsers:
//   Partition     -> [4, 2, 2]
//   SkeinElement  -> [{"h": [3, 2], "hs": [1], "coeff": "v^2"}, ...]
//   QExpansion    -> [{"lambda": [2], "mu": [1], "coeff": "1"}, ...]
//   LinkDiagram   -> {"crossings": [{"sign": 1, "edges": [a, b, c, d]}, ...],
//                     "free_loops": 0}
// Crossing edges list the incident edge ids counterclockwise starting from
// the incoming under edge.

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SkeinElement& x);
SkeinElement skein_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QExpansion& x);
QExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace qskein
