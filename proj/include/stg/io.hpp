#pragma once

#include <json.hpp>
#include <string>

#include "stg/graph.hpp"
#include "stg/groupoid.hpp"
#include "stg/kgraph.hpp"
#include "stg/steinberg.hpp"

namespace stg {

// Versioned document schemas: graph/1, groupoid/1, paction/1, kgraph/1,
// algebra/1. Parsers throw ValidationError with the offending location;
// writers emit documents that re-parse to equal values.
Graph parse_graph(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& g);

Groupoid parse_groupoid(const nlohmann::json& doc);
nlohmann::json groupoid_to_json(const Groupoid& g);

PartialAction parse_paction(const nlohmann::json& doc);
nlohmann::json paction_to_json(const PartialAction& p);

KGraph parse_kgraph(const nlohmann::json& doc);
nlohmann::json kgraph_to_json(const KGraph& g);

StructAlgebra parse_algebra(const nlohmann::json& doc);
nlohmann::json algebra_to_json(const StructAlgebra& a);

nlohmann::json load_document(const std::string& path);

// FNV-1a 64-bit of the raw bytes, lowercase hex.
std::string digest_bytes(const std::string& bytes);
std::string digest_file(const std::string& path);

}  // namespace stg
