#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cforge/gcsq.hpp"
#include "cforge/graph.hpp"
#include "cforge/qubo.hpp"
#include "cforge/sampler.hpp"
#include "cforge/tle.hpp"

namespace cforge {

using Json = nlohmann::json;

// Graph interchange: {"n": int, "edges": [[u, v, w], ...]}.
Json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const Json& j);

// QUBO debug dump: {"n": int, "offset": real, "terms": [[i, j, coeff], ...]}.
Json qubo_to_json(const Qubo& q);
Qubo qubo_from_json(const Json& j);

// Sample-set dump: [{"bits": "0101...", "energy": real, "count": int}, ...]
// in sample-set order; bit i of the string is variable i.
Json sampleset_to_json(const SampleSet& set);
SampleSet sampleset_from_json(const Json& j);

// Propagated positions: [{"name", "id", "r": [x, y, z]}, ...] plus the
// shared timestamp.
struct PositionsFile {
  std::vector<std::string> names;
  std::vector<int> ids;
  std::vector<StateVector> states;
};
Json positions_to_json(const std::vector<TleRecord>& records,
                       const std::vector<StateVector>& states);
PositionsFile positions_from_json(const Json& j);

// Solve result: {"value": real, "coalitions": [[ids], ...], "trace": [...]}.
Json result_to_json(const GcsqResult& result);

// Canonical rendering used everywhere a file or stdout payload is written:
// 2-space indentation and a trailing newline, so identical structures are
// byte-identical.
std::string dump_json(const Json& j);

// File helpers with path-bearing error messages.
Json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace cforge
