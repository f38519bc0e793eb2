#include "cforge/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cforge {

Json graph_to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.weight}));
  return Json{{"n", g.node_count()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw std::invalid_argument(R"(graph JSON must be {"n": ..., "edges": [...]})");
  }
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) {
      throw std::invalid_argument("graph edge must be [u, v, weight]");
    }
    edges.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>()});
  }
  return WeightedGraph(n, std::move(edges));
}

Json qubo_to_json(const Qubo& q) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : q.terms()) {
    terms.push_back(Json::array({key.first, key.second, coeff}));
  }
  return Json{{"n", q.num_vars()}, {"offset", q.offset()}, {"terms", std::move(terms)}};
}

Qubo qubo_from_json(const Json& j) {
  Qubo q(j.at("n").get<int>(), j.at("offset").get<double>());
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) {
      throw std::invalid_argument("QUBO term must be [i, j, coeff]");
    }
    q.add_term(t[0].get<int>(), t[1].get<int>(), t[2].get<double>());
  }
  return q;
}

Json sampleset_to_json(const SampleSet& set) {
  Json out = Json::array();
  for (const auto& s : set.samples()) {
    std::string bits(s.assignment.size(), '0');
    for (std::size_t i = 0; i < s.assignment.size(); ++i) {
      if (s.assignment[i]) bits[i] = '1';
    }
    out.push_back(Json{{"bits", std::move(bits)},
                       {"energy", s.energy},
                       {"count", s.occurrences}});
  }
  return out;
}

SampleSet sampleset_from_json(const Json& j) {
  std::vector<Sample> samples;
  int num_vars = 0;
  for (const auto& entry : j) {
    const std::string bits = entry.at("bits").get<std::string>();
    Sample s;
    s.assignment.reserve(bits.size());
    for (char ch : bits) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("sample bits must be a 0/1 string");
      }
      s.assignment.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    s.energy = entry.at("energy").get<double>();
    s.occurrences = entry.at("count").get<std::uint64_t>();
    num_vars = static_cast<int>(bits.size());
    samples.push_back(std::move(s));
  }
  return SampleSet(num_vars, std::move(samples));
}

Json positions_to_json(const std::vector<TleRecord>& records,
                       const std::vector<StateVector>& states) {
  if (records.size() != states.size()) {
    throw std::invalid_argument("records and states must pair up");
  }
  Json sats = Json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& p = states[i].position_km;
    sats.push_back(Json{{"name", records[i].name},
                        {"id", records[i].catalog_number},
                        {"r", Json::array({p.x(), p.y(), p.z()})}});
  }
  Json out;
  out["timestamp"] = states.empty() ? Json() : Json(format_rfc3339(states.front().timestamp));
  out["satellites"] = std::move(sats);
  return out;
}

PositionsFile positions_from_json(const Json& j) {
  PositionsFile out;
  const UtcMicros ts =
      j.contains("timestamp") && j.at("timestamp").is_string()
          ? parse_rfc3339(j.at("timestamp").get<std::string>())
          : 0;
  const Json& sats = j.contains("satellites") ? j.at("satellites") : j;
  for (const auto& s : sats) {
    const auto& r = s.at("r");
    if (!r.is_array() || r.size() != 3) {
      throw std::invalid_argument("satellite position must be [x, y, z]");
    }
    out.names.push_back(s.at("name").get<std::string>());
    out.ids.push_back(s.at("id").get<int>());
    StateVector sv;
    sv.position_km =
        Eigen::Vector3d(r[0].get<double>(), r[1].get<double>(), r[2].get<double>());
    sv.timestamp = ts;
    out.states.push_back(sv);
  }
  return out;
}

namespace {

const char* reason_name(SplitReason reason) {
  switch (reason) {
    case SplitReason::kImproving:
      return "improving";
    case SplitReason::kForcedBySize:
      return "forced_by_size";
    case SplitReason::kNone:
      break;
  }
  return "none";
}

Json coalition_to_json(const Coalition& c) {
  Json out = Json::array();
  for (NodeId m : c.members()) out.push_back(m);
  return out;
}

}  // namespace

Json result_to_json(const GcsqResult& result) {
  Json coalitions = Json::array();
  for (const auto& c : result.structure.coalitions) {
    coalitions.push_back(coalition_to_json(c));
  }
  Json trace = Json::array();
  for (const auto& entry : result.trace) {
    Json t{{"coalition", coalition_to_json(entry.coalition)},
           {"accepted", entry.decision.accepted},
           {"reason", reason_name(entry.decision.reason)},
           {"cut_value", entry.decision.cut_value},
           {"qubo_vars", entry.qubo_vars},
           {"sampler_seconds", entry.sampler_seconds}};
    if (entry.decision.accepted) {
      t["side_a"] = coalition_to_json(entry.decision.side_a);
      t["side_b"] = coalition_to_json(entry.decision.side_b);
    }
    trace.push_back(std::move(t));
  }
  return Json{{"value", result.value},
              {"coalitions", std::move(coalitions)},
              {"trace", std::move(trace)}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed for " + path);
  return std::move(buf).str();
}

Json load_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw std::runtime_error("invalid JSON in " + path + ": " + err.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace cforge
