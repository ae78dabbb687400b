#include "dmect/json_io.hpp"

#include <fstream>
#include <string>

namespace dmect {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw SchemaError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int as_index(const json& v, const char* what) {
  if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return v.get<int>();
}

double as_number(const json& v, const char* what) {
  if (!v.is_number()) throw SchemaError(std::string(what) + " must be a number");
  return v.get<double>();
}

std::vector<NodeId> as_index_list(const json& v, const char* what) {
  if (!v.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<NodeId> out;
  for (const json& e : v) out.push_back(as_index(e, what));
  return out;
}

}  // namespace

json instance_to_json(const Instance& instance) {
  const int n = instance.size();
  json gains = json::array();
  for (NodeId i = 0; i < n; ++i) {
    json row = json::array();
    for (NodeId j = 0; j < n; ++j) row.push_back(instance.gain(i, j));
    gains.push_back(std::move(row));
  }
  json doc = {
      {"n", n},
      {"source", instance.source()},
      {"destinations", instance.destinations()},
      {"theta", instance.theta()},
      {"accumulation", to_string(instance.accumulation())},
      {"gains", std::move(gains)},
  };
  if (const auto& pos = instance.positions()) {
    json points = json::array();
    for (const Point& p : *pos) points.push_back({p.x, p.y});
    doc["positions"] = std::move(points);
  }
  return doc;
}

Instance instance_from_json(const json& doc) {
  const int n = as_index(require(doc, "n"), "n");
  if (n < 1) throw SchemaError("n must be at least 1");
  const NodeId source = as_index(require(doc, "source"), "source");
  std::vector<NodeId> destinations = as_index_list(require(doc, "destinations"), "destinations");
  const double theta = as_number(require(doc, "theta"), "theta");

  const json& acc = require(doc, "accumulation");
  if (!acc.is_string()) throw SchemaError("accumulation must be \"ea\" or \"mia\"");
  Accumulation mode;
  try {
    mode = accumulation_from_string(acc.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }

  const json& rows = require(doc, "gains");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw SchemaError("gains must be an n x n array");
  GainMatrix gains(n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw SchemaError("gains must be an n x n array");
    for (int j = 0; j < n; ++j) gains(i, j) = as_number(rows[i][j], "gain");
  }

  std::optional<std::vector<Point>> positions;
  if (doc.contains("positions") && !doc.at("positions").is_null()) {
    const json& pts = doc.at("positions");
    if (!pts.is_array() || static_cast<int>(pts.size()) != n)
      throw SchemaError("positions must list n points");
    positions.emplace();
    for (const json& p : pts) {
      if (!p.is_array() || p.size() != 2) throw SchemaError("each position is [x, y]");
      positions->push_back({as_number(p[0], "x"), as_number(p[1], "y")});
    }
  }

  try {
    return Instance(std::move(gains), source, std::move(destinations), theta, mode,
                    std::move(positions));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("invalid instance: ") + e.what());
  }
}

json schedule_to_json(const Schedule& schedule) {
  json slots = json::array();
  for (const Slot& slot : schedule.slots) {
    json powers = json::object();
    for (const auto& [node, p] : slot.powers) powers[std::to_string(node)] = p;
    slots.push_back({{"senders", slot.senders}, {"receivers", slot.receivers}, {"powers", powers}});
  }
  return {{"slots", std::move(slots)}};
}

Schedule schedule_from_json(const json& doc) {
  const json& slots = require(doc, "slots");
  if (!slots.is_array()) throw SchemaError("slots must be an array");
  Schedule schedule;
  for (const json& s : slots) {
    Slot slot;
    slot.senders = as_index_list(require(s, "senders"), "senders");
    slot.receivers = as_index_list(require(s, "receivers"), "receivers");
    const json& powers = require(s, "powers");
    if (!powers.is_object()) throw SchemaError("powers must be an object");
    for (const auto& [key, value] : powers.items()) {
      std::size_t used = 0;
      int node = 0;
      try {
        node = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) throw SchemaError("power key '" + key + "' is not an index");
      slot.powers[node] = as_number(value, "power");
    }
    schedule.slots.push_back(std::move(slot));
  }
  return schedule;
}

json ordering_to_json(const Ordering& ordering) { return ordering.nodes(); }

Ordering ordering_from_json(const json& doc, NodeId source) {
  try {
    return Ordering(as_index_list(doc, "ordering"), source);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("invalid ordering: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

}  // namespace dmect
