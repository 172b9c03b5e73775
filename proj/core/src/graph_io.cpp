#include "bnkit/graph_io.hpp"

#include "bnkit/error.hpp"

#include <json.hpp>

#include <sstream>

namespace bnkit {

namespace {

using Json = nlohmann::ordered_json;

char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

} // namespace

std::string stg_to_dot(const Stg &stg) {
  std::ostringstream out;
  out << "digraph stg {\n";
  out << "  label=" << quoted(stg.mode) << ";\n";
  for (std::size_t k = 0; k < stg.nodes.size(); ++k)
    out << "  n" << k << " [label=" << quoted(stg.nodes[k]) << "];\n";
  for (const auto &[from, to] : stg.edges)
    out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string stg_to_json(const Stg &stg) {
  Json doc;
  doc["mode"] = stg.mode;
  doc["nodes"] = Json::array();
  for (const auto &label : stg.nodes)
    doc["nodes"].push_back(label);
  doc["edges"] = Json::array();
  for (const auto &[from, to] : stg.edges)
    doc["edges"].push_back(Json::array({stg.nodes[from], stg.nodes[to]}));
  return doc.dump() + "\n";
}

std::string influence_to_dot(const InfluenceGraph &graph, const BooleanNetwork &net) {
  std::ostringstream out;
  out << "digraph influence {\n";
  for (std::size_t i = 0; i < net.size(); ++i)
    out << "  " << quoted(net.name(i)) << ";\n";
  for (const auto &e : graph.edges) {
    out << "  " << quoted(net.name(e.source)) << " -> " << quoted(net.name(e.target))
        << " [label=\"" << sign_char(e.sign) << "\", arrowhead="
        << (e.sign == Sign::positive ? "normal" : "tee") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string influence_to_json(const InfluenceGraph &graph, const BooleanNetwork &net) {
  Json doc;
  doc["nodes"] = Json::array();
  for (std::size_t i = 0; i < net.size(); ++i)
    doc["nodes"].push_back(net.name(i));
  doc["edges"] = Json::array();
  for (const auto &e : graph.edges) {
    Json edge;
    edge["source"] = net.name(e.source);
    edge["target"] = net.name(e.target);
    edge["sign"] = std::string(1, sign_char(e.sign));
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump() + "\n";
}

std::string solution_to_json(const Cube &c, const BooleanNetwork &net) {
  if (c.size() != net.size())
    throw DimensionError("cube length does not match network size");
  Json doc = Json::object();
  const std::string pattern = c.to_string();
  for (std::size_t i = 0; i < net.size(); ++i)
    doc[net.name(i)] = std::string(1, pattern[i]);
  return doc.dump();
}

std::string solution_to_json(const State &x, const BooleanNetwork &net) {
  return solution_to_json(Cube::from_state(x), net);
}

Cube solution_from_json(std::string_view text, const BooleanNetwork &net) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(e.what(), 1, 0);
  }
  if (!doc.is_object())
    throw ParseError("solution must be a JSON object", 1, 0);
  if (doc.size() != net.size())
    throw ModelError("solution has " + std::to_string(doc.size()) + " keys, network has " +
                     std::to_string(net.size()) + " components");
  Cube c(net.size());
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto index = net.index_of(it.key());
    if (!index)
      throw ModelError("unknown component '" + it.key() + "'");
    if (!it.value().is_string())
      throw ParseError("value of '" + it.key() + "' must be a string", 1, 0);
    const std::string v = it.value().get<std::string>();
    if (v == "0")
      c.fix(*index, false);
    else if (v == "1")
      c.fix(*index, true);
    else if (v != "*")
      throw ParseError("value of '" + it.key() + "' must be \"0\", \"1\" or \"*\"", 1, 0);
  }
  return c;
}

} // namespace bnkit
