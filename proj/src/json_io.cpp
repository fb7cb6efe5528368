#include "licol/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace licol {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void check_fields(const json& obj, const char* what,
                  std::initializer_list<const char*> allowed) {
  if (!obj.is_object())
    throw ParseError(std::string(what) + ": expected a JSON object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* name : allowed)
      if (item.key() == name) known = true;
    if (!known)
      throw ParseError(std::string(what) + ": unknown field '" + item.key() +
                       "'");
  }
}

const json& require(const json& obj, const char* what, const char* field) {
  auto it = obj.find(field);
  if (it == obj.end())
    throw ParseError(std::string(what) + ": missing field '" + field + "'");
  return *it;
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + ": expected an integer");
  return v.get<int>();
}

ColorMask as_color_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array of colors");
  ColorMask m = 0;
  for (const auto& e : v) {
    int c = as_int(e, where);
    if (c < 1 || c > kMaxColors)
      throw ParseError(where + ": color out of supported range");
    m |= color_bit(c);
  }
  return m;
}

ordered_json color_array(ColorMask m) {
  return ordered_json(colors_of(m));
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

ConvexInstance parse_instance(const std::string& text) {
  const json doc = parse_document(text);
  check_fields(doc, "instance", {"k", "x_lists", "y", "gen"});
  ConvexInstance inst;
  inst.k = as_int(require(doc, "instance", "k"), "instance.k");
  const json& xs = require(doc, "instance", "x_lists");
  if (!xs.is_array()) throw ParseError("instance.x_lists: expected an array");
  for (std::size_t i = 0; i < xs.size(); ++i)
    inst.x_lists.push_back(
        as_color_list(xs[i], "instance.x_lists[" + std::to_string(i + 1) + "]"));
  const json& ys = require(doc, "instance", "y");
  if (!ys.is_array()) throw ParseError("instance.y: expected an array");
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const std::string where = "instance.y[" + std::to_string(j + 1) + "]";
    check_fields(ys[j], where.c_str(), {"a", "b", "list"});
    YVertex y;
    y.a = as_int(require(ys[j], where.c_str(), "a"), where + ".a");
    y.b = as_int(require(ys[j], where.c_str(), "b"), where + ".b");
    y.list = as_color_list(require(ys[j], where.c_str(), "list"), where + ".list");
    inst.ys.push_back(y);
  }
  if (auto it = doc.find("gen"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("instance.gen: expected a string");
    inst.gen = it->get<std::string>();
  }
  return inst;
}

std::string serialize_instance(const ConvexInstance& inst) {
  ordered_json doc;
  doc["k"] = inst.k;
  ordered_json xs = ordered_json::array();
  for (ColorMask m : inst.x_lists) xs.push_back(color_array(m));
  doc["x_lists"] = std::move(xs);
  ordered_json ys = ordered_json::array();
  for (const auto& y : inst.ys) {
    ordered_json o;
    o["a"] = y.a;
    o["b"] = y.b;
    o["list"] = color_array(y.list);
    ys.push_back(std::move(o));
  }
  doc["y"] = std::move(ys);
  if (!inst.gen.empty()) doc["gen"] = inst.gen;
  return dump(doc);
}

TargetGraph parse_target(const std::string& text) {
  const json doc = parse_document(text);
  check_fields(doc, "target", {"order", "edges", "loops"});
  const int order = as_int(require(doc, "target", "order"), "target.order");
  const json& es = require(doc, "target", "edges");
  if (!es.is_array()) throw ParseError("target.edges: expected an array");
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "target.edges[" + std::to_string(i + 1) + "]";
    if (!es[i].is_array() || es[i].size() != 2)
      throw ParseError(where + ": expected a pair of colors");
    edges.emplace_back(as_int(es[i][0], where), as_int(es[i][1], where));
  }
  std::vector<int> loops;
  const json& ls = require(doc, "target", "loops");
  if (!ls.is_array()) throw ParseError("target.loops: expected an array");
  for (std::size_t i = 0; i < ls.size(); ++i)
    loops.push_back(as_int(ls[i], "target.loops[" + std::to_string(i + 1) + "]"));
  try {
    return TargetGraph::make(order, std::move(edges), std::move(loops));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("target: ") + e.what());
  }
}

std::string serialize_target(const TargetGraph& h) {
  ordered_json doc;
  doc["order"] = h.order;
  ordered_json es = ordered_json::array();
  for (auto [c1, c2] : h.edges) es.push_back(ordered_json::array({c1, c2}));
  doc["edges"] = std::move(es);
  doc["loops"] = ordered_json(h.loops);
  return dump(doc);
}

BipartiteGraph parse_graph(const std::string& text) {
  const json doc = parse_document(text);
  check_fields(doc, "graph", {"x_count", "y_adj"});
  BipartiteGraph g;
  g.x_count = as_int(require(doc, "graph", "x_count"), "graph.x_count");
  if (g.x_count < 0) throw ParseError("graph.x_count: must be non-negative");
  const json& ys = require(doc, "graph", "y_adj");
  if (!ys.is_array()) throw ParseError("graph.y_adj: expected an array");
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const std::string where = "graph.y_adj[" + std::to_string(j + 1) + "]";
    if (!ys[j].is_array()) throw ParseError(where + ": expected an array");
    std::vector<int> nbrs;
    for (const auto& e : ys[j]) {
      int i = as_int(e, where);
      if (i < 1 || i > g.x_count)
        throw ParseError(where + ": X index out of range");
      nbrs.push_back(i);
    }
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw ParseError(where + ": duplicate X index");
    g.y_adj.push_back(std::move(nbrs));
  }
  return g;
}

std::string serialize_graph(const BipartiteGraph& g) {
  ordered_json doc;
  doc["x_count"] = g.x_count;
  ordered_json ys = ordered_json::array();
  for (const auto& nbrs : g.y_adj) ys.push_back(ordered_json(nbrs));
  doc["y_adj"] = std::move(ys);
  return dump(doc);
}

Coloring parse_coloring(const std::string& text) {
  const json doc = parse_document(text);
  check_fields(doc, "coloring", {"x", "y"});
  Coloring col;
  for (const auto& e : require(doc, "coloring", "x"))
    col.x.push_back(as_int(e, "coloring.x"));
  for (const auto& e : require(doc, "coloring", "y"))
    col.y.push_back(as_int(e, "coloring.y"));
  return col;
}

std::string serialize_coloring(const Coloring& col) {
  ordered_json doc;
  doc["x"] = ordered_json(col.x);
  doc["y"] = ordered_json(col.y);
  return dump(doc);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace licol
