#pragma once

#include <stdexcept>
#include <string>

#include "licol/types.hpp"

namespace licol {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsers reject malformed documents, unknown fields (named in the error)
// and type mismatches. Serializers emit the canonical form: fixed key order,
// lists sorted ascending, two-space indent, trailing newline; parse followed
// by serialize is byte-stable.

ConvexInstance parse_instance(const std::string& text);
std::string serialize_instance(const ConvexInstance& inst);

TargetGraph parse_target(const std::string& text);
std::string serialize_target(const TargetGraph& h);

BipartiteGraph parse_graph(const std::string& text);
std::string serialize_graph(const BipartiteGraph& g);

Coloring parse_coloring(const std::string& text);
std::string serialize_coloring(const Coloring& col);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace licol
