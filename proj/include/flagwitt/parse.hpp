#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagwitt/dynkin.hpp"

namespace flagwitt {

/// Parses a diagram spec: component ("x" component)*, component = letter rank,
/// e.g. "D4" or "A3xB2". Letters are case-insensitive; whitespace is rejected.
/// Throws ParseError naming the offending token; rank validation is left to
/// build_diagram.
std::vector<SimpleType> parse_diagram_spec(const std::string& text);

/// Comma-separated 1-based vertex list, e.g. "1,4". Empty string -> empty set.
VertexSet parse_vertex_list(const std::string& text);

/// Comma-separated integer coefficient vector of length n, e.g. "0,1,0,0".
std::vector<std::int64_t> parse_coeff_vector(const std::string& text, int n);

}  // namespace flagwitt
