#pragma once

// Canonical text serialization, shared by every module:
//
//   # vertices: <label> <label> ...
//   <member>,<member>,...        (one edge per line, members in vertex order,
//                                 edges in canonical order)
//   <blank line>
//
// Round-trips bit-exactly.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hg/core.hpp"

namespace hg {

std::string to_text(const Hypergraph& h);

/// Parse one serialized hypergraph. Edges may appear in any order; the
/// result is canonicalized.
Hypergraph parse_hypergraph(std::string_view text);

/// Read one serialized record from a stream (stops at the blank line or EOF).
/// Returns nullopt at end of input.
std::optional<Hypergraph> read_hypergraph(std::istream& in);

/// Split on `delim` at parenthesis depth 0 (pair labels contain commas).
std::vector<std::string> split_top_level(std::string_view text, char delim);

}  // namespace hg
