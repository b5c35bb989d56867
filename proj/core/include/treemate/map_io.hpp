#pragma once

#include <iosfwd>
#include <string>

#include "treemate/map.hpp"

namespace treemate {

/// Text form of a (decorated) map:
///   darts N
///   opposite: (a b)(c d)...
///   vertex: a b c ...          one rotation cycle per line
///   root: d
///   tree: e1 e2 ...            optional
///   color: e=red|green|blue    optional, one line per colored edge
///   orient: d1 d2 ...          optional, tail dart per oriented edge
///   ham: f1 f2 ... / e1 e2 ... optional
/// Edges are written as their smaller dart id. serialize(parse(s)) == s
/// for strings produced by serialize.
std::string serialize_map(const DecoratedMap& dm);
DecoratedMap parse_map(const std::string& text);
DecoratedMap parse_map_stream(std::istream& in);

} // namespace treemate
