#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pps/graded_graph.hpp"

namespace pps {

/// Parsed contents of a system file.  Grammar (one directive per line,
/// whitespace-separated tokens, '#' starts a comment):
///
///   system "<name>"
///   mode free|table
///   cap <int>
///   vertex <id>
///   arrow <name> deg=<int> src=<id> rng=<id>
///   mul <x> <y> = <z>            (table mode only)
///
/// In free mode the arrows are the generators; in table mode they are all
/// arrows of positive degree and `mul` lists the composition table.
struct SpecFile {
  std::string name;
  Mode mode = Mode::Free;
  std::size_t cap = 0;
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<MulEntry> entries;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

/// Throws ParseError (bad syntax, with line number) and SemanticError
/// (undeclared or duplicate names, bad degrees, entries breaking the
/// endpoint or degree rules).
SpecFile parse_spec(std::string_view text);

/// Canonical text; parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const SpecFile& spec);

/// Builds the system the file describes.  Throws SemanticError.
GradedSystem build_system(const SpecFile& spec);

}  // namespace pps
