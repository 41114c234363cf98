#include "pps/spec_file.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "pps/error.hpp"

namespace pps {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void semantic_error(std::size_t line, const std::string& what) {
  if (line == 0) throw Error(ErrorKind::SemanticError, what);
  throw Error(ErrorKind::SemanticError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t') ++k;
    if (k > start) out.emplace_back(line.substr(start, k - start));
  }
  return out;
}

std::size_t parse_count(std::size_t line, std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) {
    parse_error(line, "expected a non-negative integer for " + std::string(what) + ", got '" +
                          std::string(token) + "'");
  }
  return value;
}

void check_name(std::size_t line, const std::string& name) {
  if (name.find_first_of("=\"#|") != std::string::npos) {
    parse_error(line, "invalid name '" + name + "'");
  }
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  SpecFile spec;
  std::optional<std::size_t> name_line, mode_line, cap_line;
  std::vector<std::size_t> vertex_lines, arrow_lines, entry_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    // strip a comment, but not inside the quoted system name
    bool quoted = false;
    std::size_t cut = raw.size();
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == '"') quoted = !quoted;
      if (raw[k] == '#' && !quoted) {
        cut = k;
        break;
      }
    }
    const std::string_view body = raw.substr(0, cut);
    const std::vector<std::string> tok = tokenize(body);
    if (tok.empty()) continue;
    const std::string& directive = tok[0];

    if (directive == "system") {
      if (name_line) parse_error(line_no, "duplicate 'system' directive");
      const std::size_t open = body.find('"');
      const std::size_t close = body.rfind('"');
      if (open == std::string_view::npos || close == open ||
          !tokenize(body.substr(close + 1)).empty() ||
          tokenize(body.substr(0, open)).size() != 1) {
        parse_error(line_no, "expected: system \"<name>\"");
      }
      spec.name = std::string(body.substr(open + 1, close - open - 1));
      if (spec.name.find('"') != std::string::npos) parse_error(line_no, "quote inside system name");
      name_line = line_no;
    } else if (directive == "mode") {
      if (mode_line) parse_error(line_no, "duplicate 'mode' directive");
      if (tok.size() != 2 || (tok[1] != "free" && tok[1] != "table")) {
        parse_error(line_no, "expected: mode free|table");
      }
      spec.mode = tok[1] == "free" ? Mode::Free : Mode::Table;
      mode_line = line_no;
    } else if (directive == "cap") {
      if (cap_line) parse_error(line_no, "duplicate 'cap' directive");
      if (tok.size() != 2) parse_error(line_no, "expected: cap <int>");
      spec.cap = parse_count(line_no, tok[1], "cap");
      cap_line = line_no;
    } else if (directive == "vertex") {
      if (tok.size() != 2) parse_error(line_no, "expected: vertex <id>");
      check_name(line_no, tok[1]);
      spec.vertices.push_back(tok[1]);
      vertex_lines.push_back(line_no);
    } else if (directive == "arrow") {
      if (tok.size() != 5) parse_error(line_no, "expected: arrow <name> deg=<int> src=<id> rng=<id>");
      check_name(line_no, tok[1]);
      std::map<std::string, std::string> kv;
      for (std::size_t k = 2; k < 5; ++k) {
        const std::size_t eq = tok[k].find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == tok[k].size()) {
          parse_error(line_no, "expected key=value, got '" + tok[k] + "'");
        }
        const std::string key = tok[k].substr(0, eq);
        if (key != "deg" && key != "src" && key != "rng") {
          parse_error(line_no, "unknown arrow attribute '" + key + "'");
        }
        if (!kv.emplace(key, tok[k].substr(eq + 1)).second) {
          parse_error(line_no, "repeated arrow attribute '" + key + "'");
        }
      }
      spec.arrows.push_back(
          {tok[1], parse_count(line_no, kv.at("deg"), "deg"), kv.at("src"), kv.at("rng")});
      arrow_lines.push_back(line_no);
    } else if (directive == "mul") {
      if (tok.size() != 5 || tok[3] != "=") parse_error(line_no, "expected: mul <x> <y> = <z>");
      spec.entries.push_back({tok[1], tok[2], tok[4]});
      entry_lines.push_back(line_no);
    } else {
      parse_error(line_no, "unknown directive '" + directive + "'");
    }
  }
  if (!mode_line) parse_error(line_no, "missing 'mode' directive");
  if (!cap_line) parse_error(line_no, "missing 'cap' directive");
  if (!name_line) parse_error(line_no, "missing 'system' directive");

  // semantics
  std::set<std::string> names;
  for (std::size_t k = 0; k < spec.vertices.size(); ++k) {
    if (!names.insert(spec.vertices[k]).second) {
      semantic_error(vertex_lines[k], "duplicate name '" + spec.vertices[k] + "'");
    }
  }
  const std::set<std::string> vertex_set(spec.vertices.begin(), spec.vertices.end());
  struct Info {
    std::size_t degree;
    std::string src, rng;
  };
  std::map<std::string, Info> info;
  for (const std::string& v : spec.vertices) info.emplace(v, Info{0, v, v});
  for (std::size_t k = 0; k < spec.arrows.size(); ++k) {
    const ArrowDecl& a = spec.arrows[k];
    const std::size_t line = arrow_lines[k];
    if (!names.insert(a.name).second) semantic_error(line, "duplicate name '" + a.name + "'");
    if (a.degree == 0) {
      semantic_error(line, "arrow '" + a.name + "' has degree 0 (identities are implicit)");
    }
    if (a.degree > spec.cap) {
      semantic_error(line, "arrow '" + a.name + "' has degree " + std::to_string(a.degree) +
                               " above cap " + std::to_string(spec.cap));
    }
    if (!vertex_set.count(a.src)) semantic_error(line, "undeclared vertex '" + a.src + "'");
    if (!vertex_set.count(a.rng)) semantic_error(line, "undeclared vertex '" + a.rng + "'");
    info.emplace(a.name, Info{a.degree, a.src, a.rng});
  }
  std::map<std::pair<std::string, std::string>, std::string> seen;
  for (std::size_t k = 0; k < spec.entries.size(); ++k) {
    const MulEntry& e = spec.entries[k];
    const std::size_t line = entry_lines[k];
    if (spec.mode == Mode::Free) semantic_error(line, "'mul' is not allowed in free mode");
    for (const std::string* n : {&e.lhs, &e.rhs, &e.product}) {
      if (!info.count(*n)) semantic_error(line, "undeclared arrow '" + *n + "'");
    }
    const Info& x = info.at(e.lhs);
    const Info& y = info.at(e.rhs);
    const Info& z = info.at(e.product);
    if (x.src != y.rng) {
      semantic_error(line, "src(" + e.lhs + ") = " + x.src + " differs from rng(" + e.rhs +
                               ") = " + y.rng);
    }
    if (z.degree != x.degree + y.degree) {
      semantic_error(line, "deg(" + e.product + ") is not deg(" + e.lhs + ") + deg(" + e.rhs + ")");
    }
    auto [it, inserted] = seen.emplace(std::make_pair(e.lhs, e.rhs), e.product);
    if (!inserted && it->second != e.product) {
      semantic_error(line, "conflicting products for " + e.lhs + " " + e.rhs);
    }
  }
  return spec;
}

std::string serialize_spec(const SpecFile& spec) {
  std::ostringstream out;
  out << "system \"" << spec.name << "\"\n";
  out << "mode " << to_string(spec.mode) << "\n";
  out << "cap " << spec.cap << "\n";
  for (const std::string& v : spec.vertices) out << "vertex " << v << "\n";
  for (const ArrowDecl& a : spec.arrows) {
    out << "arrow " << a.name << " deg=" << a.degree << " src=" << a.src << " rng=" << a.rng
        << "\n";
  }
  for (const MulEntry& e : spec.entries) {
    out << "mul " << e.lhs << " " << e.rhs << " = " << e.product << "\n";
  }
  return out.str();
}

GradedSystem build_system(const SpecFile& spec) {
  try {
    if (spec.mode == Mode::Free) return build_free(spec.arrows, spec.vertices, spec.cap);
    return build_table(TableSpec{spec.vertices, spec.arrows, spec.entries, spec.cap});
  } catch (const Error& e) {
    throw Error(ErrorKind::SemanticError, e.what());
  }
}

}  // namespace pps
