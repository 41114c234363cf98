#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pps/commands.hpp"
#include "pps/error.hpp"
#include "pps/spec_file.hpp"
#include "support/test_support.hpp"

using namespace pps;
using namespace pps::testing;

namespace {

std::string slurp(const std::string& file) {
  std::ifstream in(std::string(PPS_FIXTURE_DIR) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SpecFile fixture(const std::string& file) { return parse_spec(slurp(file)); }

ErrorKind parse_kind(const std::string& text) {
  try {
    (void)parse_spec(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for: " << text);
  return ErrorKind::InvalidSystem;
}

std::string message_of(const std::string& text) {
  try {
    (void)parse_spec(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

std::string get(const Report& r, const std::string& key) {
  for (const auto& [k, v] : r.fields) {
    if (k == key) return v;
  }
  return "<missing " + key + ">";
}

const std::string kHead = "system \"x\"\nmode free\ncap 3\nvertex v\n";

}  // namespace

TEST_CASE("the square fixture") {
  const SpecFile s = fixture("square.pps");
  CHECK(s.mode == Mode::Table);
  CHECK(s.cap == 4);
  CHECK(s.vertices.size() == 4);
  CHECK(s.arrows.size() == 5);
  CHECK(s.entries.size() == 2);
  CHECK(build_system(s).arrow_count() == 9);
}

TEST_CASE("minimal file") {
  const SpecFile s = parse_spec("system \"x\"\nmode free\ncap 1\nvertex v\n");
  CHECK(s.name == "x");
  CHECK(s.vertices == std::vector<std::string>{"v"});
  CHECK(s.arrows.empty());
  CHECK(build_system(s).arrow_count() == 1);
}

TEST_CASE("comments, blank lines and CRLF") {
  const SpecFile s = parse_spec(
      "# header\r\nsystem \"a # b\"   # trailing\r\n\r\nmode   free\ncap 2\nvertex v\t# x\n"
      "arrow f deg=1 src=v rng=v\n");
  CHECK(s.name == "a # b");
  CHECK(s.arrows.size() == 1);
  CHECK(s.arrows[0].degree == 1);
}

TEST_CASE("syntax errors carry the line number") {
  CHECK(parse_kind(kHead + "edge f\n") == ErrorKind::ParseError);
  CHECK(message_of(kHead + "edge f\n").find("line 5") != std::string::npos);
  CHECK(parse_kind(kHead + "arrow f deg=x src=v rng=v\n") == ErrorKind::ParseError);
  CHECK(parse_kind(kHead + "arrow f deg=1 src=v\n") == ErrorKind::ParseError);
  CHECK(parse_kind(kHead + "arrow f deg=1 src=v src=v\n") == ErrorKind::ParseError);
  CHECK(parse_kind(kHead + "arrow f deg=1 src=v dst=v\n") == ErrorKind::ParseError);
  CHECK(parse_kind(kHead + "mode table\n") == ErrorKind::ParseError);
  CHECK(parse_kind("mode free\ncap 2\nvertex v\n") == ErrorKind::ParseError);
  CHECK(parse_kind("system \"x\"\ncap 2\n") == ErrorKind::ParseError);
  CHECK(parse_kind("system \"x\"\nmode free\ncap -1\n") == ErrorKind::ParseError);
  CHECK(parse_kind("system x\nmode free\ncap 1\n") == ErrorKind::ParseError);
  CHECK(parse_kind(kHead + "mul a b c\n") == ErrorKind::ParseError);
}

TEST_CASE("semantic errors") {
  CHECK(parse_kind(kHead + "arrow q deg=0 src=v rng=v\n") == ErrorKind::SemanticError);
  CHECK(parse_kind(kHead + "arrow q deg=4 src=v rng=v\n") == ErrorKind::SemanticError);
  CHECK(parse_kind(kHead + "arrow q deg=1 src=w rng=v\n") == ErrorKind::SemanticError);
  CHECK(parse_kind(kHead + "vertex v\n") == ErrorKind::SemanticError);
  CHECK(parse_kind(kHead + "arrow v deg=1 src=v rng=v\n") == ErrorKind::SemanticError);
  CHECK(parse_kind(kHead + "arrow f deg=1 src=v rng=v\narrow ff deg=2 src=v rng=v\nmul f f = ff\n") ==
        ErrorKind::SemanticError);  // mul in free mode

  const std::string table = "system \"t\"\nmode table\ncap 3\nvertex u\nvertex v\n"
                            "arrow f deg=1 src=u rng=v\narrow g deg=1 src=v rng=v\n"
                            "arrow h deg=2 src=u rng=v\narrow k deg=2 src=u rng=v\n";
  CHECK(parse_spec(table + "mul g f = h\n").entries.size() == 1);
  CHECK(parse_kind(table + "mul f g = h\n") == ErrorKind::SemanticError);  // src(f) ≠ rng(g)
  CHECK(parse_kind(table + "mul g f = g\n") == ErrorKind::SemanticError);  // degree
  CHECK(parse_kind(table + "mul g f = z\n") == ErrorKind::SemanticError);  // undeclared
  CHECK(parse_kind(table + "mul g f = h\nmul g f = k\n") == ErrorKind::SemanticError);
  CHECK(parse_spec(table + "mul g f = h\nmul g f = h\n").entries.size() == 2);
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* file : {"square.pps", "square_free.pps", "cc_bimodule.pps", "single_loop.pps"}) {
    const SpecFile s = fixture(file);
    CHECK(parse_spec(serialize_spec(s)) == s);
    CHECK(serialize_spec(parse_spec(serialize_spec(s))) == serialize_spec(s));
  }
}

TEST_CASE("repcheck on the square") {
  CommandOptions o;
  o.trunc = 4;
  const Report r = run_command("repcheck", fixture("square.pps"), o);
  CHECK(r.exit_code == kRefuted);
  CHECK(get(r, "witness.x") == "a");
  CHECK(get(r, "witness.y") == "c");
  CHECK(get(r, "witness.basis") == "d");
  CHECK(get(r, "witness.lhs") == "δ_b");
  CHECK(get(r, "witness.rhs") == "0");
  CHECK(r.render_machine().rfind("schema=1\ncommand=repcheck\nexit=1\n", 0) == 0);
}

TEST_CASE("command exit codes") {
  const CommandOptions none;
  CHECK(run_command("pathcat", fixture("square.pps"), none).exit_code == kRefuted);
  CHECK(run_command("pathcat", fixture("square_free.pps"), none).exit_code == kPass);
  CHECK(run_command("pathcat", fixture("single_loop.pps"), none).exit_code == kPass);
  CHECK(run_command("validate", fixture("square.pps"), none).exit_code == kPass);
  CHECK(run_command("ideals", fixture("square.pps"), none).exit_code == kPass);
  CHECK(run_command("fell", fixture("cc_bimodule.pps"), none).exit_code == kRefuted);
  CHECK(run_command("jmax", fixture("square.pps"), none).exit_code == kRefuted);
  CHECK(run_command("jmax", fixture("single_loop.pps"), none).exit_code == kPass);

  CommandOptions h;
  h.horizon = 8;
  const Report k = run_command("katsura", fixture("single_loop.pps"), h);
  CHECK(k.exit_code == kPass);
  CHECK(get(k, "katsura") == "v");
  CHECK(get(k, "ck.v") == "verified");
  CHECK(run_command("ck", fixture("square_free.pps"), h).exit_code == kPass);
  CHECK(run_command("ck", fixture("square.pps"), h).exit_code == kInputError);  // horizon > cap

  CommandOptions d;
  d.degree = 4;
  const Report f = run_command("fell", fixture("single_loop.pps"), d);
  CHECK(f.exit_code == kPass);
}

TEST_CASE("input errors become exit code 2") {
  CommandOptions o;
  o.trunc = 99;
  const Report r = run_command("repcheck", fixture("square.pps"), o);
  CHECK(r.exit_code == kInputError);
  CHECK(get(r, "error") == "CapExceeded");
  CHECK(run_command("nope", fixture("square.pps"), {}).exit_code == kInputError);

  CommandOptions m;
  m.lhs = "v1|zz";
  m.rhs = "a·b|v0";
  CHECK(run_command("mult", fixture("square_free.pps"), m).exit_code == kInputError);
  m.element = "";
  CHECK(run_command("fock", fixture("square.pps"), m).exit_code == kInputError);
}

TEST_CASE("mult agrees with its Fock check") {
  CommandOptions m;
  m.lhs = "v1|a";
  m.rhs = "a·b|v0";
  const Report r = run_command("mult", fixture("square_free.pps"), m);
  CHECK(r.exit_code == kPass);
  CHECK(r.render_text().find("T[b,v0]") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CommandOptions o;
  o.trunc = 4;
  for (const std::string& cmd : command_names()) {
    for (const char* file : {"square.pps", "single_loop.pps"}) {
      const Report a = run_command(cmd, fixture(file), o);
      const Report b = run_command(cmd, fixture(file), o);
      CHECK(a.render_text() == b.render_text());
      CHECK(a.render_machine() == b.render_machine());
    }
  }
}
