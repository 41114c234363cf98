// Command-line front end: pps <command> <file> [flags]
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pps/commands.hpp"
#include "pps/error.hpp"
#include "pps/spec_file.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for partial product systems built from graded graphs"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "print flat key=value output (schema=1)");

  pps::CommandOptions options;
  std::string file;
  std::size_t trunc = 0, horizon = 0, degree = 0;

  struct Entry {
    std::string name;
    CLI::App* app;
  };
  std::vector<Entry> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "system file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--machine", machine, "print flat key=value output (schema=1)");
    subs.push_back({name, sub});
    return sub;
  };
  add("validate", "check the axioms and the isometry identity");
  add("pathcat", "decide the path-category property");
  add("repcheck", "check the Fock representation condition")
      ->add_option("--trunc", trunc, "truncation degree N (default: cap)");
  auto* fock = add("fock", "print a creation operator and its adjoint");
  fock->add_option("--trunc", trunc, "truncation degree N (default: cap)");
  fock->add_option("--element", options.element, "arrow name")->required();
  auto* mult = add("mult", "multiply two Toeplitz generators and compare with the Fock oracle");
  mult->add_option("--lhs", options.lhs, "first generator 'alpha|beta'")->required();
  mult->add_option("--rhs", options.rhs, "second generator 'gamma|delta'")->required();
  mult->add_option("--trunc", trunc, "truncation degree N (default: cap)");
  add("ideals", "list the invariant ideals");
  add("katsura", "Katsura ideal and Cuntz-Krieger check")
      ->add_option("--horizon", horizon, "horizon L (default: cap)");
  add("ck", "Cuntz-Krieger kernel elements per regular vertex")
      ->add_option("--horizon", horizon, "horizon L (default: cap)");
  add("fell", "Fell-bundle extendability")
      ->add_option("--degree", degree, "degree bound D (default: cap)");
  add("jmax", "J_max for global product systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : pps::kInputError;
  }

  std::string command;
  for (const Entry& e : subs) {
    if (e.app->parsed()) {
      command = e.name;
      if (auto* o = e.app->get_option_no_throw("--trunc"); o && o->count()) options.trunc = trunc;
      if (auto* o = e.app->get_option_no_throw("--horizon"); o && o->count()) options.horizon = horizon;
      if (auto* o = e.app->get_option_no_throw("--degree"); o && o->count()) options.degree = degree;
    }
  }

  std::ifstream in(file, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();

  pps::Report report;
  try {
    const pps::SpecFile spec = pps::parse_spec(buffer.str());
    report = pps::run_command(command, spec, options);
  } catch (const pps::Error& e) {
    report.command = command;
    report.exit_code = pps::kInputError;
    report.line(std::string("error: ") + e.what());
    report.field("status", "error");
    report.field("error", std::string(pps::to_string(e.kind())));
    report.field("message", e.what());
  }
  std::cout << (machine ? report.render_machine() : report.render_text());
  return report.exit_code;
}
