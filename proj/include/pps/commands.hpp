#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pps/spec_file.hpp"

namespace pps {

struct CommandOptions {
  std::optional<std::size_t> trunc;    // repcheck, fock, mult (default: cap)
  std::optional<std::size_t> horizon;  // katsura, ck (default: cap)
  std::optional<std::size_t> degree;   // fell (default: cap)
  std::string element;                 // fock
  std::string lhs;                     // mult, "alpha|beta"
  std::string rhs;                     // mult
};

enum ExitCode : int { kPass = 0, kRefuted = 1, kInputError = 2 };

/// Result of one command.  `text` is the human-readable report; `fields` is
/// the flat key=value form printed by --machine.
struct Report {
  std::string command;
  int exit_code = kPass;
  std::vector<std::string> text;
  std::vector<std::pair<std::string, std::string>> fields;

  void line(std::string s) { text.push_back(std::move(s)); }
  void field(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

  [[nodiscard]] std::string render_text() const;
  /// "schema=1", "command=…", "exit=…", then the fields in insertion order.
  [[nodiscard]] std::string render_machine() const;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "pathcat", "repcheck", "fock",  "mult",
                                              "ideals",   "katsura", "ck",       "fell",  "jmax"};
  return names;
}

/// Runs one subcommand.  Library errors become exit code 2 with an `error` field.
Report run_command(const std::string& command, const SpecFile& spec, const CommandOptions& options);

}  // namespace pps
