#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nonvanish/json_io.hpp"

namespace nonvanish::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIntegrity = 3,
  kResource = 4,
};

struct CommandResult {
  std::string command;
  nlohmann::json payload;
  std::string text;
  int exit_code = kOk;
};

CommandResult cmd_bounds(const PointSet& xs);
CommandResult cmd_construct(const PointSet& xs, bool with_trace, bool verify);
CommandResult cmd_replay(const PointSet& xs, const std::vector<TraceStep>& steps);
CommandResult cmd_exact(const PointSet& xs, std::optional<unsigned> max_degree, const ScanOptions& options);
CommandResult cmd_lang(const FieldPtr& field, unsigned n);
CommandResult cmd_extremal(const FieldPtr& field, unsigned n, unsigned d);
CommandResult cmd_verify_warning(const FieldPtr& field, unsigned n, unsigned d, const ScanOptions& options);
CommandResult cmd_enumerate(const FieldPtr& field, unsigned n);
CommandResult cmd_check(const PointSet& xs, const Form& f);

// "(0:0:1:1)"
std::string point_text(const ProjPoint& p);

// Parses argv (without the program name), runs one subcommand, and writes
// JSON (with --json) or text to `out` and diagnostics to `err`. Returns the
// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonvanish::cli
