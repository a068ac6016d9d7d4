#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace fplab::cli {

enum class Status { ok, failed, error, inconclusive };

/// Outcome of one invocation. Serialized as
/// {"command", "inputs", "result", "elapsed_ms", "status"}.
struct CliReport {
  std::string command;
  std::vector<std::string> inputs;
  nlohmann::json result;
  std::int64_t elapsed_ms = 0;
  Status status = Status::ok;
  std::string message;
  bool json_output = false;
  bool help = false;  ///< help text was requested; `message` holds it

  /// 0 ok, 1 check failed, 2 error, 3 inconclusive
  int exit_code() const;
};

const std::vector<std::string>& subcommands();

/// Runs one command line (without the program name). Never throws.
CliReport dispatch(const std::vector<std::string>& args);

nlohmann::json to_json(const CliReport& report);
std::string render_json(const CliReport& report);
std::string render_text(const CliReport& report);

/// dispatch + render to `out`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace fplab::cli
