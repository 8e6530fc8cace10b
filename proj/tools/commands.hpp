#pragma once

// The bqec subcommands as plain functions, so tests can drive them without
// a process boundary. Each returns a payload and a status; main.cpp only
// parses flags and prints.

#include "bqec/json_io.hpp"

#include <functional>
#include <optional>
#include <string>

namespace bqec::cli {

struct CommandResult {
  bool ok = true;
  /// "ok", or an error tag: "failed" (a check did not hold), "usage",
  /// "parse", "domain", "degenerate", "internal".
  std::string code = "ok";
  Json payload;
};

/// Process exit status for a result: 0 ok, 1 failed check, 2 usage or
/// parse error, 3 domain or degenerate input, 4 anything else.
int exit_code(const CommandResult& r);

/// Runs `body`, turning library exceptions into error results carrying
/// {"error": {"code", "message"}}.
CommandResult guarded(const std::string& command, const std::function<CommandResult()>& body);

CommandResult error_result(const std::string& command, const std::string& code,
                           const std::string& message);

/// Empty `mutate`: the plain suite. Otherwise the named identity is
/// perturbed and must fail.
CommandResult cmd_verify_identities(const std::optional<std::string>& mutate = std::nullopt);

/// Descent search bound used by the theorem commands.
inline constexpr unsigned long kTheoremDescentBound = 10;

CommandResult cmd_theorem1(const std::string& m, const std::string& n,
                           unsigned long bound = kTheoremDescentBound);
CommandResult cmd_theorem2(const std::string& u, unsigned long bound = kTheoremDescentBound);

CommandResult cmd_search(std::uint64_t limit);

CommandResult cmd_descent(const std::string& N, unsigned long bound,
                          const std::optional<std::string>& points_file = std::nullopt);

/// Exactly one of `point` ("(x,y)") and `points_file` is set.
CommandResult cmd_height(const std::string& b, const std::string& a2,
                         const std::optional<std::string>& point,
                         const std::optional<std::string>& points_file);

CommandResult cmd_tables(const std::optional<std::string>& file = std::nullopt);

} // namespace bqec::cli
