#pragma once

// Evaluation of parsed commands against a single environment.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "cli/parser.hpp"
#include "hyperset/error.hpp"
#include "hyperset/functors.hpp"
#include "hyperset/set_system.hpp"

namespace hyperset::cli {

/// Evaluation failure, with the offending command in the message.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// An `assert` line whose command rendered something else.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

struct SessionOptions {
  SystemOptions system;
  FunctorConfig functors;
};

struct EvalResult {
  std::string text;
  /// The set the command produced or inspected, when there is one.
  std::optional<NodeId> node;
};

class Session {
 public:
  explicit Session(SessionOptions options = {});

  /// Runs one command. Library errors come back as EvalError.
  EvalResult execute(const Command& cmd);
  EvalResult execute(std::string_view line, std::size_t line_no = 1);

  NodeId eval(const Expr& e);

  SetSystem& system() { return sys_; }
  const SetSystem& system() const { return sys_; }
  const std::map<std::string, NodeId, std::less<>>& env() const { return env_; }
  const SessionOptions& options() const { return options_; }

 private:
  EvalResult query(const Command& cmd);
  EvalResult audit(const Command& cmd);
  EvalResult load(const std::string& path);
  EvalResult check(const Command& cmd);
  std::size_t natural_arg(const Expr& e);
  std::string show(NodeId n);

  SessionOptions options_;
  SetSystem sys_;
  std::map<std::string, NodeId, std::less<>> env_;
  std::size_t load_depth_ = 0;
};

/// Machine-readable envelope {command, result, ranks, classification}.
std::string json_envelope(const Session& session, std::string_view command, const EvalResult& result);

struct BatchReport {
  /// 0 success, 1 assertion failure, 2 parse or evaluation error.
  int exit_code = 0;
  /// 1-based line of the failure, 0 on success.
  std::size_t line = 0;
  std::string message;
};

/// Executes `in` line by line, writing each result to `out` (as JSON
/// envelopes when `json` is set). Stops at the first failure.
BatchReport run_batch(Session& session, std::istream& in, std::ostream& out, bool json = false);

}  // namespace hyperset::cli
