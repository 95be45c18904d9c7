#pragma once

// Surface syntax of the expression language.
//
//   expr := "{}" | "{" item ("," item)* "}" | "*" expr | nat | ident | "null"
//         | "inf(" expr ")" | "semi(" expr ";" expr ")"
//         | "quasi(" "[" expr ("," expr)* "]" ";" expr [";" nat] ")"
//   item := expr | "*" expr
//
// Naturals denote von Neumann numerals.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hyperset/error.hpp"

namespace hyperset::cli {

struct Expr {
  enum class Kind { Empty, Brace, Unpack, Numeral, Var, Inf, Semi, Quasi, Null };

  Kind kind = Kind::Empty;
  /// Brace: items. Unpack/Inf: operand. Semi: {G, G0}. Quasi: G_1..G_l, G0.
  std::vector<Expr> children;
  /// Numeral value, or the quasi phase.
  std::size_t number = 0;
  std::string name;

  bool operator==(const Expr&) const = default;
};

std::string render(const Expr& e);

struct Command {
  enum class Kind { Empty, Let, Query, Audit, Export, Load, Help, Assert };

  Kind kind = Kind::Empty;
  /// Let: variable; Query: operation; Audit: "ezf" or "russell"; Export: format.
  std::string name;
  std::vector<Expr> args;
  /// Load: file path. Assert: expected rendering.
  std::string text;
  /// Assert: the command whose output is compared.
  std::shared_ptr<Command> inner;
};

/// Syntax error with 1-based line/column and the tokens that would have been accepted.
class SyntaxError : public ParseError {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column, std::vector<std::string> expected);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  /// "line:column: message (expected one of: ...)".
  const char* what() const noexcept override { return text_.c_str(); }

 private:
  std::string text_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Query operations and their fixed argument counts (-1: variadic).
struct OperationInfo {
  std::string_view name;
  int min_args;
  int max_args;
  std::string_view usage;
};

const std::vector<OperationInfo>& operations();

Command parse(std::string_view text, std::size_t line = 1);
Expr parse_expr(std::string_view text);

}  // namespace hyperset::cli
