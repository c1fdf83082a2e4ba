#pragma once

// Arithmetic expression language for coefficient functions a0..a2 (variable
// xi) and right-hand sides g (variables xi, z, zp).  The grammar is
// documented in docs/expression-grammar.md:
//
//   expr    := term (("+" | "-") term)*
//   term    := unary (("*" | "/") unary)*
//   unary   := "-" unary | power
//   power   := primary ("^" unary)?          right-associative
//   primary := number | variable | constant | function "(" expr ")" | "(" expr ")"

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lrkm/error.hpp"
#include "lrkm/real.hpp"

namespace lrkm::expr {

enum class Variable { xi, z, zp };
enum class Constant { pi, e };
enum class Function { sin, cos, tan, exp, ln, sqrt, abs, gamma };
enum class BinaryOp { add, sub, mul, div, pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  real value;
  std::string text;  // source lexeme, reused when printing
};
struct Var {
  Variable which;
};
struct Const {
  Constant which;
};
struct Negate {
  NodePtr operand;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function fn;
  NodePtr arg;
};

struct Node {
  std::variant<Number, Var, Const, Negate, Binary, Call> data;
};

/// Syntax error at a byte offset, with the set of tokens that would have
/// been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownIdentifierError : public ParseError {
 public:
  UnknownIdentifierError(std::size_t offset, std::string identifier);

  const std::string& identifier() const { return identifier_; }

 private:
  std::string identifier_;
};

/// Domain violation or non-finite value during evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Immutable parsed expression; cheap to copy and safe to share across threads.
class Expr {
 public:
  explicit Expr(NodePtr root);

  const Node& root() const { return *root_; }

  real operator()(const real& xi, const real& z = real(0), const real& zp = real(0)) const;

  /// Fully parenthesized source that parses back to the same tree.
  std::string to_string() const;

 private:
  NodePtr root_;
};

Expr parse(std::string_view src);
real eval(const Expr& e, const real& xi, const real& z, const real& zp);
std::set<std::string> free_vars(const Expr& e);

bool operator==(const Node& a, const Node& b);
inline bool operator==(const Expr& a, const Expr& b) { return a.root() == b.root(); }

}  // namespace lrkm::expr
