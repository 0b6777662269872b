#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paperhorn {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// An immutable arithmetic expression in one variable x.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'x' | func '(' expr ')' | '(' expr ')'
///   func    := sqrt | exp | ln | sin | cos
///
/// '^' binds tighter than unary minus and associates to the right, so
/// -x^2 is -(x^2) and 2^3^2 is 2^(3^2).
class Expression {
 public:
  enum class Op { Number, Variable, Negate, Add, Sub, Mul, Div, Pow, Sqrt, Exp, Ln, Sin, Cos };

  static Expression number(double v);
  static Expression variable();
  static Expression unary(Op op, Expression arg);
  static Expression binary(Op op, Expression lhs, Expression rhs);

  double operator()(double x) const;

  /// Fully parenthesised text that parses back to the same tree.
  std::string to_string() const;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

Expression parse_expression(std::string_view text);

}  // namespace paperhorn
