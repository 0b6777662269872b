#include "paperhorn/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace paperhorn {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(fmt::format("parse error at position {}: {}", position, message)),
      position_(position),
      message_(message) {}

struct Expression::Node {
  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

Expression Expression::number(double v) {
  return Expression(std::make_shared<const Node>(Node{Op::Number, v, nullptr, nullptr}));
}

Expression Expression::variable() {
  return Expression(std::make_shared<const Node>(Node{Op::Variable, 0.0, nullptr, nullptr}));
}

Expression Expression::unary(Op op, Expression arg) {
  return Expression(std::make_shared<const Node>(Node{op, 0.0, std::move(arg.root_), nullptr}));
}

Expression Expression::binary(Op op, Expression lhs, Expression rhs) {
  return Expression(
      std::make_shared<const Node>(Node{op, 0.0, std::move(lhs.root_), std::move(rhs.root_)}));
}

namespace {

using Op = Expression::Op;

template <typename NodeT>
double eval(const NodeT& n, double x) {
  switch (n.op) {
    case Op::Number: return n.value;
    case Op::Variable: return x;
    case Op::Negate: return -eval(*n.lhs, x);
    case Op::Add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Op::Sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Op::Mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Op::Div: return eval(*n.lhs, x) / eval(*n.rhs, x);
    case Op::Pow: return std::pow(eval(*n.lhs, x), eval(*n.rhs, x));
    case Op::Sqrt: return std::sqrt(eval(*n.lhs, x));
    case Op::Exp: return std::exp(eval(*n.lhs, x));
    case Op::Ln: return std::log(eval(*n.lhs, x));
    case Op::Sin: return std::sin(eval(*n.lhs, x));
    case Op::Cos: return std::cos(eval(*n.lhs, x));
  }
  return std::nan("");
}

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Pow: return "^";
    default: return nullptr;
  }
}

const char* function_name(Op op) {
  switch (op) {
    case Op::Sqrt: return "sqrt";
    case Op::Exp: return "exp";
    case Op::Ln: return "ln";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    default: return nullptr;
  }
}

template <typename NodeT>
void print(const NodeT& n, std::string& out) {
  switch (n.op) {
    case Op::Number:
      if (std::signbit(n.value))
        out += fmt::format("(-{:.17g})", -n.value);
      else
        out += fmt::format("{:.17g}", n.value);
      return;
    case Op::Variable: out += 'x'; return;
    case Op::Negate:
      out += "(-";
      print(*n.lhs, out);
      out += ')';
      return;
    default: break;
  }
  if (const char* fn = function_name(n.op)) {
    out += fn;
    out += '(';
    print(*n.lhs, out);
    out += ')';
    return;
  }
  out += '(';
  print(*n.lhs, out);
  out += binary_symbol(n.op);
  print(*n.rhs, out);
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = expr();
    skip_space();
    if (pos_ < text_.size()) fail(fmt::format("unexpected '{}'", text_[pos_]));
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(fmt::format("expected '{}' but input ended", c));
      fail(fmt::format("expected '{}'", c));
    }
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = Expression::binary(Op::Add, lhs, term());
      else if (accept('-'))
        lhs = Expression::binary(Op::Sub, lhs, term());
      else
        return lhs;
    }
  }

  Expression term() {
    Expression lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = Expression::binary(Op::Mul, lhs, unary());
      else if (accept('/'))
        lhs = Expression::binary(Op::Div, lhs, unary());
      else
        return lhs;
    }
  }

  Expression unary() {
    if (accept('-')) return Expression::unary(Op::Negate, unary());
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (accept('^')) return Expression::binary(Op::Pow, base, unary());
    return base;
  }

  Expression primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a number, 'x', a function or '(' but input ended");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(fmt::format("unexpected '{}', expected a number, 'x', a function or '('", c));
  }

  Expression number() {
    std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits();
      else
        pos_ = mark;  // not an exponent after all
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return Expression::number(v);
  }

  Expression identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expression::variable();

    Op op;
    if (name == "sqrt")
      op = Op::Sqrt;
    else if (name == "exp")
      op = Op::Exp;
    else if (name == "ln")
      op = Op::Ln;
    else if (name == "sin")
      op = Op::Sin;
    else if (name == "cos")
      op = Op::Cos;
    else {
      pos_ = start;
      fail(fmt::format("unknown name '{}'", name));
    }
    expect('(');
    Expression arg = expr();
    expect(')');
    return Expression::unary(op, arg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double Expression::operator()(double x) const { return eval(*root_, x); }

std::string Expression::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace paperhorn
