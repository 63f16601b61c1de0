#pragma once

#include <memory>
#include <stdexcept>
#include <string>

namespace wgeom {

// Order-2 jet: value together with first and second derivative with
// respect to the radial coordinate.
struct Dual2 {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

Dual2 operator+(const Dual2& a, const Dual2& b);
Dual2 operator-(const Dual2& a, const Dual2& b);
Dual2 operator-(const Dual2& a);
Dual2 operator*(const Dual2& a, const Dual2& b);
Dual2 operator/(const Dual2& a, const Dual2& b);
Dual2 pow(const Dual2& a, const Dual2& b, bool exponent_is_const);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' factor)?
//   base   := number | 'r' | func '(' expr ')' | '(' expr ')'
//   func   in {sin, cos, sinh, cosh, exp, log, sqrt}
NodePtr parse_expression(const std::string& text);

std::string to_string(const NodePtr& n);

// Evaluates value and first two derivatives at r. Throws EvalError on a
// pole of the expression (division by zero, log of a non-positive value...).
Dual2 eval_jet(const NodePtr& n, double r);

// Programmatic constructors, used by the built-in profile families.
NodePtr make_const(double value);
NodePtr make_var();
NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs);
NodePtr make_call(const std::string& fn, NodePtr arg);

// Numeric antiderivative node: evaluates to the integral of `integrand`
// from `anchor` to r; its first two derivatives are exact (the integrand
// and its derivative). Not part of the text grammar.
NodePtr make_antiderivative(NodePtr integrand, double anchor);

}  // namespace wgeom
