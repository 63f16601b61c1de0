#include "wgeom/expr.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

#include "wgeom/quadrature.hpp"

namespace wgeom {

namespace {

bool finite(const Dual2& x) {
  return std::isfinite(x.v) && std::isfinite(x.d1) && std::isfinite(x.d2);
}

Dual2 chain(const Dual2& u, double f, double fp, double fpp) {
  return {f, fp * u.d1, fpp * u.d1 * u.d1 + fp * u.d2};
}

}  // namespace

Dual2 operator+(const Dual2& a, const Dual2& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

Dual2 operator-(const Dual2& a, const Dual2& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

Dual2 operator-(const Dual2& a) { return {-a.v, -a.d1, -a.d2}; }

Dual2 operator*(const Dual2& a, const Dual2& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

Dual2 operator/(const Dual2& a, const Dual2& b) {
  if (b.v == 0.0) throw EvalError("division by zero");
  const double v = a.v / b.v;
  const double d1 = (a.d1 - v * b.d1) / b.v;
  const double d2 = (a.d2 - 2.0 * d1 * b.d1 - v * b.d2) / b.v;
  return {v, d1, d2};
}

Dual2 pow(const Dual2& a, const Dual2& b, bool exponent_is_const) {
  if (exponent_is_const) {
    const double p = b.v;
    if (p == std::floor(p) && std::abs(p) <= 64.0) {
      // Integer powers by repeated multiplication; valid for any base,
      // including a.v <= 0.
      long n = static_cast<long>(p);
      if (n == 0) return {1.0, 0.0, 0.0};
      const bool inv = n < 0;
      n = std::labs(n);
      Dual2 acc{1.0, 0.0, 0.0};
      Dual2 base = a;
      while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
      }
      if (inv) return Dual2{1.0, 0.0, 0.0} / acc;
      return acc;
    }
    if (a.v <= 0.0) throw EvalError("non-integer power of a non-positive base");
    const double f = std::pow(a.v, p);
    const double fp = p * std::pow(a.v, p - 1.0);
    const double fpp = p * (p - 1.0) * std::pow(a.v, p - 2.0);
    return chain(a, f, fp, fpp);
  }
  if (a.v <= 0.0) throw EvalError("power of a non-positive base");
  // a^b = exp(b * log a)
  const Dual2 la = chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
  const Dual2 e = b * la;
  const double ev = std::exp(e.v);
  return chain(e, ev, ev, ev);
}

// ---------------------------------------------------------------------------
// Expression tree

struct Node {
  enum class Kind { Const, Var, Binary, Call, Antiderivative };
  Kind kind;
  double value = 0.0;  // Const
  char op = 0;         // Binary
  std::string fn;      // Call
  NodePtr lhs, rhs;    // Binary: both; Call/Antiderivative: lhs
  double anchor = 0.0; // Antiderivative

  // Lazily extended integral checkpoints at integer radii (Antiderivative).
  mutable std::map<long, double> checkpoints;
  mutable std::mutex mutex;
};

NodePtr make_const(double value) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->value = value;
  return n;
}

NodePtr make_var() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Var;
  return n;
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Binary;
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_call(const std::string& fn, NodePtr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Call;
  n->fn = fn;
  n->lhs = std::move(arg);
  return n;
}

NodePtr make_antiderivative(NodePtr integrand, double anchor) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Antiderivative;
  n->lhs = std::move(integrand);
  n->anchor = anchor;
  return n;
}

namespace {

Dual2 eval_call(const std::string& fn, const Dual2& u) {
  if (fn == "sin") return chain(u, std::sin(u.v), std::cos(u.v), -std::sin(u.v));
  if (fn == "cos") return chain(u, std::cos(u.v), -std::sin(u.v), -std::cos(u.v));
  if (fn == "sinh") return chain(u, std::sinh(u.v), std::cosh(u.v), std::sinh(u.v));
  if (fn == "cosh") return chain(u, std::cosh(u.v), std::sinh(u.v), std::cosh(u.v));
  if (fn == "exp") {
    const double e = std::exp(u.v);
    return chain(u, e, e, e);
  }
  if (fn == "log") {
    if (u.v <= 0.0) throw EvalError("log of a non-positive value");
    return chain(u, std::log(u.v), 1.0 / u.v, -1.0 / (u.v * u.v));
  }
  if (fn == "sqrt") {
    if (u.v < 0.0) throw EvalError("sqrt of a negative value");
    if (u.v == 0.0) throw EvalError("sqrt derivative singular at zero");
    const double s = std::sqrt(u.v);
    return chain(u, s, 0.5 / s, -0.25 / (s * u.v));
  }
  throw EvalError("unknown function: " + fn);
}

double antiderivative_value(const Node& n, double r) {
  // Integral of the child from n.anchor to r, with cached checkpoints so
  // nested quadrature stays cheap and the error does not chain. Checkpoints
  // sit at integer radii near the anchor and grow geometrically farther out,
  // keeping far evaluations (compactified tails) at O(log r) steps.
  auto child = [&n](double t) { return eval_jet(n.lhs, t).v; };
  auto step_from = [](long k) {
    const long mag = std::labs(k);
    return mag < 16 ? 1L : mag / 16;
  };
  std::lock_guard<std::mutex> lock(n.mutex);
  const long anchor_key = static_cast<long>(std::floor(n.anchor));
  if (n.checkpoints.empty()) {
    n.checkpoints[anchor_key] =
        integrate(child, n.anchor, static_cast<double>(anchor_key), 1e-13);
  }
  // Past the cap a single direct quadrature from the last checkpoint is
  // used instead of extending the ladder (keys would overflow long).
  constexpr double kLadderCap = 1e15;
  long hi = n.checkpoints.rbegin()->first;
  while (static_cast<double>(hi) < std::min(r, kLadderCap)) {
    const long next = hi + step_from(hi);
    const double prev = n.checkpoints[hi];
    n.checkpoints[next] =
        prev + integrate(child, static_cast<double>(hi),
                         static_cast<double>(next),
                         1e-13 * std::max(1.0, std::abs(prev)));
    hi = next;
  }
  long lo = n.checkpoints.begin()->first;
  while (static_cast<double>(lo) > r) {
    const long next = lo - step_from(lo);
    const double prev = n.checkpoints[lo];
    n.checkpoints[next] =
        prev + integrate(child, static_cast<double>(lo),
                         static_cast<double>(next),
                         1e-13 * std::max(1.0, std::abs(prev)));
    lo = next;
  }
  // Nearest checkpoint at or below r.
  auto it = n.checkpoints.upper_bound(static_cast<long>(std::floor(r)));
  if (it != n.checkpoints.begin()) --it;
  const double base = it->second;
  return base + integrate(child, static_cast<double>(it->first), r,
                          1e-13 * std::max(1.0, std::abs(base)));
}

}  // namespace

Dual2 eval_jet(const NodePtr& n, double r) {
  if (!n) throw EvalError("empty expression");
  switch (n->kind) {
    case Node::Kind::Const:
      return {n->value, 0.0, 0.0};
    case Node::Kind::Var:
      return {r, 1.0, 0.0};
    case Node::Kind::Binary: {
      const Dual2 a = eval_jet(n->lhs, r);
      const Dual2 b = eval_jet(n->rhs, r);
      Dual2 out;
      switch (n->op) {
        case '+': out = a + b; break;
        case '-': out = a - b; break;
        case '*': out = a * b; break;
        case '/': out = a / b; break;
        case '^': out = pow(a, b, n->rhs->kind == Node::Kind::Const); break;
        default: throw EvalError("unknown operator");
      }
      if (!finite(out)) throw EvalError("non-finite value at r=" + std::to_string(r));
      return out;
    }
    case Node::Kind::Call: {
      const Dual2 out = eval_call(n->fn, eval_jet(n->lhs, r));
      if (!finite(out)) throw EvalError("non-finite value at r=" + std::to_string(r));
      return out;
    }
    case Node::Kind::Antiderivative: {
      const Dual2 th = eval_jet(n->lhs, r);
      return {antiderivative_value(*n, r), th.v, th.d1};
    }
  }
  throw EvalError("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  NodePtr expr() {
    skip_ws();
    NodePtr lhs;
    if (peek() == '-') {
      ++pos_;
      lhs = make_binary('-', make_const(0.0), term());
    } else {
      lhs = term();
    }
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      ++pos_;
      lhs = make_binary(c, lhs, term());
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return lhs;
      ++pos_;
      lhs = make_binary(c, lhs, factor());
    }
  }

  NodePtr factor() {
    NodePtr b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return make_binary('^', b, factor());
    }
    return b;
  }

  NodePtr base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string id;
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_])))
        id += text_[pos_++];
      if (id == "r") return make_var();
      static const char* kFuncs[] = {"sin", "cos", "sinh", "cosh",
                                     "exp", "log", "sqrt"};
      for (const char* f : kFuncs) {
        if (id == f) {
          expect('(');
          NodePtr arg = expr();
          expect(')');
          return make_call(id, arg);
        }
      }
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    throw ParseError("expected a number, 'r', a function or '('", pos_);
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
      }
    }
    try {
      return make_const(std::stod(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      throw ParseError("malformed number", start);
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

int precedence(char op) {
  switch (op) {
    case '+': case '-': return 1;
    case '*': case '/': return 2;
    case '^': return 3;
  }
  return 0;
}

void print(const NodePtr& n, std::ostringstream& out, int parent_prec) {
  switch (n->kind) {
    case Node::Kind::Const: {
      std::ostringstream num;
      num.precision(17);
      num << n->value;
      const std::string s = num.str();
      if (n->value < 0.0) out << "(0" << s << ")";
      else out << s;
      return;
    }
    case Node::Kind::Var:
      out << "r";
      return;
    case Node::Kind::Binary: {
      const int prec = precedence(n->op);
      const bool need_paren = prec < parent_prec;
      const int lhs_prec = prec + (n->op == '^' ? 1 : 0);
      const int rhs_prec = prec + (n->op == '^' ? 0 : 1);
      if (need_paren) out << "(";
      print(n->lhs, out, lhs_prec);
      out << n->op;
      print(n->rhs, out, rhs_prec);
      if (need_paren) out << ")";
      return;
    }
    case Node::Kind::Call:
      out << n->fn << "(";
      print(n->lhs, out, 0);
      out << ")";
      return;
    case Node::Kind::Antiderivative:
      out << "<integral from " << n->anchor << " of ";
      print(n->lhs, out, 0);
      out << ">";
      return;
  }
}

}  // namespace

NodePtr parse_expression(const std::string& text) { return Parser(text).run(); }

std::string to_string(const NodePtr& n) {
  std::ostringstream out;
  print(n, out, 0);
  return out.str();
}

}  // namespace wgeom
