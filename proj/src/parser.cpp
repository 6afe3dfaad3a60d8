#include "fourierlab/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <memory>
#include <string>

#include "fourierlab/errors.hpp"

namespace fourierlab {
namespace {

enum class Op { number, pi, n, x, neg, add, sub, mul, div, pow, sin, cos };

struct Node {
  Op op;
  std::size_t pos;
  Rational value;
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Op op, std::size_t pos, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto node = std::make_unique<Node>();
  node->op = op;
  node->pos = pos;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

// expression := term (('+' | '-') term)*
// term       := unary (('*' | '/') unary)*
// unary      := '-' unary | power
// power      := primary ('^' unary)?
// primary    := number | 'pi' | 'n' | 'x' | ('sin' | 'cos') '(' expression ')' | '(' expression ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr e = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", "operator or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
    throw ParseError(message, pos_, expected);
  }

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

  NodePtr expression() {
    NodePtr e = term();
    for (;;) {
      const std::size_t at = pos_;
      if (accept('+')) {
        e = make(Op::add, at, std::move(e), term());
      } else if (accept('-')) {
        e = make(Op::sub, at, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        e = make(Op::mul, at, std::move(e), unary());
      } else if (accept('/')) {
        e = make(Op::div, at, std::move(e), unary());
      } else if (starts_primary()) {
        // Implicit multiplication: "2pi", "3n", "pi x".
        e = make(Op::mul, at, std::move(e), unary());
      } else {
        return e;
      }
    }
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  NodePtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) return make(Op::neg, at, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip_space();
    const std::size_t at = pos_;
    if (accept('^')) return make(Op::pow, at, std::move(base), unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input", "number, pi, n, x, sin, cos or '('");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      NodePtr e = expression();
      if (!accept(')')) fail("unbalanced parenthesis", "')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "sin" || word == "cos") {
        pos_ = end;
        if (!accept('(')) fail("missing argument list", "'('");
        NodePtr arg = expression();
        if (!accept(')')) fail("unbalanced parenthesis", "')'");
        return make(word == "sin" ? Op::sin : Op::cos, at, std::move(arg));
      }
      // Run-together names such as "nx" or "npi" read as products.
      if (word.starts_with("pi")) {
        pos_ += 2;
        return make(Op::pi, at);
      }
      if (word.front() == 'n' || word.front() == 'x') {
        pos_ += 1;
        return make(word.front() == 'n' ? Op::n : Op::x, at);
      }
      fail("unknown name '" + std::string(word) + "'", "pi, n, x, sin or cos");
    }
    fail("unexpected '" + std::string(1, c) + "'", "number, pi, n, x, sin, cos or '('");
  }

  NodePtr number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    bool digits = false;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
      ++end;
      digits = true;
    }
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
        digits = true;
      }
    }
    if (!digits) fail("malformed number", "digit");
    NodePtr node = make(Op::number, at);
    node->value = parse_rational(text_.substr(pos_, end - pos_));
    pos_ = end;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Polynomial in n and x with coefficients in Q[pi]; used for constants and
// trigonometric arguments.
using Monomial = std::pair<int, int>;  // (degree in n, degree in x)
using Poly2 = std::map<Monomial, PiPoly>;

void trim(Poly2& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
}

Poly2 add(Poly2 a, const Poly2& b, int sign) {
  for (const auto& [m, c] : b) a[m] += sign > 0 ? c : -c;
  trim(a);
  return a;
}

Poly2 multiply(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) out[{ma.first + mb.first, ma.second + mb.second}] += ca * cb;
  trim(out);
  return out;
}

bool is_rational_constant(const Poly2& p) {
  return p.empty() || (p.size() == 1 && p.begin()->first == Monomial{0, 0} && p.begin()->second.is_constant());
}

Rational constant_value(const Poly2& p) { return p.empty() ? Rational(0) : p.begin()->second.coeff(0); }

long small_integer(const Poly2& p, std::size_t pos, const char* what) {
  const Rational v = constant_value(p);
  if (!is_rational_constant(p) || v.get_den() != 1 || abs(v) > 64) {
    throw ParseError(std::string(what) + " must be a small integer", pos, "integer");
  }
  return v.get_num().get_si();
}

Poly2 to_poly2(const Node& node) {
  switch (node.op) {
    case Op::number:
      return node.value == 0 ? Poly2{} : Poly2{{{0, 0}, PiPoly(node.value)}};
    case Op::pi:
      return {{{0, 0}, PiPoly::pi()}};
    case Op::n:
      return {{{1, 0}, PiPoly(1)}};
    case Op::x:
      return {{{0, 1}, PiPoly(1)}};
    case Op::neg:
      return add({}, to_poly2(*node.lhs), -1);
    case Op::add:
      return add(to_poly2(*node.lhs), to_poly2(*node.rhs), 1);
    case Op::sub:
      return add(to_poly2(*node.lhs), to_poly2(*node.rhs), -1);
    case Op::mul:
      return multiply(to_poly2(*node.lhs), to_poly2(*node.rhs));
    case Op::div: {
      const Poly2 d = to_poly2(*node.rhs);
      if (!is_rational_constant(d) || d.empty()) {
        throw ParseError("can only divide by a nonzero rational here", node.pos, "rational divisor");
      }
      Poly2 out = to_poly2(*node.lhs);
      for (auto& [m, c] : out) c *= Rational(1) / constant_value(d);
      return out;
    }
    case Op::pow: {
      const long k = small_integer(to_poly2(*node.rhs), node.rhs->pos, "exponent");
      if (k < 0) throw ParseError("negative exponent is not allowed here", node.rhs->pos, "nonnegative integer");
      const Poly2 base = to_poly2(*node.lhs);
      Poly2 out{{{0, 0}, PiPoly(1)}};
      for (long i = 0; i < k; ++i) out = multiply(out, base);
      return out;
    }
    case Op::sin:
    case Op::cos:
      throw ParseError("sin and cos are not allowed here", node.pos, "polynomial in pi");
  }
  throw ParseError("unsupported expression", node.pos, "");
}

AngleExpr trig_argument(const Node& arg) {
  const Poly2 p = to_poly2(arg);
  AngleExpr out{Angle(), Rational(0)};
  for (const auto& [m, c] : p) {
    if (m == Monomial{1, 0} && c.degree() <= 1) {
      out.base = Angle(c.coeff(0), c.coeff(1));
    } else if (m == Monomial{1, 1} && c.is_constant()) {
      out.x_coef = c.coeff(0);
    } else {
      throw ParseError("argument must have the form n*(r + s*pi + t*x)", arg.pos, "n times an angle");
    }
  }
  return out;
}

// (-1)^(n+k) as (-1)^k * cos(pi*n).
std::optional<ProductExpression> sign_power(const Node& node) {
  Poly2 base, e;
  try {
    base = to_poly2(*node.lhs);
    e = to_poly2(*node.rhs);
  } catch (const ParseError&) {
    return std::nullopt;
  }
  if (!(is_rational_constant(base) && constant_value(base) == -1)) return std::nullopt;
  auto it = e.find({1, 0});
  if (it == e.end() || !(it->second == PiPoly(1))) return std::nullopt;
  e.erase(it);
  const long k = small_integer(e, node.rhs->pos, "offset in (-1)^(n+k)");
  return PiPoly(k % 2 == 0 ? 1 : -1) * trig_factor(TrigKind::cos, AngleExpr{Angle::pi_times(1), 0});
}

ProductExpression negate(const ProductExpression& e) { return PiPoly(-1) * e; }

ProductExpression to_series(const Node& node) {
  switch (node.op) {
    case Op::number:
      return scalar(PiPoly(node.value));
    case Op::pi:
      return scalar(PiPoly::pi());
    case Op::n:
      return inverse_n_power(-1);
    case Op::x:
      throw ParseError("x may only appear inside sin or cos", node.pos, "sin(...) or cos(...)");
    case Op::neg:
      return negate(to_series(*node.lhs));
    case Op::add:
      return to_series(*node.lhs) + to_series(*node.rhs);
    case Op::sub:
      return to_series(*node.lhs) + negate(to_series(*node.rhs));
    case Op::mul:
      return to_series(*node.lhs) * to_series(*node.rhs);
    case Op::div: {
      const ProductExpression d = to_series(*node.rhs);
      if (d.terms.size() != 1 || !d.terms[0].factors.empty() || !d.terms[0].c.is_constant() ||
          d.terms[0].c.is_zero()) {
        throw ParseError("divisor must be a nonzero rational times a power of n", node.rhs->pos,
                         "rational times n^k");
      }
      const ProductTerm& t = d.terms[0];
      return PiPoly(Rational(1 / t.c.coeff(0))) * to_series(*node.lhs) * inverse_n_power(-t.p);
    }
    case Op::pow: {
      if (auto s = sign_power(node)) return *s;
      const long k = small_integer(to_poly2(*node.rhs), node.rhs->pos, "exponent");
      const ProductExpression base = to_series(*node.lhs);
      if (k >= 0) return base.pow(static_cast<unsigned>(k));
      if (base.terms.size() == 1 && base.terms[0].factors.empty() && base.terms[0].c == PiPoly(1)) {
        return inverse_n_power(static_cast<int>(k * base.terms[0].p));
      }
      throw ParseError("negative exponents apply only to n", node.rhs->pos, "nonnegative integer");
    }
    case Op::sin:
    case Op::cos:
      return trig_factor(node.op == Op::sin ? TrigKind::sin : TrigKind::cos, trig_argument(*node.lhs));
  }
  throw ParseError("unsupported expression", node.pos, "");
}

Poly2 constant_poly(std::string_view text) {
  NodePtr root = Parser(text).parse();
  Poly2 p = to_poly2(*root);
  for (const auto& [m, c] : p) {
    if (m != Monomial{0, 0}) throw ParseError("n and x are not allowed in a constant", 0, "constant");
  }
  return p;
}

}  // namespace

ProductExpression parse_series(std::string_view text) {
  NodePtr root = Parser(text).parse();
  return to_series(*root);
}

PiPoly parse_pipoly(std::string_view text) {
  const Poly2 p = constant_poly(text);
  return p.empty() ? PiPoly() : p.begin()->second;
}

Angle parse_angle(std::string_view text) {
  const PiPoly p = parse_pipoly(text);
  if (p.degree() > 1) throw ParseError("an angle must be r + s*pi", 0, "r + s*pi");
  return Angle(p.coeff(0), p.coeff(1));
}

}  // namespace fourierlab
