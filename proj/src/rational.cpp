#include "euler_horizon/rational.hpp"

#include <cctype>
#include <utility>

#include "euler_horizon/error.hpp"

namespace eh {

using poly::Int;
using poly::SparsePoly;

BivariateRational BivariateRational::normalize(const SparsePoly& num, const SparsePoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "denominator is identically zero");
  if (num.is_zero()) throw Error(ErrorCode::NormalizationError, "W is identically zero");
  const SparsePoly g = poly::gcd(num, den);
  SparsePoly p = *poly::divide_exact(num, g);
  SparsePoly q = *poly::divide_exact(den, g);

  const poly::UPoly p0 = p.y_row(0);
  const poly::UPoly q0 = q.y_row(0);
  if (p0.degree() != 0 || q0.degree() != 0)
    throw Error(ErrorCode::NormalizationError, "W(X,0) must be the constant 1");
  if (p0.leading() != q0.leading())
    throw Error(ErrorCode::NormalizationError, "W(X,0) must equal 1");
  if (abs(p0.leading()) != 1)
    throw Error(ErrorCode::NormalizationError,
                "W(X,0) = 1 but no integral representation with P(X,0) = Q(X,0) = 1 exists");
  if (p0.leading() < 0) {
    p = -p;
    q = -q;
  }
  return {std::move(p), std::move(q)};
}

BivariateRational BivariateRational::inverse() const { return {den_, num_}; }

namespace {

struct Fraction {
  SparsePoly num;
  SparsePoly den;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Fraction parse() {
    Fraction f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at offset " + std::to_string(pos_));
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

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static Fraction add(const Fraction& a, const Fraction& b, bool subtract) {
    if (a.den == b.den) {
      return {subtract ? a.num - b.num : a.num + b.num, a.den};
    }
    SparsePoly rhs = b.num * a.den;
    return {subtract ? a.num * b.den - rhs : a.num * b.den + rhs, a.den * b.den};
  }

  static Fraction reduce(Fraction f) {
    if (f.den.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
    if (f.num.is_zero()) return {SparsePoly{}, SparsePoly::constant(1)};
    const SparsePoly g = poly::gcd(f.num, f.den);
    if (g.is_one()) return f;
    return {*poly::divide_exact(f.num, g), *poly::divide_exact(f.den, g)};
  }

  Fraction expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Fraction acc = term();
    if (negate) acc.num = -acc.num;
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      acc = reduce(add(acc, term(), c == '-'));
    }
    return acc;
  }

  Fraction term() {
    Fraction acc = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        Fraction f = factor();
        acc = reduce({acc.num * f.num, acc.den * f.den});
      } else if (c == '/') {
        ++pos_;
        Fraction f = factor();
        if (f.num.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
        acc = reduce({acc.num * f.den, acc.den * f.num});
      } else if (c == 'X' || c == 'Y' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        fail("implicit multiplication is not allowed");
      } else {
        break;
      }
    }
    return acc;
  }

  Fraction factor() {
    Fraction b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4 || std::stoul(digits) > kMaxExponent)
        fail("exponent exceeds " + std::to_string(kMaxExponent));
      const auto e = static_cast<unsigned>(std::stoul(digits));
      b = {b.num.pow(e), b.den.pow(e)};
    }
    return b;
  }

  Fraction base() {
    const char c = peek();
    if (c == 'X' || c == 'Y') {
      ++pos_;
      return {c == 'X' ? SparsePoly::x() : SparsePoly::y(), SparsePoly::constant(1)};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const Int value(std::string(text_.substr(start, pos_ - start)), 10);
      return {value == 0 ? SparsePoly{} : SparsePoly::constant(value), SparsePoly::constant(1)};
    }
    if (c == '(') {
      ++pos_;
      Fraction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BivariateRational parse_expression(std::string_view text) {
  Fraction f = Parser(text).parse();
  return BivariateRational::normalize(f.num, f.den);
}

std::string to_string(const BivariateRational& w) {
  if (w.den().is_one()) return poly::to_string(w.num());
  return "(" + poly::to_string(w.num()) + ")/(" + poly::to_string(w.den()) + ")";
}

}  // namespace eh
