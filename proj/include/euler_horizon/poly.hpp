#pragma once

// Exact integer polynomial arithmetic: dense univariate polynomials over Z
// and sparse bivariate polynomials over Z in the variables X and Y.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eh::poly {

using Int = mpz_class;

// Exponent pair (n, m) of X^n Y^m. Ordered by m first, then n, which is the
// graded order used for serialization and for peeling.
struct Monomial {
  int n = 0;
  int m = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.m <=> b.m; c != 0) return c;
    return a.n <=> b.n;
  }
};

// Dense polynomial in one variable with integer coefficients, lowest degree
// first. Trailing zeros are never stored, so the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Int> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly constant(const Int& c);
  static UPoly monomial(const Int& c, int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<Int>& coeffs() const noexcept { return c_; }
  // Coefficient of T^i; zero outside the stored range.
  Int coeff(int i) const;
  const Int& leading() const { return c_.back(); }

  Int content() const;
  UPoly primitive() const;
  UPoly derivative() const;
  Int eval(const Int& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Int& k);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Int& k) { return a *= k; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  // Divides every coefficient by k; k must divide each one exactly.
  UPoly divexact(const Int& k) const;
  // Truncates to degree < n.
  UPoly truncated(int n) const;

 private:
  void trim();
  std::vector<Int> c_;
};

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b);
UPoly pseudo_remainder(const UPoly& a, const UPoly& b);
// Greatest common divisor in Z[T], normalized to a positive leading
// coefficient (gcd(0, 0) = 0).
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly pow(const UPoly& a, unsigned e);
std::string to_string(const UPoly& p, char var = 'T');

// Sparse polynomial in Z[X, Y]. No zero coefficients are stored.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Int>;

  SparsePoly() = default;
  static SparsePoly constant(const Int& c);
  static SparsePoly term(const Int& c, int n, int m);
  static SparsePoly x() { return term(1, 1, 0); }
  static SparsePoly y() { return term(1, 0, 1); }
  // 1 - X^n Y^m
  static SparsePoly binomial(int n, int m);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }

  Int coeff(Monomial mono) const;
  void add_term(Monomial mono, const Int& c);

  int degree_x() const noexcept;
  int degree_y() const noexcept;
  Int content() const;

  // Coefficient of Y^m as a polynomial in X.
  UPoly y_row(int m) const;
  std::vector<UPoly> y_rows() const;
  static SparsePoly from_y_rows(const std::vector<UPoly>& rows);
  // P(x0, Y) as a polynomial in Y.
  UPoly specialize_x(const Int& x0) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Int& k);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Int& k) { return a *= k; }
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  SparsePoly pow(unsigned e) const;
  SparsePoly divexact(const Int& k) const;

 private:
  Terms terms_;
};

std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b);
// Greatest common divisor in Z[X, Y] via the primitive remainder sequence in Y
// over Z[X]. The result has positive leading coefficient (highest Y power,
// then highest X power).
SparsePoly gcd(const SparsePoly& a, const SparsePoly& b);

// Res_Y(p, q) as an integer polynomial in X, from the Sylvester matrix with
// fraction-free elimination. Throws ZeroResultant if p and q share a factor
// of positive Y-degree.
UPoly resultant_in_y(const SparsePoly& p, const SparsePoly& q);

// Canonical text in the expression grammar, terms ordered by (m, n).
std::string to_string(const SparsePoly& p);

}  // namespace eh::poly
