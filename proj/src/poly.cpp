#include "euler_horizon/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "euler_horizon/error.hpp"

namespace eh::poly {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

UPoly UPoly::constant(const Int& c) { return UPoly(std::vector<Int>{c}); }

UPoly UPoly::monomial(const Int& c, int degree) {
  std::vector<Int> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

Int UPoly::content() const {
  Int g = 0;
  for (const Int& v : c_) {
    g = ::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  return divexact(g);
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

Int UPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (Int& v : r.c_) v = -v;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Int& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (Int& v : c_) v *= k;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::divexact(const Int& k) const {
  UPoly r = *this;
  for (Int& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  return r;
}

UPoly UPoly::truncated(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  if (n <= 0) return {};
  return UPoly(std::vector<Int>(c_.begin(), c_.begin() + n));
}

std::optional<UPoly> divide_exact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return UPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  std::vector<Int> r = a.coeffs();
  const Int& lb = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    Int& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    const int shift = k - db;
    q[static_cast<std::size_t>(shift)] = t;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(shift + i)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (int i = 0; i < db; ++i)
    if (r[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return UPoly(std::move(q));
}

UPoly pseudo_remainder(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const Int lb = b.leading();
  const int db = b.degree();
  int steps = a.degree() - db + 1;
  UPoly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    UPoly t = UPoly::monomial(r.leading(), r.degree() - db) * b;
    r = r * lb - t;
    --steps;
  }
  for (; steps > 0; --steps) r *= lb;
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  const Int c = ::gcd(a.content(), b.content());
  UPoly x = a.primitive();
  UPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? UPoly{} : r.primitive();
  }
  return x.primitive() * c;
}

UPoly pow(const UPoly& a, unsigned e) {
  UPoly result = UPoly::constant(1);
  UPoly base = a;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Int& c, const std::string& vars) {
  const bool neg = c < 0;
  Int mag = abs(c);
  if (first) {
    if (neg) os << '-';
  } else {
    os << (neg ? " - " : " + ");
  }
  if (vars.empty()) {
    os << mag;
  } else if (mag == 1) {
    os << vars;
  } else {
    os << mag << '*' << vars;
  }
}

std::string power_text(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const UPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Int c = p.coeff(i);
    if (c == 0) continue;
    append_term(os, first, c, power_text(var, i));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly SparsePoly::constant(const Int& c) {
  SparsePoly p;
  p.add_term({0, 0}, c);
  return p;
}

SparsePoly SparsePoly::term(const Int& c, int n, int m) {
  if (n < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  SparsePoly p;
  p.add_term({n, m}, c);
  return p;
}

SparsePoly SparsePoly::binomial(int n, int m) {
  SparsePoly p = constant(1);
  p.add_term({n, m}, -1);
  return p;
}

bool SparsePoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

bool SparsePoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
         terms_.begin()->second == 1;
}

Int SparsePoly::coeff(Monomial mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Int(0) : it->second;
}

void SparsePoly::add_term(Monomial mono, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int SparsePoly::degree_x() const noexcept {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.n);
  return d;
}

int SparsePoly::degree_y() const noexcept {
  return terms_.empty() ? -1 : terms_.rbegin()->first.m;
}

Int SparsePoly::content() const {
  Int g = 0;
  for (const auto& [mono, c] : terms_) g = ::gcd(g, c);
  return g;
}

UPoly SparsePoly::y_row(int m) const {
  std::vector<Int> row;
  for (auto it = terms_.lower_bound({0, m}); it != terms_.end() && it->first.m == m; ++it) {
    const auto n = static_cast<std::size_t>(it->first.n);
    if (row.size() <= n) row.resize(n + 1);
    row[n] = it->second;
  }
  return UPoly(std::move(row));
}

std::vector<UPoly> SparsePoly::y_rows() const {
  std::vector<UPoly> rows;
  if (terms_.empty()) return rows;
  rows.resize(static_cast<std::size_t>(degree_y()) + 1);
  for (int m = 0; m <= degree_y(); ++m) rows[static_cast<std::size_t>(m)] = y_row(m);
  return rows;
}

SparsePoly SparsePoly::from_y_rows(const std::vector<UPoly>& rows) {
  SparsePoly p;
  for (std::size_t m = 0; m < rows.size(); ++m) {
    const auto& cs = rows[m].coeffs();
    for (std::size_t n = 0; n < cs.size(); ++n)
      p.add_term({static_cast<int>(n), static_cast<int>(m)}, cs[n]);
  }
  return p;
}

UPoly SparsePoly::specialize_x(const Int& x0) const {
  if (terms_.empty()) return {};
  std::vector<Int> out(static_cast<std::size_t>(degree_y()) + 1);
  for (int m = 0; m <= degree_y(); ++m) out[static_cast<std::size_t>(m)] = y_row(m).eval(x0);
  return UPoly(std::move(out));
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= k;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.n + mb.n, ma.m + mb.m}, ca * cb);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(1);
  SparsePoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

SparsePoly SparsePoly::divexact(const Int& k) const {
  SparsePoly r = *this;
  for (auto& [mono, c] : r.terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// Z[X][Y] helpers: a bivariate polynomial as a vector of X-polynomials indexed
// by the power of Y.

namespace {

using YPoly = std::vector<UPoly>;

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly content_y(const YPoly& p) {
  UPoly g;
  for (const UPoly& r : p) {
    g = gcd(g, r);
    if (g.is_one()) break;
  }
  return g;
}

YPoly divide_rows(const YPoly& p, const UPoly& d) {
  YPoly out;
  out.reserve(p.size());
  for (const UPoly& r : p) {
    auto q = divide_exact(r, d);
    if (!q) throw Error(ErrorCode::Internal, "content division was not exact");
    out.push_back(std::move(*q));
  }
  return out;
}

YPoly primitive_y(const YPoly& p) {
  if (p.empty()) return p;
  UPoly c = content_y(p);
  if (p.back().leading() < 0) c = -c;
  return divide_rows(p, c);
}

YPoly prem_y(YPoly a, const YPoly& b) {
  const int db = degree(b);
  const UPoly& lb = b.back();
  trim(a);
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    const UPoly lead = a.back();
    for (UPoly& r : a) r = r * lb;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(shift + i)] -= lead * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

SparsePoly sign_normalized(SparsePoly p) {
  if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
  return p;
}

}  // namespace

std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "division by the zero polynomial");
  if (a.is_zero()) return SparsePoly{};
  YPoly r = a.y_rows();
  const YPoly d = b.y_rows();
  const int db = degree(d);
  if (degree(r) < db) return std::nullopt;
  YPoly q(static_cast<std::size_t>(degree(r) - db) + 1);
  trim(r);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    auto t = divide_exact(r.back(), d.back());
    if (!t) return std::nullopt;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(shift + i)] -= *t * d[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(shift)] = std::move(*t);
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  return SparsePoly::from_y_rows(q);
}

SparsePoly gcd(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero()) return sign_normalized(b);
  if (b.is_zero()) return sign_normalized(a);
  YPoly x = a.y_rows();
  YPoly y = b.y_rows();
  const UPoly c = gcd(content_y(x), content_y(y));
  x = primitive_y(x);
  y = primitive_y(y);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    YPoly r = prem_y(x, y);
    x = std::move(y);
    y = r.empty() ? YPoly{} : primitive_y(r);
  }
  x = primitive_y(x);
  for (UPoly& row : x) row = row * c;
  return sign_normalized(SparsePoly::from_y_rows(x));
}

UPoly resultant_in_y(const SparsePoly& p, const SparsePoly& q) {
  const YPoly a = p.y_rows();
  const YPoly b = q.y_rows();
  const int dp = degree(a);
  const int dq = degree(b);
  if (dp < 1 || dq < 1)
    throw Error(ErrorCode::InvalidArgument, "resultant requires positive Y-degree in both arguments");
  const int size = dp + dq;
  std::vector<std::vector<UPoly>> mat(static_cast<std::size_t>(size),
                                      std::vector<UPoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < dq; ++i)
    for (int t = 0; t <= dp; ++t)
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + t)] = a[static_cast<std::size_t>(dp - t)];
  for (int i = 0; i < dp; ++i)
    for (int t = 0; t <= dq; ++t)
      mat[static_cast<std::size_t>(dq + i)][static_cast<std::size_t>(i + t)] = b[static_cast<std::size_t>(dq - t)];

  // Bareiss fraction-free elimination; every division below is exact.
  bool negate = false;
  UPoly prev = UPoly::constant(1);
  for (int k = 0; k + 1 < size; ++k) {
    auto& pivot_row = mat[static_cast<std::size_t>(k)];
    if (pivot_row[static_cast<std::size_t>(k)].is_zero()) {
      int swap_with = -1;
      for (int r = k + 1; r < size; ++r)
        if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
          swap_with = r;
          break;
        }
      if (swap_with < 0) throw Error(ErrorCode::ZeroResultant, "resultant vanishes identically");
      std::swap(mat[static_cast<std::size_t>(k)], mat[static_cast<std::size_t>(swap_with)]);
      negate = !negate;
    }
    const UPoly pivot = mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    for (int i = k + 1; i < size; ++i) {
      auto& row = mat[static_cast<std::size_t>(i)];
      const UPoly lead = row[static_cast<std::size_t>(k)];
      for (int j = k + 1; j < size; ++j) {
        UPoly num = row[static_cast<std::size_t>(j)] * pivot -
                    lead * mat[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        auto quotient = divide_exact(num, prev);
        if (!quotient) throw Error(ErrorCode::Internal, "Bareiss step was not exact");
        row[static_cast<std::size_t>(j)] = std::move(*quotient);
      }
      row[static_cast<std::size_t>(k)] = UPoly{};
    }
    prev = pivot;
  }
  UPoly det = mat[static_cast<std::size_t>(size - 1)][static_cast<std::size_t>(size - 1)];
  if (det.is_zero()) throw Error(ErrorCode::ZeroResultant, "resultant vanishes identically");
  return negate ? -det : det;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    std::string vars = power_text('X', mono.n);
    const std::string ypart = power_text('Y', mono.m);
    if (!ypart.empty()) vars = vars.empty() ? ypart : vars + "*" + ypart;
    append_term(os, first, c, vars);
    first = false;
  }
  return os.str();
}

}  // namespace eh::poly
