#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"

namespace lrecon {

// Dense integer polynomial, coefficients lowest degree first.
class PolyZ {
public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyZ x() { return PolyZ({Integer(0), Integer(1)}); }
  static PolyZ constant(const Integer& a) { return PolyZ({a}); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  const Integer& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Integer eval(const Integer& t) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  PolyZ derivative() const {
    std::vector<Integer> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return PolyZ(std::move(d));
  }

  friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return PolyZ(std::move(r));
  }
  friend PolyZ operator-(const PolyZ& a) {
    std::vector<Integer> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = -a.c_[i];
    return PolyZ(std::move(r));
  }
  friend PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }
  friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(r));
  }
  friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.c_ == b.c_; }

  PolyZ pow(unsigned long e) const {
    PolyZ result = constant(1), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  // Exact division by a monic divisor; returns {quotient, remainder}.
  std::pair<PolyZ, PolyZ> divmod_monic(const PolyZ& d) const {
    if (!d.is_monic()) throw InvalidPolynomial("divmod_monic: divisor not monic");
    std::vector<Integer> r = c_;
    const long dd = d.degree();
    if (degree() < dd) return {PolyZ(), *this};
    std::vector<Integer> q(static_cast<std::size_t>(degree() - dd + 1));
    for (long i = degree(); i >= dd; --i) {
      const Integer t = r[static_cast<std::size_t>(i)];
      q[static_cast<std::size_t>(i - dd)] = t;
      if (t == 0) continue;
      for (long j = 0; j <= dd; ++j) r[static_cast<std::size_t>(i - dd + j)] -= t * d.c_[static_cast<std::size_t>(j)];
    }
    return {PolyZ(std::move(q)), PolyZ(std::move(r))};
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Integer& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Integer mag = abs(a);
      if (a < 0)
        out += "-";
      else if (!out.empty())
        out += "+";
      const bool show_coeff = i == 0 || mag != 1;
      if (show_coeff) out += mag.get_str();
      if (i > 0) {
        if (show_coeff) out += "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

namespace detail {

// Recursive-descent parser for the one-variable polynomial grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | 'x'
class PolyParser {
public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  PolyZ parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    PolyZ result = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected symbol");
    return result;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  PolyZ expr() {
    PolyZ acc;
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }
  PolyZ term() {
    PolyZ acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }
  PolyZ factor() {
    PolyZ base = atom();
    if (eat('^')) {
      Integer e = integer();
      if (e > 4096) fail("exponent too large");
      base = base.pow(e.get_ui());
    }
    return base;
  }
  PolyZ atom() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      return PolyZ::x();
    }
    return PolyZ::constant(integer());
  }
  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer or 'x'");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Determinant by fraction-free (Bareiss) elimination.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

inline PolyZ parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

// Resultant via the Sylvester matrix.
inline Integer resultant(const PolyZ& f, const PolyZ& g) {
  const long m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 || n == 0) {
    Integer r;
    if (m == 0)
      mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
    else
      mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coeff(static_cast<std::size_t>(m - j));
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.coeff(static_cast<std::size_t>(n - j));
  return detail::bareiss_determinant(std::move(s));
}

// Discriminant of a polynomial of degree >= 1.
inline Integer discriminant(const PolyZ& f) {
  const long n = f.degree();
  if (n < 1) throw InvalidPolynomial("discriminant of a constant");
  if (n == 1) return 1;
  Integer r = resultant(f, f.derivative());
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  return r / f.leading();
}

}  // namespace lrecon
