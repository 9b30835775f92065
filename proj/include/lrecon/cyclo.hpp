#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"
#include "lrecon/poly_z.hpp"

namespace lrecon {

// k-th cyclotomic polynomial, computed as (x^k - 1) / prod_{d | k, d < k} Phi_d.
inline PolyZ cyclotomic_poly(unsigned k) {
  if (k == 0) throw InvalidPolynomial("cyclotomic_poly: k must be positive");
  std::vector<Integer> c(k + 1, 0);
  c[0] = -1;
  c[k] = 1;
  PolyZ f(std::move(c));
  for (unsigned d = 1; d < k; ++d) {
    if (k % d == 0) f = f.divmod_monic(cyclotomic_poly(d)).first;
  }
  return f;
}

// Shared reduction data for Z[zeta_k] in the power basis 1, zeta, ..., zeta^(phi(k)-1).
class CycloRing {
public:
  explicit CycloRing(unsigned k) : k_(k), phi_(static_cast<unsigned>(euler_phi(k))), modulus_(cyclotomic_poly(k)) {
    // powers_[j] = zeta^j reduced, for 0 <= j < max(k, 2*phi - 1).
    const unsigned count = std::max<unsigned>(k_, 2 * phi_);
    powers_.assign(count, std::vector<Integer>(phi_, 0));
    std::vector<Integer> cur(phi_, 0);
    cur[0] = 1;
    for (unsigned j = 0; j < count; ++j) {
      powers_[j] = cur;
      // multiply by zeta: shift up, fold the top coefficient using Phi_k.
      std::vector<Integer> next(phi_, 0);
      Integer top = cur[phi_ - 1];
      for (unsigned i = phi_ - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < phi_; ++i) next[i] -= top * modulus_.coeff(i);
      cur = std::move(next);
    }
  }

  unsigned conductor() const { return k_; }
  unsigned dimension() const { return phi_; }
  const PolyZ& modulus() const { return modulus_; }
  // zeta^j for any integer j.
  const std::vector<Integer>& root_coords(long j) const {
    long r = j % static_cast<long>(k_);
    if (r < 0) r += k_;
    return powers_[static_cast<std::size_t>(r)];
  }
  const std::vector<Integer>& power_coords(std::size_t j) const { return powers_[j]; }

private:
  unsigned k_;
  unsigned phi_;
  PolyZ modulus_;
  std::vector<std::vector<Integer>> powers_;
};

inline std::shared_ptr<const CycloRing> cyclo_ring(unsigned k) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CycloRing>> cache;
  if (k == 0) throw InvalidPolynomial("cyclotomic conductor must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  auto ring = std::make_shared<const CycloRing>(k);
  cache.emplace(k, ring);
  return ring;
}

// Element of Z[zeta_k] (T = Integer) or Q(zeta_k) (T = Rational), reduced mod Phi_k.
template <class T>
class Cyclo {
public:
  Cyclo() : Cyclo(1) {}
  explicit Cyclo(unsigned k) : ring_(cyclo_ring(k)), c_(ring_->dimension(), T(0)) {}
  Cyclo(unsigned k, std::vector<T> coords) : ring_(cyclo_ring(k)), c_(std::move(coords)) {
    if (c_.size() != ring_->dimension()) throw InvalidPolynomial("coordinate count does not match phi(k)");
  }

  static Cyclo zero(unsigned k) { return Cyclo(k); }
  static Cyclo integer(unsigned k, const T& a) {
    Cyclo r(k);
    r.c_[0] = a;
    return r;
  }
  static Cyclo one(unsigned k) { return integer(k, T(1)); }
  // zeta_k^j
  static Cyclo root(unsigned k, long j) {
    Cyclo r(k);
    const auto& src = r.ring_->root_coords(j);
    for (std::size_t i = 0; i < src.size(); ++i) r.c_[i] = T(src[i]);
    return r;
  }

  unsigned conductor() const { return ring_->conductor(); }
  const std::vector<T>& coords() const { return c_; }
  bool is_zero() const {
    for (const auto& a : c_)
      if (a != 0) return false;
    return true;
  }
  // True when the element is the rational integer a (coordinates (a, 0, ..., 0)).
  bool equals_integer(const T& a) const {
    if (c_[0] != a) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  Cyclo& operator+=(const Cyclo& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator-(Cyclo a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    a.check(b);
    const std::size_t n = a.c_.size();
    std::vector<T> full(2 * n - 1, T(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) full[i + j] += a.c_[i] * b.c_[j];
    }
    Cyclo r(a.conductor());
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (full[i] == 0) continue;
      if (i < n) {
        r.c_[i] += full[i];
      } else {
        const auto& red = a.ring_->power_coords(i);
        for (std::size_t t = 0; t < n; ++t)
          if (red[t] != 0) r.c_[t] += full[i] * T(red[t]);
      }
    }
    return r;
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  friend Cyclo operator*(const T& s, Cyclo a) {
    for (auto& x : a.c_) x *= s;
    return a;
  }
  // Multiply by zeta^j.
  Cyclo times_root(long j) const { return *this * root(conductor(), j); }

  Cyclo pow(unsigned long e) const {
    Cyclo result = one(conductor()), base = *this;
    while (e) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    a.check(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Injective ring map Z[zeta_k] -> Z[zeta_k'] for k | k'.
  Cyclo lift(unsigned target) const {
    if (target % conductor() != 0) throw ConductorMismatch(conductor(), target);
    const long step = target / conductor();
    Cyclo r(target);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& img = r.ring_->root_coords(static_cast<long>(i) * step);
      for (std::size_t t = 0; t < img.size(); ++t)
        if (img[t] != 0) r.c_[t] += c_[i] * T(img[t]);
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::string term = c_[i].get_str();
      if (!out.empty() && term[0] != '-') out += "+";
      if (i == 0) {
        out += term;
      } else {
        if (term == "1")
          term.clear();
        else if (term == "-1")
          term = "-";
        else
          term += "*";
        out += term + "z";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

private:
  template <class U>
  friend class Cyclo;
  void check(const Cyclo& o) const {
    if (conductor() != o.conductor()) throw ConductorMismatch(conductor(), o.conductor());
  }

  std::shared_ptr<const CycloRing> ring_;
  std::vector<T> c_;
};

using CycloInt = Cyclo<Integer>;
using CycloRat = Cyclo<Rational>;

inline CycloInt cyclo_root(unsigned k, long j) { return CycloInt::root(k, j); }

// Element of Q(zeta_k) with the same coordinates.
inline CycloRat to_rational(const CycloInt& a) {
  std::vector<Rational> v;
  v.reserve(a.coords().size());
  for (const auto& x : a.coords()) v.emplace_back(x);
  return CycloRat(a.conductor(), std::move(v));
}

// Multiplicative inverse in Q(zeta_k) by solving (a * x = 1) on the power basis.
inline CycloRat inverse(const CycloRat& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  const unsigned k = a.conductor();
  const std::size_t n = a.coords().size();
  // Column j of the multiplication matrix is a * zeta^j.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1, 0));
  for (std::size_t j = 0; j < n; ++j) {
    const CycloRat col = a * CycloRat::root(k, static_cast<long>(j));
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords()[i];
  }
  m[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return CycloRat(k, std::move(x));
}

}  // namespace lrecon
