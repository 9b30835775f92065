#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"
#include "lrecon/poly_z.hpp"

namespace lrecon {

// Dense polynomial over F_p, p < 2^63, coefficients lowest degree first and reduced.
class PolyFp {
public:
  PolyFp() = default;
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& a : c_) a %= p_;
    trim();
  }
  PolyFp(std::uint64_t p, const PolyZ& f) : p_(p) {
    c_.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c_.push_back(mod_u64(a, p));
    trim();
  }

  static PolyFp constant(std::uint64_t p, std::uint64_t a) { return PolyFp(p, {a}); }
  static PolyFp x(std::uint64_t p) { return PolyFp(p, {0, 1}); }

  std::uint64_t prime() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  // Lift with coefficients in [0, p).
  PolyZ lift() const {
    std::vector<Integer> v;
    for (auto a : c_) v.emplace_back(static_cast<unsigned long>(a));
    return PolyZ(std::move(v));
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t inv(std::uint64_t a) const {
    // a^(p-2)
    std::uint64_t r = 1, b = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  PolyFp monic() const {
    if (is_zero()) return *this;
    const std::uint64_t li = inv(leading());
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = mul(c_[i], li);
    return PolyFp(p_, std::move(r));
  }

  PolyFp derivative() const {
    std::vector<std::uint64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul(c_[i], i % p_));
    return PolyFp(p_, std::move(d));
  }

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t s = a.coeff(i) + b.coeff(i);
      r[i] = s >= a.p_ ? s - a.p_ : s;
    }
    return PolyFp(a.p_, std::move(r));
  }
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::uint64_t x = a.coeff(i), y = b.coeff(i);
      r[i] = x >= y ? x - y : x + a.p_ - y;
    }
    return PolyFp(a.p_, std::move(r));
  }
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
    if (a.is_zero() || b.is_zero()) return PolyFp(a.p_, std::vector<std::uint64_t>{});
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        r[i + j] = (r[i + j] + a.mul(a.c_[i], b.c_[j])) % a.p_;
      }
    }
    return PolyFp(a.p_, std::move(r));
  }
  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<PolyFp, PolyFp> divmod(const PolyFp& d) const {
    if (d.is_zero()) throw InvalidPolynomial("division by zero polynomial");
    std::vector<std::uint64_t> r = c_;
    const long dd = d.degree();
    if (degree() < dd) return {PolyFp(p_, std::vector<std::uint64_t>{}), *this};
    std::vector<std::uint64_t> q(static_cast<std::size_t>(degree() - dd + 1), 0);
    const std::uint64_t li = inv(d.leading());
    for (long i = degree(); i >= dd; --i) {
      const std::uint64_t t = mul(r[static_cast<std::size_t>(i)], li);
      q[static_cast<std::size_t>(i - dd)] = t;
      if (t == 0) continue;
      for (long j = 0; j <= dd; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - dd + j)];
        const std::uint64_t sub = mul(t, d.c_[static_cast<std::size_t>(j)]);
        slot = slot >= sub ? slot - sub : slot + p_ - sub;
      }
    }
    return {PolyFp(p_, std::move(q)), PolyFp(p_, std::move(r))};
  }
  PolyFp operator%(const PolyFp& d) const { return divmod(d).second; }
  PolyFp operator/(const PolyFp& d) const { return divmod(d).first; }

  friend bool operator<(const PolyFp& a, const PolyFp& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

// Monic gcd (zero if both inputs are zero).
inline PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline PolyFp powmod(const PolyFp& base, const Integer& e, const PolyFp& mod) {
  PolyFp result = PolyFp::constant(mod.prime(), 1) % mod;
  PolyFp b = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
  }
  return result;
}

struct FactorFp {
  PolyFp factor;
  unsigned multiplicity;
};

namespace detail {

// Squarefree decomposition of a monic polynomial.
inline std::vector<FactorFp> squarefree_parts(const PolyFp& f) {
  std::vector<FactorFp> out;
  const std::uint64_t p = f.prime();
  if (f.degree() < 1) return out;
  PolyFp c = gcd(f, f.derivative());
  PolyFp w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    PolyFp y = gcd(w, c);
    PolyFp z = w / y;
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = c / y;
  }
  if (!c.is_one()) {
    // c is a polynomial in x^p; take the p-th root coefficientwise.
    std::vector<std::uint64_t> root;
    for (std::size_t k = 0; k < c.coeffs().size(); k += p) root.push_back(c.coeffs()[k]);
    for (auto& part : squarefree_parts(PolyFp(p, std::move(root)).monic())) {
      out.push_back({part.factor, part.multiplicity * static_cast<unsigned>(p)});
    }
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<PolyFp, unsigned>> distinct_degree(PolyFp f) {
  std::vector<std::pair<PolyFp, unsigned>> out;
  const std::uint64_t p = f.prime();
  const Integer pz(static_cast<unsigned long>(p));
  PolyFp xp = PolyFp::x(p) % f;
  unsigned d = 0;
  while (f.degree() >= 2 * static_cast<long>(d + 1)) {
    ++d;
    xp = powmod(xp, pz, f);
    PolyFp g = gcd(f, xp - PolyFp::x(p));
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      xp = xp % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); deterministic seed.
inline void equal_degree(const PolyFp& f, unsigned d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (f.degree() == static_cast<long>(d)) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.prime();
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, d);
  while (true) {
    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& a : coeffs) a = rng() % p;
    PolyFp a(p, std::move(coeffs));
    if (a.degree() < 1) continue;
    PolyFp b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)) splits in characteristic 2.
      PolyFp t = a % f, acc = a % f;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        acc = acc + t;
      }
      b = acc;
    } else {
      b = powmod(a, (q - 1) / 2, f) - PolyFp::constant(p, 1);
    }
    PolyFp g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Factorization of a nonzero polynomial over F_p into monic irreducibles with
// multiplicities, up to the leading-coefficient unit. Factors are sorted by
// degree, then lexicographically by coefficient vector (constant term first).
inline std::vector<FactorFp> factor_mod_p(const PolyFp& f) {
  if (f.is_zero()) throw InvalidPolynomial("factor_mod_p: zero polynomial");
  std::vector<FactorFp> out;
  std::mt19937_64 rng(0x5eed5eedULL ^ f.prime());
  for (const auto& part : detail::squarefree_parts(f.monic())) {
    for (const auto& [block, d] : detail::distinct_degree(part.factor)) {
      std::vector<PolyFp> irreducibles;
      detail::equal_degree(block, d, rng, irreducibles);
      for (auto& g : irreducibles) out.push_back({std::move(g), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorFp& a, const FactorFp& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

}  // namespace lrecon
