#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lrecon/dirichlet_series.hpp"
#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"
#include "lrecon/poly_fp.hpp"
#include "lrecon/poly_z.hpp"

namespace lrecon {

// Ramification index and residue degree of one prime above p.
struct PrimeAbove {
  unsigned e = 1;
  unsigned f = 1;
  friend auto operator<=>(const PrimeAbove&, const PrimeAbove&) = default;
};

using SplittingType = std::vector<PrimeAbove>;

inline unsigned splitting_degree(const SplittingType& t) {
  unsigned s = 0;
  for (const auto& pa : t) s += pa.e * pa.f;
  return s;
}

enum class SplittingSource { dedekind, newton, override_table };

inline const char* to_string(SplittingSource s) {
  switch (s) {
    case SplittingSource::dedekind: return "dedekind";
    case SplittingSource::newton: return "newton";
    case SplittingSource::override_table: return "override";
  }
  return "?";
}

struct SplittingReport {
  std::uint64_t p = 0;
  SplittingType pattern;
  SplittingSource source = SplittingSource::dedekind;
};

namespace detail {

// Z[x]/(f) is p-maximal iff gcd(F, g, h) = 1 mod p, where f = g*h - p*F with
// g the product of the distinct irreducible factors of f mod p and h = f/g.
inline bool dedekind_p_maximal(const PolyZ& f, std::uint64_t p, const std::vector<FactorFp>& factors) {
  PolyFp g_bar = PolyFp::constant(p, 1), h_bar = PolyFp::constant(p, 1);
  for (const auto& [g, m] : factors) {
    g_bar = g_bar * g;
    for (unsigned i = 1; i < m; ++i) h_bar = h_bar * g;
  }
  const PolyZ g = g_bar.lift(), h = h_bar.lift();
  const PolyZ diff = g * h - f;
  std::vector<Integer> big_f;
  const Integer pz(static_cast<unsigned long>(p));
  for (const auto& c : diff.coeffs()) big_f.push_back(c / pz);
  const PolyFp f_bar(p, PolyZ(std::move(big_f)));
  return gcd(gcd(f_bar, g_bar), h_bar).is_one();
}

// Single-slope test: the Newton polygon of f at p is one segment of slope
// v_p(a_0)/n with gcd(v_p(a_0), n) = 1, so p is totally ramified.
inline bool newton_totally_ramified(const PolyZ& f, std::uint64_t p) {
  const long n = f.degree();
  const long v0 = valuation(f.coeff(0), p);
  if (v0 <= 0 || std::gcd(v0, n) != 1) return false;
  for (long i = 1; i < n; ++i) {
    const long vi = valuation(f.coeff(static_cast<std::size_t>(i)), p);
    if (vi < 0) continue;
    if (vi * n < v0 * (n - i)) return false;
  }
  return true;
}

inline SplittingType pattern_from_factors(const std::vector<FactorFp>& factors) {
  SplittingType t;
  for (const auto& [g, m] : factors) t.push_back({m, static_cast<unsigned>(g.degree())});
  std::sort(t.begin(), t.end());
  return t;
}

// Monic integer factor of degree d found by Kronecker interpolation, if one
// exists and the search space is within budget. Returns {found, exhausted}.
inline std::pair<bool, bool> kronecker_has_factor(const PolyZ& f, long d, std::size_t budget) {
  std::vector<std::pair<Integer, Integer>> points;  // (t, f(t))
  for (long t = 0; static_cast<long>(points.size()) < d + 1 && t < 64; t = t <= 0 ? 1 - t : -t) {
    const Integer v = f.eval(Integer(t));
    if (v == 0) return {true, true};
    points.emplace_back(Integer(t), v);
  }
  std::vector<std::vector<Integer>> choices;
  std::size_t total = 1;
  for (const auto& [t, v] : points) {
    std::vector<Integer> ds;
    for (const auto& dv : positive_divisors(v)) {
      ds.push_back(dv);
      ds.push_back(-dv);
    }
    total *= ds.size();
    if (total > budget) return {false, false};
    choices.push_back(std::move(ds));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    // Lagrange interpolation over Q through (t_i, choice_i).
    std::vector<Rational> g(static_cast<std::size_t>(d + 1), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<Rational> basis{1};
      Rational denom = 1;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (j == i) continue;
        std::vector<Rational> next(basis.size() + 1, 0);
        for (std::size_t a = 0; a < basis.size(); ++a) {
          next[a + 1] += basis[a];
          next[a] -= basis[a] * Rational(points[j].first);
        }
        basis = std::move(next);
        denom *= Rational(points[i].first - points[j].first);
      }
      const Rational scale = Rational(choices[i][idx[i]]) / denom;
      for (std::size_t a = 0; a < basis.size(); ++a) g[a] += basis[a] * scale;
    }
    bool integral = g.back() == 1;
    std::vector<Integer> gz;
    for (auto& c : g) {
      c.canonicalize();
      if (c.get_den() != 1) {
        integral = false;
        break;
      }
      gz.push_back(c.get_num());
    }
    if (integral) {
      const PolyZ cand(gz);
      if (cand.degree() == d && f.divmod_monic(cand).second.is_zero()) return {true, true};
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return {false, true};
}

}  // namespace detail

// Monogenic number field Q[x]/(f) for a monic irreducible integer polynomial.
class NumberField {
public:
  explicit NumberField(PolyZ f, std::map<std::uint64_t, SplittingType> overrides = {})
      : f_(std::move(f)), overrides_(std::move(overrides)) {
    if (f_.degree() < 1) throw InvalidPolynomial("defining polynomial must have degree >= 1");
    if (!f_.is_monic()) throw InvalidPolynomial("defining polynomial must be monic: " + f_.to_string());
    if (f_.degree() == 1) f_ = PolyZ({Integer(-1), Integer(1)});
    disc_ = discriminant(f_);
    if (disc_ == 0) throw NotIrreducible("defining polynomial has a repeated factor: " + f_.to_string());
    for (const auto& [p, t] : overrides_) {
      if (!is_prime(p)) throw InvalidPolynomial("override key is not prime: " + std::to_string(p));
      if (t.empty() || splitting_degree(t) != degree())
        throw InvalidPolynomial("override for p=" + std::to_string(p) + " does not sum to the degree");
    }
    check_irreducible();
  }

  const PolyZ& defining_poly() const { return f_; }
  unsigned degree() const { return static_cast<unsigned>(f_.degree()); }
  const Integer& disc_defining_poly() const { return disc_; }
  const std::map<std::uint64_t, SplittingType>& overrides() const { return overrides_; }

  SplittingReport splitting(std::uint64_t p) const {
    if (!is_prime(p)) throw InvalidPolynomial("splitting_type: " + std::to_string(p) + " is not prime");
    const auto factors = factor_mod_p(PolyFp(p, f_));
    const Integer pz(static_cast<unsigned long>(p));
    const bool may_divide_index = mpz_divisible_p(disc_.get_mpz_t(), Integer(pz * pz).get_mpz_t()) != 0;
    if (!may_divide_index || detail::dedekind_p_maximal(f_, p, factors))
      return {p, detail::pattern_from_factors(factors), SplittingSource::dedekind};
    if (auto it = overrides_.find(p); it != overrides_.end()) {
      SplittingType t = it->second;
      std::sort(t.begin(), t.end());
      return {p, t, SplittingSource::override_table};
    }
    if (detail::newton_totally_ramified(f_, p)) return {p, {{degree(), 1}}, SplittingSource::newton};
    throw IndexDivisorUnresolved(p);
  }

private:
  // Rejects polynomials with a factor of degree <= 3 over Z. Mod-p factor
  // degrees at unramified primes rule out most candidate degrees; the rest are
  // searched by Kronecker's method. Larger factors are the caller's concern.
  void check_irreducible() const {
    const long n = f_.degree();
    if (n == 1) return;
    std::set<long> possible;
    for (long d = 1; d <= n / 2; ++d) possible.insert(d);
    int used = 0;
    for (std::uint64_t p : primes_up_to(2000)) {
      if (possible.empty() || used >= 40) break;
      if (mpz_divisible_ui_p(disc_.get_mpz_t(), p)) continue;
      ++used;
      std::vector<bool> reach(static_cast<std::size_t>(n + 1), false);
      reach[0] = true;
      for (const auto& fac : factor_mod_p(PolyFp(p, f_))) {
        const long d = fac.factor.degree();
        for (long s = n; s >= d; --s)
          if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
      }
      for (auto it = possible.begin(); it != possible.end();) {
        if (!reach[static_cast<std::size_t>(*it)] && !reach[static_cast<std::size_t>(n - *it)])
          it = possible.erase(it);
        else
          ++it;
      }
    }
    for (long d : possible) {
      if (d > 3) continue;
      if (detail::kronecker_has_factor(f_, d, 2'000'000).first)
        throw NotIrreducible("polynomial has a factor of degree " + std::to_string(d) + ": " + f_.to_string());
    }
  }

  PolyZ f_;
  Integer disc_;
  std::map<std::uint64_t, SplittingType> overrides_;
};

inline SplittingType splitting_type(const NumberField& k, std::uint64_t p) { return k.splitting(p).pattern; }

// Coefficients a_n = number of integral ideals of norm n, n <= limit.
inline DirichletSeries<Integer> dedekind_zeta(const NumberField& k, std::size_t limit) {
  DirichletSeries<Integer> z(limit, Integer(0));
  if (limit == 0) return z;
  z[1] = 1;
  if (limit == 1) return z;
  const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(limit));
  // local[p][j] = number of ideals above p of norm p^j.
  std::vector<std::vector<Integer>> local(limit + 1);
  for (std::uint64_t p : primes_up_to(limit)) {
    std::size_t top = 0;
    for (std::uint64_t q = p; q <= limit; q *= p) ++top;
    std::vector<Integer> coeff(top + 1, 0);
    coeff[0] = 1;
    for (const auto& pa : k.splitting(p).pattern) {
      // multiply by 1/(1 - T^f)
      for (std::size_t j = pa.f; j <= top; ++j) coeff[j] += coeff[j - pa.f];
    }
    local[p] = std::move(coeff);
  }
  for (std::size_t n = 2; n <= limit; ++n) {
    const std::size_t p = spf[n];
    std::size_t m = n, j = 0;
    while (m % p == 0) {
      m /= p;
      ++j;
    }
    z[n] = local[p][j] * z[m];
  }
  return z;
}

// N(p) from the order of the torsion of the local unit group: the prime-to-p
// part of the torsion is the multiplicative group of the residue field.
inline Integer norm_from_unit_invariants(const Integer& tors_order, std::uint64_t p) {
  if (tors_order <= 0) throw NotAPrimePower("torsion order must be positive");
  if (!is_prime(p)) throw NotAPrimePower("residue characteristic " + std::to_string(p) + " is not prime");
  Integer m = tors_order;
  const Integer pz(static_cast<unsigned long>(p));
  while (mpz_divisible_p(m.get_mpz_t(), pz.get_mpz_t())) m /= pz;
  Integer norm = m + 1;
  Integer rest = norm;
  while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) rest /= pz;
  if (rest != 1)
    throw NotAPrimePower("invariants inconsistent: " + norm.get_str() + " is not a power of " + std::to_string(p));
  return norm;
}

}  // namespace lrecon
