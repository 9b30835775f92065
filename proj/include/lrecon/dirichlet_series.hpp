#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "lrecon/cyclo.hpp"
#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"

namespace lrecon {

namespace detail {
inline Integer zero_like(const Integer&) { return 0; }
template <class T>
Cyclo<T> zero_like(const Cyclo<T>& a) { return Cyclo<T>::zero(a.conductor()); }
inline bool is_zero(const Integer& a) { return a == 0; }
template <class T>
bool is_zero(const Cyclo<T>& a) { return a.is_zero(); }
}  // namespace detail

// Truncated Dirichlet series sum_{n <= X} a_n n^{-s}. Coefficients are stored at
// indices 1..X; index 0 holds a zero of the same ring and is never read.
template <class T>
class DirichletSeries {
public:
  DirichletSeries(std::size_t limit, const T& zero) : a_(limit + 1, zero) {}

  // delta = 1 + 0*2^-s + ..., the convolution identity.
  static DirichletSeries identity(std::size_t limit, const T& zero, const T& one) {
    DirichletSeries s(limit, zero);
    if (limit >= 1) s.a_[1] = one;
    return s;
  }

  std::size_t limit() const { return a_.size() - 1; }
  const T& operator[](std::size_t n) const { return a_[n]; }
  T& operator[](std::size_t n) { return a_[n]; }
  const T& zero() const { return a_[0]; }

  // In-place multiplication by the Euler factor (1 - c q^{-s})^{-1}.
  void apply_euler_factor(std::size_t q, const T& c) {
    if (q < 2) throw InvalidDatum("Euler factor norm must be at least 2");
    for (std::size_t n = q; n <= limit(); n += q) a_[n] += c * a_[n / q];
  }

  friend bool operator==(const DirichletSeries& x, const DirichletSeries& y) { return x.a_ == y.a_; }

private:
  std::vector<T> a_;
};

template <class T>
DirichletSeries<T> series_mul(const DirichletSeries<T>& a, const DirichletSeries<T>& b) {
  if (a.limit() != b.limit()) throw LimitMismatch(a.limit(), b.limit());
  const std::size_t x = a.limit();
  DirichletSeries<T> out(x, a.zero());
  for (std::size_t d = 1; d <= x; ++d) {
    if (detail::is_zero(a[d])) continue;
    for (std::size_t e = 1, n = d; n <= x; ++e, n += d) {
      if (detail::is_zero(b[e])) continue;
      out[n] += a[d] * b[e];
    }
  }
  return out;
}

// Solves c * b = a for c; b_1 must be +1 or -1.
template <class T>
DirichletSeries<T> series_div(const DirichletSeries<T>& a, const DirichletSeries<T>& b) {
  if (a.limit() != b.limit()) throw LimitMismatch(a.limit(), b.limit());
  const std::size_t x = a.limit();
  if (x == 0) return a;
  const T& lead = b[1];
  T unit_one = detail::zero_like(lead);
  if constexpr (std::is_same_v<T, Integer>) {
    unit_one = 1;
  } else {
    unit_one = T::one(lead.conductor());
  }
  const T unit_minus = detail::zero_like(lead) - unit_one;
  const bool unit = lead == unit_one || lead == unit_minus;
  if (!unit) throw NonUnitLeadingCoefficient();
  DirichletSeries<T> c = a;
  for (std::size_t d = 1; d <= x; ++d) {
    if (lead != unit_one) c[d] = detail::zero_like(lead) - c[d];
    if (detail::is_zero(c[d])) continue;
    for (std::size_t e = 2, n = 2 * d; n <= x; ++e, n += d) {
      if (detail::is_zero(b[e])) continue;
      c[n] -= c[d] * b[e];
    }
  }
  return c;
}

struct PrefixComparison {
  bool equal = true;
  std::optional<std::size_t> first_mismatch;
};

template <class T>
PrefixComparison series_eq_prefix(const DirichletSeries<T>& a, const DirichletSeries<T>& b, std::size_t x) {
  if (a.limit() < x || b.limit() < x) throw LimitMismatch(std::min(a.limit(), b.limit()), x);
  for (std::size_t n = 1; n <= x; ++n) {
    if (!(a[n] == b[n])) return {false, n};
  }
  return {};
}

// CSV with header "n,a_n" and rows 1..X.
template <class T>
void write_csv(std::ostream& os, const DirichletSeries<T>& s) {
  os << "n,a_n\n";
  for (std::size_t n = 1; n <= s.limit(); ++n) os << n << ',' << s[n] << '\n';
}

}  // namespace lrecon
