#pragma once

#include <cstddef>
#include <optional>

#include "lrecon/dirichlet_series.hpp"
#include "lrecon/number_field.hpp"
#include "lrecon/poly_z.hpp"

namespace lrecon {

// Q(sqrt2) and Q(sqrt-2) have different zeta functions, yet
//   zeta(Q(2^(1/4))) * zeta(Q(sqrt-2)) = zeta(Q((1+i) 2^(1/4))) * zeta(Q(sqrt2)),
// the coefficientwise form of L_K(chi) = L_L(chi').
// (1+i) 2^(1/4) is a root of x^4+8.
struct D4Report {
  std::size_t limit = 0;
  PrefixComparison identity;   // zeta(x^4-2) zeta(x^2+2) vs zeta(x^4+8) zeta(x^2-2)
  PrefixComparison quadratic;  // zeta(x^2-2) vs zeta(x^2+2)
};

inline D4Report verify_d4_identity(std::size_t limit) {
  const auto zeta = [limit](const char* f) { return dedekind_zeta(NumberField(parse_poly(f)), limit); };
  const auto real_quadratic = zeta("x^2-2");
  const auto imag_quadratic = zeta("x^2+2");
  const auto a = series_mul(zeta("x^4-2"), imag_quadratic);
  const auto b = series_mul(zeta("x^4+8"), real_quadratic);
  return {limit, series_eq_prefix(a, b, limit), series_eq_prefix(real_quadratic, imag_quadratic, limit)};
}

}  // namespace lrecon
