#include <gtest/gtest.h>

#include <random>

#include "lrecon/lrecon.hpp"

using namespace lrecon;

namespace {

NumberField F(const char* s) { return NumberField(parse_poly(s)); }

const char* const kCorpus[] = {"x^2-2", "x^2+2", "x^4-2", "x^4+8", "x^2+1"};

// Ideals of Z[i] of norm n: nonzero a+bi with a^2+b^2 = n, divided by the 4 units.
std::vector<long> gaussian_ideal_counts(long x) {
  std::vector<long> c(static_cast<std::size_t>(x) + 1, 0);
  for (long a = -x; a <= x; ++a)
    for (long b = -x; b <= x; ++b) {
      const long n = a * a + b * b;
      if (n >= 1 && n <= x) ++c[static_cast<std::size_t>(n)];
    }
  for (auto& v : c) v /= 4;
  return c;
}

}  // namespace

TEST(Splitting, KnownValues) {
  EXPECT_EQ(splitting_type(F("x^2-2"), 7), (SplittingType{{1, 1}, {1, 1}}));
  EXPECT_EQ(splitting_type(F("x^2-2"), 3), (SplittingType{{1, 2}}));
  EXPECT_EQ(splitting_type(F("x^2-2"), 2), (SplittingType{{2, 1}}));
  const auto r = F("x^4+8").splitting(2);
  EXPECT_EQ(r.pattern, (SplittingType{{4, 1}}));
  EXPECT_EQ(r.source, SplittingSource::newton);
  EXPECT_EQ(F("x^2+1").splitting(2).source, SplittingSource::dedekind);
}

TEST(Splitting, SevenInQuarticFields) {
  EXPECT_EQ(splitting_type(F("x^4-2"), 7), (SplittingType{{1, 1}, {1, 1}, {1, 2}}));
  EXPECT_EQ(splitting_type(F("x^4+8"), 7), (SplittingType{{1, 2}, {1, 2}}));
}

TEST(Splitting, OverrideAndUnresolved) {
  // 2 is a common index divisor of Q(alpha), alpha^3 - alpha^2 - 2 alpha - 8 = 0.
  const PolyZ f = parse_poly("x^3-x^2-2*x-8");
  try {
    NumberField(f).splitting(2);
    FAIL() << "expected IndexDivisorUnresolved";
  } catch (const IndexDivisorUnresolved& e) {
    EXPECT_EQ(e.prime, 2u);
  }
  const NumberField k(f, {{2, {{1, 1}, {1, 1}, {1, 1}}}});
  const auto r = k.splitting(2);
  EXPECT_EQ(r.source, SplittingSource::override_table);
  EXPECT_EQ(r.pattern.size(), 3u);
  EXPECT_THROW(NumberField(f, {{2, {{1, 1}}}}), InvalidPolynomial);
  EXPECT_THROW(NumberField(f, {{4, {{3, 1}}}}), InvalidPolynomial);
}

TEST(Splitting, DegreeSumOverCorpus) {
  const auto primes = primes_up_to(10000);
  for (const char* poly : kCorpus) {
    const NumberField k = F(poly);
    for (auto p : primes) {
      const auto t = splitting_type(k, p);
      EXPECT_EQ(splitting_degree(t), k.degree()) << poly << " p=" << p;
      for (const auto& pa : t) {
        EXPECT_GE(pa.e, 1u);
        EXPECT_GE(pa.f, 1u);
      }
    }
  }
}

TEST(Field, Construction) {
  EXPECT_THROW(F("2*x^2+1"), InvalidPolynomial);
  EXPECT_THROW(F("3"), InvalidPolynomial);
  EXPECT_THROW(F("x^2-1"), NotIrreducible);
  EXPECT_THROW(F("x^4+4"), NotIrreducible);      // (x^2+2x+2)(x^2-2x+2)
  EXPECT_THROW(F("x^4+x^2+1"), NotIrreducible);  // (x^2+x+1)(x^2-x+1)
  EXPECT_THROW(F("x^6+2*x^3+1"), NotIrreducible); // (x^3+1)^2
  EXPECT_EQ(F("x+5").defining_poly(), parse_poly("x-1"));
}

TEST(Zeta, KnownValues) {
  const auto q = dedekind_zeta(F("x-1"), 10);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(q[n], 1);
  EXPECT_EQ(dedekind_zeta(F("x^2+1"), 5)[5], 2);
  const auto z = dedekind_zeta(F("x^2-2"), 7);
  EXPECT_EQ(z[7], 2);
  EXPECT_EQ(z[3], 0);
  const auto quot = series_div(dedekind_zeta(F("x^4-2"), 49), dedekind_zeta(F("x^2-2"), 49));
  EXPECT_EQ(quot[7], 0);
  EXPECT_EQ(quot[49], 1);
}

TEST(Zeta, GaussianOracle) {
  const auto z = dedekind_zeta(F("x^2+1"), 1000);
  const auto oracle = gaussian_ideal_counts(1000);
  for (std::size_t n = 1; n <= 1000; ++n) EXPECT_EQ(z[n], oracle[n]) << n;
}

TEST(Zeta, MultiplicativeNonnegativeBounded) {
  std::mt19937_64 rng(5);
  const std::size_t x = 3000;
  for (const char* poly : kCorpus) {
    const NumberField k = F(poly);
    const auto z = dedekind_zeta(k, x);
    EXPECT_EQ(z[1], 1);
    for (std::size_t n = 1; n <= x; ++n) EXPECT_GE(z[n], 0);
    for (auto p : primes_up_to(x)) EXPECT_LE(z[p], k.degree());
    for (int t = 0; t < 2000; ++t) {
      const std::size_t m = 1 + rng() % 60, n = 1 + rng() % 50;
      if (std::gcd(m, n) != 1 || m * n > x) continue;
      EXPECT_EQ(z[m * n], z[m] * z[n]) << poly << " " << m << " " << n;
    }
  }
}

TEST(Zeta, PrefixComparisons) {
  const auto a = dedekind_zeta(F("x^2-2"), 100), b = dedekind_zeta(F("x^2+2"), 100);
  EXPECT_TRUE(series_eq_prefix(a, a, 100).equal);
  const auto c = series_eq_prefix(a, b, 100);
  EXPECT_FALSE(c.equal);
  EXPECT_EQ(c.first_mismatch, std::optional<std::size_t>(3));
  const auto delta = DirichletSeries<Integer>::identity(2, 0, 1);
  EXPECT_EQ(series_eq_prefix(delta, dedekind_zeta(F("x-1"), 2), 2).first_mismatch, std::optional<std::size_t>(2));
  const auto zq = dedekind_zeta(F("x-1"), 30);
  EXPECT_EQ(series_mul(zq, DirichletSeries<Integer>::identity(30, 0, 1)), zq);
  EXPECT_EQ(series_div(zq, zq), DirichletSeries<Integer>::identity(30, 0, 1));
}

TEST(NormRecovery, KnownValues) {
  EXPECT_EQ(norm_from_unit_invariants(6, 7), 7);
  EXPECT_EQ(norm_from_unit_invariants(2, 2), 2);
  EXPECT_EQ(norm_from_unit_invariants(8, 3), 9);
  EXPECT_THROW(norm_from_unit_invariants(4, 7), NotAPrimePower);
  EXPECT_THROW(norm_from_unit_invariants(6, 4), NotAPrimePower);
}
