#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "lrecon/lrecon.hpp"

using namespace lrecon;

namespace {

PolyZ P(const char* s) { return parse_poly(s); }

// Monic polynomials of degree d over F_p, all of them.
std::vector<PolyFp> all_monic(std::uint64_t p, unsigned d) {
  std::vector<PolyFp> out;
  std::vector<std::uint64_t> c(d + 1, 0);
  c[d] = 1;
  while (true) {
    out.emplace_back(p, c);
    std::size_t i = 0;
    while (i < d && ++c[i] == p) c[i++] = 0;
    if (i == d) break;
  }
  return out;
}

bool irreducible_by_trial(const PolyFp& f) {
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d)
    for (const auto& g : all_monic(f.prime(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

std::size_t distinct_roots(const PolyFp& f) {
  std::size_t n = 0;
  for (std::uint64_t a = 0; a < f.prime(); ++a) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = static_cast<std::uint64_t>((static_cast<unsigned __int128>(acc) * a + f.coeffs()[i]) % f.prime());
    if (acc == 0) ++n;
  }
  return n;
}

int mobius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

TEST(Parse, AcceptsGrammar) {
  EXPECT_EQ(P("x^4-2").to_string(), "x^4-2");
  EXPECT_EQ(P(" 2 * x ").to_string(), "2*x");
  EXPECT_EQ(P("x^2+2*x+1"), P("x*x+x+x+1"));
  EXPECT_EQ(P("-x^3"), P("0-x^3"));
  EXPECT_EQ(P("x-1").degree(), 1);
  EXPECT_EQ(P("0").degree(), -1);
}

TEST(Parse, RejectsOtherSymbols) {
  for (const char* bad : {"y+1", "x^", "x**2", "x+", "2x!", "", "x^-1", "sqrt(2)", "(x+1)^2"})
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
}

TEST(Discriminant, QuadraticAndCubicFormulas) {
  for (int b = -5; b <= 5; ++b)
    for (int c = -5; c <= 5; ++c) {
      PolyZ f({Integer(c), Integer(b), Integer(1)});
      EXPECT_EQ(discriminant(f), Integer(b * b - 4 * c));
    }
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b) {
      PolyZ f({Integer(b), Integer(a), Integer(0), Integer(1)});
      EXPECT_EQ(discriminant(f), Integer(-4 * a * a * a - 27 * b * b));
    }
  EXPECT_EQ(discriminant(P("x^4-2")), Integer(-2048));
  EXPECT_EQ(discriminant(P("x^4+8")), Integer(131072));
}

TEST(Resultant, RootProductFormula) {
  // Res((x-a)(x-b), x-c) = (a-c)(b-c) for monic factors.
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        PolyZ f = PolyZ({Integer(-a), Integer(1)}) * PolyZ({Integer(-b), Integer(1)});
        PolyZ g({Integer(-c), Integer(1)});
        EXPECT_EQ(resultant(f, g), Integer((a - c) * (b - c)));
      }
}

TEST(FactorModP, KnownValues) {
  auto degrees = [](const char* f, std::uint64_t p) {
    std::multiset<long> d;
    for (const auto& fa : factor_mod_p(PolyFp(p, P(f))))
      for (unsigned i = 0; i < fa.multiplicity; ++i) d.insert(fa.factor.degree());
    return d;
  };
  EXPECT_EQ(degrees("x^4-2", 7), (std::multiset<long>{1, 1, 2}));
  EXPECT_EQ(degrees("x^4+8", 7), (std::multiset<long>{2, 2}));
  EXPECT_EQ(degrees("x^2+1", 5), (std::multiset<long>{1, 1}));
  EXPECT_EQ(degrees("x^2+1", 3), (std::multiset<long>{2}));
  const auto sq = factor_mod_p(PolyFp(2, P("x^2+1")));
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].multiplicity, 2u);
}

TEST(FactorModP, RandomPolynomialsAgainstOracles) {
  std::mt19937_64 rng(7);
  const auto primes = primes_up_to(100);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = primes[rng() % primes.size()];
    const unsigned d = 1 + static_cast<unsigned>(rng() % 8);
    std::vector<std::uint64_t> c(d + 1);
    for (auto& a : c) a = rng() % p;
    c[d] = 1;
    const PolyFp f(p, c);
    const auto factors = factor_mod_p(f);
    PolyFp prod = PolyFp::constant(p, 1);
    std::size_t linear = 0;
    for (const auto& fa : factors) {
      EXPECT_EQ(fa.factor.leading(), 1u);
      if (p <= 13 || fa.factor.degree() <= 3) {
        EXPECT_TRUE(irreducible_by_trial(fa.factor)) << "p=" << p;
      }
      if (fa.factor.degree() == 1) ++linear;
      for (unsigned i = 0; i < fa.multiplicity; ++i) prod = prod * fa.factor;
    }
    EXPECT_EQ(prod.coeffs(), f.coeffs());
    EXPECT_EQ(linear, distinct_roots(f));
    EXPECT_TRUE(std::is_sorted(factors.begin(), factors.end(),
                               [](const FactorFp& a, const FactorFp& b) { return a.factor < b.factor; }));
  }
}

TEST(FactorModP, Deterministic) {
  const PolyFp f(101, P("x^8+3*x^5-7*x+11"));
  const auto a = factor_mod_p(f), b = factor_mod_p(f);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].factor.coeffs(), b[i].factor.coeffs());
}

TEST(Cyclo, RootsOfUnity) {
  for (unsigned k = 1; k <= 24; ++k) {
    const auto z = CycloInt::root(k, 1);
    EXPECT_TRUE(z.pow(k).equals_integer(1)) << k;
    for (unsigned j = 1; j < k; ++j) EXPECT_FALSE(z.pow(j).equals_integer(1)) << k << " " << j;
    CycloInt sum = CycloInt::zero(k);
    for (unsigned j = 0; j < k; ++j) sum += CycloInt::root(k, j);
    if (k >= 2) {
      EXPECT_TRUE(sum.is_zero()) << k;
    }
    EXPECT_EQ(CycloInt::root(k, -1) * z, CycloInt::one(k));
  }
}

TEST(Cyclo, Lift) {
  const auto z3 = CycloInt::root(3, 1);
  EXPECT_EQ(z3.lift(6), CycloInt::root(6, 2));
  EXPECT_EQ((z3 * z3 + z3).lift(12), CycloInt::root(12, 8) + CycloInt::root(12, 4));
  EXPECT_THROW(z3.lift(4), ConductorMismatch);
  EXPECT_THROW((void)(z3 == CycloInt::root(4, 1)), ConductorMismatch);
}

TEST(Cyclo, RationalInverse) {
  std::mt19937_64 rng(3);
  for (unsigned k : {3u, 4u, 5u, 8u, 12u}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> c(euler_phi(k));
      for (auto& a : c) a = Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
      for (auto& r : c) r.canonicalize();
      CycloRat a(k, c);
      if (a.is_zero()) continue;
      EXPECT_EQ(a * inverse(a), CycloRat::one(k));
    }
  }
}

TEST(Series, MobiusIsInverseOfRiemannZeta) {
  const std::size_t x = 500;
  DirichletSeries<Integer> one(x, 0);
  for (std::size_t n = 1; n <= x; ++n) one[n] = 1;
  const auto mu = series_div(DirichletSeries<Integer>::identity(x, 0, 1), one);
  for (std::size_t n = 1; n <= x; ++n) EXPECT_EQ(mu[n], mobius(n)) << n;
}

TEST(Series, DivisionInvertsMultiplication) {
  std::mt19937_64 rng(11);
  const std::size_t x = 200;
  for (int t = 0; t < 10; ++t) {
    DirichletSeries<Integer> a(x, 0), b(x, 0);
    for (std::size_t n = 1; n <= x; ++n) {
      a[n] = static_cast<long>(rng() % 21) - 10;
      b[n] = static_cast<long>(rng() % 21) - 10;
    }
    b[1] = (t % 2) ? 1 : -1;
    EXPECT_EQ(series_div(series_mul(a, b), b), a);
  }
  DirichletSeries<Integer> bad(x, 0);
  bad[1] = 2;
  EXPECT_THROW(series_div(bad, bad), NonUnitLeadingCoefficient);
}

TEST(Series, CyclotomicCoefficients) {
  const unsigned k = 5;
  const std::size_t x = 60;
  auto l = DirichletSeries<CycloInt>::identity(x, CycloInt::zero(k), CycloInt::one(k));
  l.apply_euler_factor(2, CycloInt::root(k, 1));
  l.apply_euler_factor(3, CycloInt::root(k, 2));
  EXPECT_EQ(l[8], CycloInt::root(k, 3));
  EXPECT_EQ(l[12], CycloInt::root(k, 4));
  EXPECT_TRUE(l[5].is_zero());
  const auto inv = series_div(DirichletSeries<CycloInt>::identity(x, CycloInt::zero(k), CycloInt::one(k)), l);
  EXPECT_EQ(series_mul(l, inv), DirichletSeries<CycloInt>::identity(x, CycloInt::zero(k), CycloInt::one(k)));
}

TEST(Series, PrefixComparisonAndCsv) {
  DirichletSeries<Integer> a(5, 0), b(5, 0);
  for (std::size_t n = 1; n <= 5; ++n) a[n] = b[n] = 1;
  b[4] = 2;
  EXPECT_EQ(series_eq_prefix(a, b, 3).equal, true);
  EXPECT_EQ(series_eq_prefix(a, b, 5).first_mismatch, std::optional<std::size_t>(4));
  EXPECT_THROW(series_eq_prefix(a, b, 6), LimitMismatch);
  std::ostringstream os;
  write_csv(os, a);
  EXPECT_EQ(os.str(), "n,a_n\n1,1\n2,1\n3,1\n4,1\n5,1\n");
}

TEST(Integer, Helpers) {
  EXPECT_EQ(primes_up_to(30).size(), 10u);
  EXPECT_TRUE(is_prime(1000000007ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_EQ(valuation(Integer(48), 2), 4);
  EXPECT_EQ(euler_phi(36), 12u);
}
