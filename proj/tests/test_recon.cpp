#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lrecon/lrecon.hpp"

using namespace lrecon;

namespace {

AbstractPrime prime(std::string label, std::int64_t norm, Element frob, std::vector<Element> inertia = {}) {
  return {std::move(label), norm, std::move(inertia), std::move(frob)};
}

std::vector<Element> identity_images(const FiniteAbelianGroup& g) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.rank(); ++i) out.push_back(g.generator(i));
  return out;
}

IsoPair identity_pair(const LDatum& d, unsigned k) { return IsoPair(d, d, identity_images(d.group), k); }

// Brute-force mu_k tuple check from complex arithmetic-free definition: a tuple
// has the lemma's shape iff it is a permutation of (1, ..., 1, zeta).
bool has_shape(const std::vector<long>& t) {
  return std::count(t.begin(), t.end(), 1) == 1 && std::count(t.begin(), t.end(), 0) + 1 == static_cast<long>(t.size());
}

}  // namespace

TEST(PsiCheck, KnownValues) {
  const FiniteAbelianGroup g({3});
  const LDatum d{g, {prime("a", 7, {1})}};
  const IsoPair id = identity_pair(d, 3);
  EXPECT_EQ(id.psi_check(Character{{0}}), (Character{{0}}));
  for_each_character(g, [&](const Character& chi) { EXPECT_EQ(id.psi_check(chi), chi); });
  const IsoPair inv(d, LDatum{g, {prime("a", 7, {2})}}, {{2}}, 3);
  EXPECT_EQ(inv.psi_check(Character{{1}}), (Character{{2}}));
}

TEST(PsiCheck, Functorial) {
  std::mt19937_64 rng(1);
  RichDatumConfig cfg;
  cfg.k = 4;
  const LDatum d = generate_rich_datum(cfg, rng);
  const auto sp = scramble(d, 4, rng);
  for_each_character(d.group, [&](const Character& a) {
    const Character b{d.group.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(d.group.order())))};
    EXPECT_EQ(sp.pair.psi_check(character_product(d.group, a, b)),
              character_product(d.group, sp.pair.psi_check(a), sp.pair.psi_check(b)));
  });
}

TEST(IsoPairConstruction, Rejections) {
  const FiniteAbelianGroup g({3});
  const LDatum d{g, {prime("a", 7, {1})}};
  EXPECT_THROW(IsoPair(d, d, {{0}}, 3), NotAnIsomorphism);
  EXPECT_THROW(IsoPair(d, d, {{1}}, 2), InvalidDatum);
  const LDatum big{FiniteAbelianGroup({9}), {prime("a", 7, {1})}};
  EXPECT_THROW(IsoPair(d, big, {{3}}, 3), NotAnIsomorphism);
}

TEST(ClassifyXi, KnownValues) {
  const FiniteAbelianGroup g({3, 3});
  const LDatum d{g, {prime("a", 7, {1, 0}), prime("b", 7, {0, 1}), prime("r", 5, {0, 0}, {{1, 0}})}};
  const IsoPair pair = identity_pair(d, 3);
  const auto xi = classify_xi(pair, Side::source, 7);
  EXPECT_NE(std::find(xi.xi1.begin(), xi.xi1.end(), trivial_character(g)), xi.xi1.end());
  bool found = false;
  for (const auto& m : xi.xi2)
    if (m.chi == Character{{0, 1}}) {
      found = true;
      EXPECT_EQ(m.special_prime, 1u);
    }
  EXPECT_TRUE(found);
  const auto ram = classify_xi(pair, Side::source, 5);
  for (const auto& chi : ram.xi1) EXPECT_EQ(chi.exponents[0], 0);
  for (const auto& m : ram.xi2) EXPECT_EQ(m.chi.exponents[0], 0);
}

TEST(MuK, KnownValues) {
  const auto z3 = CycloInt::root(3, 1), one3 = CycloInt::one(3);
  const auto v = mu_k_solve(3, {one3, one3, z3});
  EXPECT_TRUE(v.sum_matches);
  EXPECT_EQ(v.special_index, std::optional<std::size_t>(2));
  const auto z4 = CycloInt::root(4, 1);
  EXPECT_FALSE(mu_k_solve(4, {CycloInt::one(4), z4, z4}).sum_matches);
  const auto r = mu_k_exhaustive(3, 3);
  EXPECT_EQ(r.tuples_checked, 64u);
  EXPECT_EQ(r.matching.size(), 3u);
  for (const auto& t : r.matching) EXPECT_TRUE(has_shape(t));
  EXPECT_THROW(mu_k_solve(3, {CycloInt::integer(3, 2)}), BadRootOfUnity);
  EXPECT_THROW(mu_k_solve(3, {CycloInt::root(4, 1)}), BadRootOfUnity);
  EXPECT_THROW(mu_k_solve(2, {CycloInt::one(2)}), InvalidDatum);
}

TEST(MuK, SolverAgreesWithExhaustiveEnumeration) {
  for (unsigned k = 3; k <= 6; ++k)
    for (unsigned n = 1; n <= 5; ++n) {
      const auto r = mu_k_exhaustive(k, n);
      EXPECT_TRUE(r.lemma_holds()) << k << " " << n;
      std::set<std::vector<long>> matching(r.matching.begin(), r.matching.end());
      std::vector<long> t(n, -1);
      while (true) {
        std::vector<CycloInt> vals;
        for (long e : t) vals.push_back(e < 0 ? CycloInt::zero(k) : CycloInt::root(k, e));
        const auto v = mu_k_solve(k, vals);
        EXPECT_EQ(v.sum_matches, matching.count(t) == 1);
        if (v.sum_matches) {
          EXPECT_TRUE(v.special_index.has_value());
        }
        std::size_t pos = 0;
        while (pos < n && ++t[pos] == static_cast<long>(k)) t[pos++] = -1;
        if (pos == n) break;
      }
      EXPECT_EQ(matching.size(), n);
    }
}

TEST(MuK, BoundaryAtKTwo) {
  const auto r = mu_k_exhaustive(2, 3);
  EXPECT_FALSE(r.lemma_holds());
  // values (1, 0, 0): exponents (0, -1, -1) in some order
  bool seen = false;
  for (const auto& t : r.violating) {
    std::vector<long> s = t;
    std::sort(s.begin(), s.end());
    if (s == std::vector<long>{-1, -1, 0}) seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(Reconstruct, IdentityPair) {
  std::mt19937_64 rng(2);
  const LDatum d = generate_rich_datum(RichDatumConfig{}, rng);
  const auto r = reconstruct(identity_pair(d, 3));
  EXPECT_TRUE(r.certified);
  for (const auto& p : d.primes) EXPECT_EQ(r.phi.at(p.label), p.label);
  EXPECT_FALSE(r.certificates.empty());
  EXPECT_TRUE(frobenius_matching_implies_l_equality(identity_pair(d, 3), r, 50).holds);
}

TEST(Reconstruct, PlantedScrambleAndTransport) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    RichDatumConfig cfg;
    cfg.k = 3 + static_cast<unsigned>(t % 3);
    const LDatum d = generate_rich_datum(cfg, rng);
    const auto sp = scramble(d, cfg.k, rng);
    const auto r = reconstruct(sp.pair);
    ASSERT_TRUE(r.certified);
    EXPECT_EQ(r.phi, sp.sigma);
    for (auto n : d.norms()) {
      const auto lvl = match_norm_level(sp.pair, n);
      for (const auto& [p, q] : lvl.phi) EXPECT_EQ(sp.sigma.at(d.primes[p].label), sp.pair.target().primes[q].label);
      // Xi^1 transports onto Xi^1.
      const auto src = classify_xi(sp.pair, Side::source, n);
      const auto tgt = classify_xi(sp.pair, Side::target, n);
      std::set<Character> mapped;
      for (const auto& chi : src.xi1) mapped.insert(sp.pair.psi_check(chi));
      EXPECT_EQ(mapped, std::set<Character>(tgt.xi1.begin(), tgt.xi1.end()));
      EXPECT_EQ(src.xi2.size(), tgt.xi2.size());
    }
    for (const auto& c : r.certificates) {
      const auto& sp_src = sp.pair.source();
      const auto& p = sp_src.primes[*sp_src.find(c.source_label)];
      EXPECT_EQ(c.value, char_value(sp_src, Character{sp_src.group.generator(c.generator)}, p));
    }
  }
}

TEST(Reconstruct, TamperedPairsRejected) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    RichDatumConfig cfg;
    cfg.k = 3 + static_cast<unsigned>(t % 3);
    const LDatum d = generate_rich_datum(cfg, rng);
    const auto sp = scramble(d, cfg.k, rng);
    const IsoPair bad = tamper_frobenius(sp.pair, rng);
    EXPECT_THROW(reconstruct(bad), NotLCompatible);
    const auto l = frobenius_matching_implies_l_equality(bad, MatchingResult{}, 30);
    EXPECT_FALSE(l.holds);
    EXPECT_TRUE(l.witness.has_value());
  }
}

TEST(Reconstruct, CardinalityMismatch) {
  const FiniteAbelianGroup g({3});
  const LDatum a{g, {prime("a", 7, {1}), prime("b", 7, {2})}};
  const LDatum b{g, {prime("a", 7, {1}), prime("b", 5, {2})}};
  EXPECT_THROW(reconstruct(IsoPair(a, b, {{1}}, 3)), CardinalityMismatch);
}

TEST(Reconstruct, InsufficientCharacters) {
  // Two norm-7 primes with the same Frobenius: no character separates them.
  const FiniteAbelianGroup g({3});
  const LDatum d{g, {prime("a", 7, {1}), prime("b", 7, {1})}};
  EXPECT_THROW(reconstruct(identity_pair(d, 3)), InsufficientCharacters);
}

TEST(Reconstruct, Deterministic) {
  std::mt19937_64 r1(8), r2(8);
  const auto a = scramble(generate_rich_datum(RichDatumConfig{}, r1), 3, r1);
  const auto b = scramble(generate_rich_datum(RichDatumConfig{}, r2), 3, r2);
  EXPECT_EQ(a.pair.target(), b.pair.target());
  EXPECT_EQ(reconstruct(a.pair).phi, reconstruct(b.pair).phi);
}
