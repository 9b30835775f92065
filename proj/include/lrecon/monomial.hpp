#pragma once

#include <cstdint>
#include <vector>

#include "lrecon/cyclo.hpp"
#include "lrecon/errors.hpp"
#include "lrecon/finite_group.hpp"

namespace lrecon {

// Linear character of a subgroup with values in mu_k, stored as exponents.
struct LinearCharacter {
  std::vector<int> domain;        // sorted subgroup elements
  std::vector<long> exponents;    // exponent of zeta_k at domain[i]
  unsigned k = 1;

  long at(int g) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), g);
    if (it == domain.end() || *it != g) throw InvalidDatum("element outside the character's domain");
    return exponents[static_cast<std::size_t>(it - domain.begin())];
  }
};

// C^n x| G for C = Z/k, with G permuting the n coordinates as it permutes G/H.
struct WreathProduct {
  FiniteGroup group;
  unsigned k = 2;
  int n = 1;
  CosetAction base;
  std::vector<int> base_subgroup;  // C^n
  std::vector<int> inertia_like;   // C^n x| H, the stabilizer of coordinate 1

  int encode(const std::vector<int>& a, int g) const {
    int idx = g;
    for (int i = n; i-- > 0;) idx = idx * static_cast<int>(k) + a[static_cast<std::size_t>(i)];
    return idx;
  }
  std::pair<std::vector<int>, int> decode(int idx) const {
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      a[static_cast<std::size_t>(i)] = idx % static_cast<int>(k);
      idx /= static_cast<int>(k);
    }
    return {a, idx};
  }
};

inline constexpr long kMaxWreathOrder = 10'000;

inline WreathProduct wreath_product(unsigned k, const CosetAction& action) {
  if (k < 2) throw InvalidDatum("wreath product needs k >= 2");
  const int n = action.cosets();
  const auto& g = action.group();
  long size = g.order();
  for (int i = 0; i < n; ++i) {
    size *= k;
    if (size > kMaxWreathOrder) throw EnvelopeExceeded("wreath product order exceeds " + std::to_string(kMaxWreathOrder));
  }
  WreathProduct w{FiniteGroup(), k, n, action, {}, {}};
  const int order = static_cast<int>(size);
  const int ck = static_cast<int>(k);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::pair<std::vector<int>, int>> dec;
  dec.reserve(static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x) dec.push_back(w.decode(x));
  std::vector<int> c(static_cast<std::size_t>(n));
  for (int x = 0; x < order; ++x) {
    const auto& [a, ga] = dec[static_cast<std::size_t>(x)];
    for (int y = 0; y < order; ++y) {
      const auto& [b, gb] = dec[static_cast<std::size_t>(y)];
      // (a, g)(b, h) = (a + g.b, gh), (g.b)_{g(i)} = b_i
      for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)];
      for (int i = 0; i < n; ++i) {
        auto& slot = c[static_cast<std::size_t>(action.act(ga, i))];
        slot = (slot + b[static_cast<std::size_t>(i)]) % ck;
      }
      table[x][y] = w.encode(c, g.mul(ga, gb));
    }
  }
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  std::vector<int> gens;
  if (n > 0) {
    std::vector<int> unit = zero;
    unit[0] = 1;
    gens.push_back(w.encode(unit, g.identity()));
  }
  for (int s : g.generators()) gens.push_back(w.encode(zero, s));
  std::vector<std::string> names;
  for (int x = 0; x < order; ++x) {
    const auto& [a, ga] = dec[static_cast<std::size_t>(x)];
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(a[static_cast<std::size_t>(i)]);
    names.push_back(s + ";" + g.name(ga) + ")");
  }
  w.group = FiniteGroup(std::move(table), w.encode(zero, g.identity()), std::move(gens), std::move(names));
  for (int x = 0; x < order; ++x) {
    const int base_elem = dec[static_cast<std::size_t>(x)].second;
    if (base_elem == g.identity()) w.base_subgroup.push_back(x);
    if (std::binary_search(action.subgroup().begin(), action.subgroup().end(), base_elem)) w.inertia_like.push_back(x);
  }
  return w;
}

// (a_1, ..., a_n, h) -> zeta^(a_1) on C^n x| H.
inline LinearCharacter first_coordinate_character(const WreathProduct& w) {
  for (int h : w.base.subgroup())
    if (w.base.act(h, 0) != 0) throw CoordinateNotFixed();
  LinearCharacter chi;
  chi.k = w.k;
  chi.domain = w.inertia_like;
  for (int x : chi.domain) chi.exponents.push_back(w.decode(x).first[0]);
  return chi;
}

// Column j is sent to row perm[j] with entry zeta_k^diag[j].
struct MonomialMatrix {
  std::vector<int> perm;
  std::vector<long> diag;
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

inline MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b, unsigned k) {
  MonomialMatrix r;
  r.perm.resize(b.perm.size());
  r.diag.resize(b.perm.size());
  for (std::size_t j = 0; j < b.perm.size(); ++j) {
    const auto mid = static_cast<std::size_t>(b.perm[j]);
    r.perm[j] = a.perm[mid];
    r.diag[j] = (a.diag[mid] + b.diag[j]) % static_cast<long>(k);
  }
  return r;
}

// Representation by monomial matrices over mu_k, one matrix per group element.
class MonomialRep {
public:
  MonomialRep(FiniteGroup g, unsigned k, std::vector<MonomialMatrix> matrices)
      : group_(std::move(g)), k_(k), matrices_(std::move(matrices)) {
    if (static_cast<int>(matrices_.size()) != group_.order()) throw NotAHomomorphism("one matrix per element required");
    dim_ = matrices_.empty() ? 0 : static_cast<int>(matrices_[0].perm.size());
    for (const auto& m : matrices_) {
      std::vector<bool> hit(static_cast<std::size_t>(dim_), false);
      if (static_cast<int>(m.perm.size()) != dim_ || m.diag.size() != m.perm.size())
        throw NotAHomomorphism("matrix dimensions differ");
      for (int r : m.perm) {
        if (r < 0 || r >= dim_ || hit[static_cast<std::size_t>(r)]) throw NotAHomomorphism("not a monomial matrix");
        hit[static_cast<std::size_t>(r)] = true;
      }
    }
    const int n = group_.order();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (compose(matrix(a), matrix(b), k_) != matrix(group_.mul(a, b)))
          throw NotAHomomorphism("rho(ab) != rho(a) rho(b)");
  }

  const FiniteGroup& group() const { return group_; }
  unsigned k() const { return k_; }
  int dimension() const { return dim_; }
  const MonomialMatrix& matrix(int g) const { return matrices_[static_cast<std::size_t>(g)]; }

private:
  FiniteGroup group_;
  unsigned k_;
  int dim_ = 0;
  std::vector<MonomialMatrix> matrices_;
};

// Ind_S^G(chi) on coset representatives t_0 = e, t_1, ...: g t_j = t_i s with
// s in S gives entry chi(s) at (i, j).
inline MonomialRep induce_monomial(const FiniteGroup& g, const std::vector<int>& subgroup, const LinearCharacter& chi) {
  std::vector<int> s = subgroup;
  std::sort(s.begin(), s.end());
  if (s != chi.domain) throw NotAHomomorphism("character domain differs from the subgroup");
  const long k = chi.k;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      const long lhs = chi.at(g.mul(s[i], s[j]));
      const long rhs = (chi.exponents[i] + chi.exponents[j]) % k;
      if (((lhs - rhs) % k + k) % k != 0) throw NotAHomomorphism("character is not multiplicative");
    }
  const CosetAction action(g, s);
  std::vector<MonomialMatrix> mats;
  for (int x = 0; x < g.order(); ++x) {
    MonomialMatrix m;
    for (int j = 0; j < action.cosets(); ++j) {
      const int i = action.act(x, j);
      const int h = g.mul(g.inv(action.representative(i)), g.mul(x, action.representative(j)));
      m.perm.push_back(i);
      m.diag.push_back(((chi.at(h) % k) + k) % k);
    }
    mats.push_back(std::move(m));
  }
  return MonomialRep(g, chi.k, std::move(mats));
}

inline CycloInt trace(const MonomialRep& rep, int g) {
  CycloInt t = CycloInt::zero(rep.k());
  const auto& m = rep.matrix(g);
  for (std::size_t j = 0; j < m.perm.size(); ++j)
    if (m.perm[j] == static_cast<int>(j)) t += CycloInt::root(rep.k(), m.diag[j]);
  return t;
}

}  // namespace lrecon
