#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lrecon/cyclo.hpp"
#include "lrecon/dirichlet_series.hpp"
#include "lrecon/errors.hpp"

namespace lrecon {

using Element = std::vector<std::int64_t>;

// Z/d_1 x ... x Z/d_r with elements as exponent vectors.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders) : d_(std::move(cyclic_orders)) {
    exponent_ = 1;
    order_ = 1;
    for (auto d : d_) {
      if (d < 1) throw InvalidDatum("cyclic orders must be positive");
      exponent_ = std::lcm(exponent_, d);
      order_ *= d;
    }
  }

  const std::vector<std::int64_t>& cyclic_orders() const { return d_; }
  std::size_t rank() const { return d_.size(); }
  std::int64_t exponent() const { return exponent_; }
  std::int64_t order() const { return order_; }

  bool contains(const Element& g) const {
    if (g.size() != d_.size()) return false;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] < 0 || g[i] >= d_[i]) return false;
    return true;
  }
  Element identity() const { return Element(d_.size(), 0); }
  Element add(const Element& a, const Element& b) const {
    Element r(d_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a[i] + b[i]) % d_[i];
    return r;
  }
  Element neg(const Element& a) const {
    Element r(d_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (d_[i] - a[i]) % d_[i];
    return r;
  }
  Element scale(const Element& a, std::int64_t m) const {
    Element r(d_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = ((a[i] * (m % d_[i])) % d_[i] + d_[i]) % d_[i];
    return r;
  }
  Element generator(std::size_t i) const {
    Element r = identity();
    if (d_[i] > 1) r[i] = 1;
    return r;
  }

  // Mixed-radix index with the last coordinate varying fastest.
  std::int64_t index_of(const Element& g) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < d_.size(); ++i) idx = idx * d_[i] + g[i];
    return idx;
  }
  Element element_at(std::int64_t idx) const {
    Element g(d_.size());
    for (std::size_t i = d_.size(); i-- > 0;) {
      g[i] = idx % d_[i];
      idx /= d_[i];
    }
    return g;
  }

  // Elements of the subgroup generated by gens, as sorted indices.
  std::vector<std::int64_t> subgroup(const std::vector<Element>& gens) const {
    std::vector<std::int64_t> members{index_of(identity())};
    std::unordered_set<std::int64_t> seen(members.begin(), members.end());
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Element g = element_at(members[head]);
      for (const auto& s : gens) {
        const std::int64_t idx = index_of(add(g, s));
        if (seen.insert(idx).second) members.push_back(idx);
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.d_ == b.d_; }

private:
  std::vector<std::int64_t> d_;
  std::int64_t exponent_ = 1;
  std::int64_t order_ = 1;
};

// chi(g) = zeta_K^(sum c_i g_i K/d_i), K the group exponent.
struct Character {
  std::vector<std::int64_t> exponents;
  friend auto operator<=>(const Character&, const Character&) = default;
};

inline Character trivial_character(const FiniteAbelianGroup& g) { return {std::vector<std::int64_t>(g.rank(), 0)}; }

inline bool character_belongs(const FiniteAbelianGroup& g, const Character& chi) { return g.contains(chi.exponents); }

// Exponent j with chi(g) = zeta_K^j, 0 <= j < K.
inline std::int64_t character_exponent(const FiniteAbelianGroup& grp, const Character& chi, const Element& g) {
  const std::int64_t k = grp.exponent();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    acc = (acc + (chi.exponents[i] * g[i]) % grp.cyclic_orders()[i] * (k / grp.cyclic_orders()[i])) % k;
  }
  return acc;
}

inline Character character_product(const FiniteAbelianGroup& grp, const Character& a, const Character& b) {
  return {grp.add(a.exponents, b.exponents)};
}

// Calls fn(chi) for every character of the group in lexicographic exponent order.
template <class Fn>
void for_each_character(const FiniteAbelianGroup& grp, Fn&& fn) {
  for (std::int64_t idx = 0; idx < grp.order(); ++idx) fn(Character{grp.element_at(idx)});
}

struct AbstractPrime {
  std::string label;
  std::int64_t norm = 2;
  std::vector<Element> inertia;  // generators
  Element frobenius;
  friend bool operator==(const AbstractPrime&, const AbstractPrime&) = default;
};

struct LDatum {
  FiniteAbelianGroup group;
  std::vector<AbstractPrime> primes;

  void validate() const {
    std::set<std::string> labels;
    for (const auto& p : primes) {
      if (!labels.insert(p.label).second) throw InvalidDatum("duplicate prime label " + p.label);
      if (p.norm < 2) throw InvalidDatum("prime " + p.label + " has norm < 2");
      if (!group.contains(p.frobenius)) throw InvalidDatum("frobenius of " + p.label + " not in group");
      for (const auto& g : p.inertia)
        if (!group.contains(g)) throw InvalidDatum("inertia generator of " + p.label + " not in group");
    }
  }

  // Indices of primes with the given norm, in datum order.
  std::vector<std::size_t> primes_of_norm(std::int64_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i].norm == n) out.push_back(i);
    return out;
  }
  std::set<std::int64_t> norms() const {
    std::set<std::int64_t> out;
    for (const auto& p : primes) out.insert(p.norm);
    return out;
  }
  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i].label == label) return i;
    return std::nullopt;
  }

  friend bool operator==(const LDatum& a, const LDatum& b) { return a.group == b.group && a.primes == b.primes; }
};

// chi(P) as an exponent of zeta_K, or nullopt when chi is ramified at P.
inline std::optional<std::int64_t> char_exponent(const FiniteAbelianGroup& grp, const Character& chi,
                                                 const AbstractPrime& p) {
  for (const auto& g : p.inertia)
    if (character_exponent(grp, chi, g) != 0) return std::nullopt;
  return character_exponent(grp, chi, p.frobenius);
}

inline CycloInt char_value(const LDatum& d, const Character& chi, const AbstractPrime& p) {
  if (!character_belongs(d.group, chi)) throw GroupMismatch("character does not belong to the datum's group");
  const auto k = static_cast<unsigned>(d.group.exponent());
  const auto e = char_exponent(d.group, chi, p);
  return e ? CycloInt::root(k, *e) : CycloInt::zero(k);
}

struct NormLevelCounts {
  std::vector<std::size_t> unramified;  // U_N(chi), as prime indices
  std::size_t u = 0;  // |U_N(chi)|
  std::size_t v = 0;  // primes of U_N(chi) with value exactly 1
  std::size_t c = 0;  // all primes of norm N
};

inline NormLevelCounts unramified_at_norm(const LDatum& d, const Character& chi, std::int64_t n) {
  if (!character_belongs(d.group, chi)) throw GroupMismatch("character does not belong to the datum's group");
  NormLevelCounts out;
  for (std::size_t i : d.primes_of_norm(n)) {
    ++out.c;
    const auto e = char_exponent(d.group, chi, d.primes[i]);
    if (!e) continue;
    out.unramified.push_back(i);
    ++out.u;
    if (*e == 0) ++out.v;
  }
  return out;
}

// X_N(chi): sum of chi(P) over primes of norm N (ramified primes add 0).
inline CycloInt x_sum(const LDatum& d, const Character& chi, std::int64_t n) {
  if (!character_belongs(d.group, chi)) throw GroupMismatch("character does not belong to the datum's group");
  const auto k = static_cast<unsigned>(d.group.exponent());
  CycloInt s = CycloInt::zero(k);
  for (std::size_t i : d.primes_of_norm(n)) {
    if (const auto e = char_exponent(d.group, chi, d.primes[i])) s += CycloInt::root(k, *e);
  }
  return s;
}

// Euler product over unramified primes, truncated at limit.
inline DirichletSeries<CycloInt> truncated_l(const LDatum& d, const Character& chi, std::size_t limit) {
  if (!character_belongs(d.group, chi)) throw GroupMismatch("character does not belong to the datum's group");
  const auto k = static_cast<unsigned>(d.group.exponent());
  auto l = DirichletSeries<CycloInt>::identity(limit, CycloInt::zero(k), CycloInt::one(k));
  for (const auto& p : d.primes) {
    if (static_cast<std::size_t>(p.norm) > limit) continue;
    if (const auto e = char_exponent(d.group, chi, p))
      l.apply_euler_factor(static_cast<std::size_t>(p.norm), CycloInt::root(k, *e));
  }
  return l;
}

}  // namespace lrecon
