#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrecon/cyclo.hpp"
#include "lrecon/errors.hpp"
#include "lrecon/ldata.hpp"

namespace lrecon {

// Groups larger than this are not enumerated element by element.
inline constexpr std::int64_t kMaxEnumeratedGroupOrder = 1 << 20;

// Two L-data with a group isomorphism psi given on the source generators, and
// the order k of the distinguished root of unity zeta = exp(2 pi i / k).
class IsoPair {
public:
  IsoPair(LDatum source, LDatum target, std::vector<Element> images, unsigned k)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), k_(k) {
    source_.validate();
    target_.validate();
    if (k_ < 3) throw InvalidDatum("k must be at least 3");
    const auto& sg = source_.group;
    const auto& tg = target_.group;
    if (images_.size() != sg.rank()) throw NotAnIsomorphism("one image per source generator is required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (!tg.contains(images_[i])) throw NotAnIsomorphism("generator image outside the target group");
      if (tg.scale(images_[i], sg.cyclic_orders()[i]) != tg.identity())
        throw NotAnIsomorphism("image order does not divide the generator order");
    }
    if (sg.order() != tg.order()) throw NotAnIsomorphism("group orders differ");
    if (sg.order() > kMaxEnumeratedGroupOrder) throw EnvelopeExceeded("group too large to enumerate");
    if (static_cast<std::int64_t>(tg.subgroup(images_).size()) != tg.order())
      throw NotAnIsomorphism("images do not generate the target group");
    // Preimages of the target generators.
    std::vector<std::int64_t> preimage(static_cast<std::size_t>(tg.order()), -1);
    for (std::int64_t idx = 0; idx < sg.order(); ++idx) preimage[static_cast<std::size_t>(tg.index_of(psi(sg.element_at(idx))))] = idx;
    for (std::size_t j = 0; j < tg.rank(); ++j)
      inverse_images_.push_back(sg.element_at(preimage[static_cast<std::size_t>(tg.index_of(tg.generator(j)))]));
  }

  const LDatum& source() const { return source_; }
  const LDatum& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }
  unsigned k() const { return k_; }

  Element psi(const Element& g) const {
    const auto& tg = target_.group;
    Element r = tg.identity();
    for (std::size_t i = 0; i < g.size(); ++i) r = tg.add(r, tg.scale(images_[i], g[i]));
    return r;
  }

  // chi o psi^{-1}
  Character psi_check(const Character& chi) const {
    if (!character_belongs(source_.group, chi)) throw GroupMismatch("character is not over the source group");
    const auto& tg = target_.group;
    const std::int64_t big_k = tg.exponent();
    Character out{std::vector<std::int64_t>(tg.rank(), 0)};
    for (std::size_t j = 0; j < tg.rank(); ++j) {
      const std::int64_t v = character_exponent(source_.group, chi, inverse_images_[j]);
      out.exponents[j] = v / (big_k / tg.cyclic_orders()[j]);
    }
    return out;
  }

private:
  LDatum source_;
  LDatum target_;
  std::vector<Element> images_;
  std::vector<Element> inverse_images_;
  unsigned k_;
};

enum class Side { source, target };

struct Xi2Member {
  Character chi;
  std::size_t special_prime;  // index of p_chi in the datum
};

struct XiClasses {
  std::vector<Character> xi1;
  std::vector<Xi2Member> xi2;
};

namespace detail {

// zeta_K^e == zeta_k, compared in the cyclotomic ring of conductor lcm(K, k).
inline bool is_distinguished_root(std::int64_t e, std::int64_t big_k, std::int64_t k) {
  const std::int64_t l = std::lcm(big_k, k);
  return (e * (l / big_k)) % l == l / k;
}

// Classification of chi at level n: 1 for Xi^1, 2 for Xi^2 (with the special
// prime), 0 otherwise.
inline std::pair<int, std::size_t> xi_level(const LDatum& d, const Character& chi, std::int64_t n, unsigned k) {
  const auto& grp = d.group;
  std::size_t count = 0, ones = 0, special = 0, specials = 0;
  for (std::size_t i = 0; i < d.primes.size(); ++i) {
    if (d.primes[i].norm != n) continue;
    ++count;
    const auto e = char_exponent(grp, chi, d.primes[i]);
    if (!e) return {0, 0};
    if (*e == 0) {
      ++ones;
    } else if (is_distinguished_root(*e, grp.exponent(), k)) {
      ++specials;
      special = i;
    } else {
      return {0, 0};
    }
  }
  if (ones == count) return {1, 0};
  if (specials == 1 && ones + 1 == count) return {2, special};
  return {0, 0};
}

inline std::string character_string(const Character& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.exponents.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(chi.exponents[i]);
  }
  return s + ")";
}

}  // namespace detail

inline XiClasses classify_xi(const IsoPair& pair, Side side, std::int64_t n) {
  const LDatum& d = side == Side::source ? pair.source() : pair.target();
  XiClasses out;
  for_each_character(d.group, [&](const Character& chi) {
    const auto [cls, special] = detail::xi_level(d, chi, n, pair.k());
    if (cls == 1)
      out.xi1.push_back(chi);
    else if (cls == 2)
      out.xi2.push_back({chi, special});
  });
  return out;
}

struct MuKVerdict {
  bool sum_matches = false;
  std::optional<std::size_t> special_index;  // set when the conclusion shape holds
};

namespace detail {
inline std::optional<long> root_exponent(const CycloInt& v, unsigned k) {
  for (long j = 0; j < static_cast<long>(k); ++j)
    if (v == CycloInt::root(k, j)) return j;
  return std::nullopt;
}
}  // namespace detail

// Decides whether values (each 0 or a k-th root of unity) sum to n-1+zeta and,
// if so, whether they have the shape (1, ..., 1, zeta, 1, ..., 1).
inline MuKVerdict mu_k_solve(unsigned k, const std::vector<CycloInt>& values) {
  if (k < 3) throw InvalidDatum("mu_k_solve requires k >= 3");
  CycloInt sum = CycloInt::zero(k);
  std::vector<long> exps;
  for (const auto& v : values) {
    if (v.conductor() != k) throw BadRootOfUnity("value has conductor " + std::to_string(v.conductor()));
    if (v.is_zero()) {
      exps.push_back(-1);
      continue;
    }
    const auto j = detail::root_exponent(v, k);
    if (!j) throw BadRootOfUnity("value " + v.to_string() + " is neither 0 nor a root of unity");
    exps.push_back(*j);
    sum += v;
  }
  const auto n = static_cast<long>(values.size());
  const CycloInt target = CycloInt::integer(k, Integer(n - 1)) + CycloInt::root(k, 1);
  MuKVerdict verdict;
  verdict.sum_matches = sum == target;
  if (!verdict.sum_matches) return verdict;
  std::size_t zetas = 0, ones = 0, where = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 1) {
      ++zetas;
      where = i;
    } else if (exps[i] == 0) {
      ++ones;
    }
  }
  if (zetas == 1 && ones + 1 == exps.size()) verdict.special_index = where;
  return verdict;
}

struct MuKReport {
  unsigned k = 0;
  unsigned n = 0;
  std::uint64_t tuples_checked = 0;
  // Tuples summing to n-1+zeta; entries are exponents of zeta, -1 for zero.
  std::vector<std::vector<long>> matching;
  std::vector<std::vector<long>> violating;  // matching tuples not of the lemma's shape
  bool lemma_holds() const { return violating.empty(); }
};

// Enumerates all (k+1)^n tuples over mu_k and 0. Accepts k = 2 to exhibit the
// failure of the shape conclusion there.
inline MuKReport mu_k_exhaustive(unsigned k, unsigned n) {
  if (k < 2) throw InvalidDatum("k must be at least 2");
  MuKReport report{k, n, 0, {}, {}};
  const CycloInt target = CycloInt::integer(k, Integer(static_cast<long>(n) - 1)) + CycloInt::root(k, 1);
  std::vector<CycloInt> roots;
  for (unsigned j = 0; j < k; ++j) roots.push_back(CycloInt::root(k, j));
  std::vector<long> tuple(n, -1);
  while (true) {
    ++report.tuples_checked;
    CycloInt sum = CycloInt::zero(k);
    for (long e : tuple)
      if (e >= 0) sum += roots[static_cast<std::size_t>(e)];
    if (sum == target) {
      report.matching.push_back(tuple);
      std::size_t zetas = 0, ones = 0;
      for (long e : tuple) {
        if (e == 1) ++zetas;
        if (e == 0) ++ones;
      }
      if (!(zetas == 1 && ones + 1 == n)) report.violating.push_back(tuple);
    }
    std::size_t pos = 0;
    while (pos < n && ++tuple[pos] == static_cast<long>(k)) tuple[pos++] = -1;
    if (pos == n) break;
  }
  return report;
}

struct LevelMatch {
  std::int64_t norm = 0;
  std::map<std::size_t, std::size_t> phi;  // source index -> target index
  std::size_t witnesses = 0;
};

inline LevelMatch match_norm_level(const IsoPair& pair, std::int64_t n) {
  const LDatum& src = pair.source();
  const LDatum& tgt = pair.target();
  const auto s_primes = src.primes_of_norm(n);
  const auto t_primes = tgt.primes_of_norm(n);
  if (s_primes.size() != t_primes.size()) throw CardinalityMismatch(n, s_primes.size(), t_primes.size());
  LevelMatch level;
  level.norm = n;
  std::map<std::size_t, std::size_t> used_targets;  // target index -> source index
  for_each_character(src.group, [&](const Character& chi) {
    const Character image = pair.psi_check(chi);
    if (x_sum(src, chi, n) != x_sum(tgt, image, n))
      throw NotLCompatible(n, "X_N differs for character " + detail::character_string(chi));
    const auto [cls, p] = detail::xi_level(src, chi, n, pair.k());
    if (cls != 2) return;
    const auto [tcls, q] = detail::xi_level(tgt, image, n, pair.k());
    if (tcls != 2)
      throw NotLCompatible(n, "image of Xi^2 character " + detail::character_string(chi) + " is not in Xi^2");
    ++level.witnesses;
    if (auto it = level.phi.find(p); it != level.phi.end()) {
      if (it->second != q) throw NotLCompatible(n, "conflicting witnesses for prime " + src.primes[p].label);
      return;
    }
    if (auto it = used_targets.find(q); it != used_targets.end() && it->second != p)
      throw NotLCompatible(n, "target prime " + tgt.primes[q].label + " matched twice");
    level.phi.emplace(p, q);
    used_targets.emplace(q, p);
  });
  for (std::size_t p : s_primes)
    if (!level.phi.count(p)) throw InsufficientCharacters(n, src.primes[p].label);
  return level;
}

struct Certificate {
  std::size_t generator = 0;  // index of the dual-group generator
  std::string source_label;
  std::string target_label;
  CycloInt value;  // common value chi(p) = psi_check(chi)(phi(p))
};

struct MatchingResult {
  std::map<std::string, std::string> phi;
  std::vector<Certificate> certificates;
  std::vector<std::pair<std::int64_t, std::size_t>> levels;  // (norm, witnesses)
  bool certified = false;
};

namespace detail {

// psi carries the inertia subgroup of p onto that of q and the Frobenius class
// of p onto that of q.
inline bool transports(const IsoPair& pair, const AbstractPrime& p, const AbstractPrime& q) {
  const auto& tg = pair.target().group;
  std::vector<Element> mapped;
  for (const auto& g : p.inertia) mapped.push_back(pair.psi(g));
  const auto inertia_q = tg.subgroup(q.inertia);
  if (tg.subgroup(mapped) != inertia_q) return false;
  const Element diff = tg.add(pair.psi(p.frobenius), tg.neg(q.frobenius));
  return std::binary_search(inertia_q.begin(), inertia_q.end(), tg.index_of(diff));
}

}  // namespace detail

inline MatchingResult reconstruct(const IsoPair& pair) {
  const LDatum& src = pair.source();
  const LDatum& tgt = pair.target();
  auto norms = src.norms();
  for (auto n : tgt.norms()) norms.insert(n);
  for (auto n : norms) {
    const auto a = src.primes_of_norm(n).size(), b = tgt.primes_of_norm(n).size();
    if (a != b) throw CardinalityMismatch(n, a, b);
  }
  MatchingResult result;
  std::vector<std::size_t> phi(src.primes.size(), 0);
  for (auto n : norms) {
    const LevelMatch level = match_norm_level(pair, n);
    for (const auto& [p, q] : level.phi) {
      phi[p] = q;
      result.phi.emplace(src.primes[p].label, tgt.primes[q].label);
    }
    result.levels.emplace_back(n, level.witnesses);
  }
  // Certification over the dual-group generators.
  const auto& sg = src.group;
  for (std::size_t j = 0; j < sg.rank(); ++j) {
    if (sg.cyclic_orders()[j] == 1) continue;
    const Character chi{sg.generator(j)};
    const Character image = pair.psi_check(chi);
    for (std::size_t p = 0; p < src.primes.size(); ++p) {
      const CycloInt a = char_value(src, chi, src.primes[p]);
      const CycloInt b = char_value(tgt, image, tgt.primes[phi[p]]);
      if (a != b) throw NotLCompatible(src.primes[p].norm, "certificate fails at " + src.primes[p].label);
      result.certificates.push_back({j, src.primes[p].label, tgt.primes[phi[p]].label, a});
    }
  }
  for (std::size_t p = 0; p < src.primes.size(); ++p) {
    if (!detail::transports(pair, src.primes[p], tgt.primes[phi[p]]))
      throw NotLCompatible(src.primes[p].norm, "inertia/Frobenius not transported at " + src.primes[p].label);
  }
  result.certified = true;
  return result;
}

struct LEqualityReport {
  bool holds = true;
  std::optional<Character> witness;
  std::uint64_t characters_checked = 0;
};

// L(chi) == L(psi_check(chi)) up to limit, for every character of the source group.
// The matching itself is not consulted; a tampered pair yields a witness.
inline LEqualityReport frobenius_matching_implies_l_equality(const IsoPair& pair, const MatchingResult& /*result*/,
                                                             std::size_t limit) {
  LEqualityReport report;
  for_each_character(pair.source().group, [&](const Character& chi) {
    if (!report.holds) return;
    ++report.characters_checked;
    const auto a = truncated_l(pair.source(), chi, limit);
    const auto b = truncated_l(pair.target(), pair.psi_check(chi), limit);
    if (!(a == b)) {
      report.holds = false;
      report.witness = chi;
    }
  });
  return report;
}

}  // namespace lrecon
