#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"
#include "lrecon/ldata.hpp"
#include "lrecon/poly_z.hpp"
#include "lrecon/recon.hpp"

namespace lrecon {

struct RichDatumConfig {
  unsigned k = 3;
  std::int64_t max_norm = 30;
  std::size_t max_levels = 10;
  std::size_t max_primes = 30;
  std::size_t max_per_level = 3;
  unsigned ramified_percent = 20;
};

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

inline bool is_prime_power(std::int64_t n) {
  if (n < 2) return false;
  std::int64_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Random matrix over Z/k whose determinant is a unit; columns returned.
inline std::vector<Element> random_invertible_columns(std::size_t m, std::int64_t k, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::vector<Integer>> mat(m, std::vector<Integer>(m));
    std::vector<Element> cols(m, Element(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const auto v = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(k)));
        mat[r][c] = static_cast<long>(v);
        cols[c][r] = v;
      }
    Integer det = bareiss_determinant(mat) % Integer(static_cast<long>(k));
    if (det < 0) det += static_cast<long>(k);
    if (std::gcd(det.get_si(), k) == 1) return cols;
  }
}

}  // namespace detail

// Random datum over (Z/k)^m in which every norm level is rich: the Frobenius
// elements of a level, together with the inertia generators of its ramified
// primes, are part of a basis. m is the largest per-level count of such elements.
inline LDatum generate_rich_datum(const RichDatumConfig& cfg, std::mt19937_64& rng) {
  if (cfg.k < 2 || cfg.max_per_level < 1 || cfg.max_levels < 1 || cfg.max_primes < 1)
    throw InvalidDatum("invalid generator configuration");
  std::vector<std::int64_t> norms;
  for (std::int64_t n = 2; n <= cfg.max_norm; ++n)
    if (detail::is_prime_power(n)) norms.push_back(n);
  if (norms.empty()) throw InvalidDatum("no prime-power norms below the bound");
  detail::shuffle(norms, rng);
  const std::size_t levels = std::min<std::size_t>(1 + detail::draw(rng, cfg.max_levels), norms.size());
  norms.resize(levels);
  std::sort(norms.begin(), norms.end());

  struct Level {
    std::int64_t norm;
    std::size_t count;
    std::vector<bool> ramified;
  };
  std::vector<Level> plan;
  std::size_t total = 0, rank = 1;
  for (auto n : norms) {
    if (total >= cfg.max_primes) break;
    std::size_t c = 1 + detail::draw(rng, cfg.max_per_level);
    c = std::min(c, cfg.max_primes - total);
    Level lv{n, c, std::vector<bool>(c, false)};
    std::size_t r = 0;
    for (std::size_t i = 0; i < c; ++i) {
      lv.ramified[i] = detail::draw(rng, 100) < cfg.ramified_percent;
      r += lv.ramified[i];
    }
    rank = std::max(rank, c + r);
    total += c;
    plan.push_back(std::move(lv));
  }

  LDatum d;
  d.group = FiniteAbelianGroup(std::vector<std::int64_t>(rank, static_cast<std::int64_t>(cfg.k)));
  std::size_t label = 0;
  for (const auto& lv : plan) {
    const auto cols = detail::random_invertible_columns(rank, cfg.k, rng);
    std::size_t next_inertia = lv.count;
    for (std::size_t i = 0; i < lv.count; ++i) {
      AbstractPrime p;
      p.label = "p" + std::to_string(++label);
      p.norm = lv.norm;
      p.frobenius = cols[i];
      if (lv.ramified[i]) p.inertia.push_back(cols[next_inertia++]);
      d.primes.push_back(std::move(p));
    }
  }
  return d;
}

struct ScrambledPair {
  IsoPair pair;
  std::map<std::string, std::string> sigma;  // planted source -> target labels
};

// Relabels the primes by a random permutation and transports the group data
// along a random automorphism psi.
inline ScrambledPair scramble(const LDatum& source, unsigned k, std::mt19937_64& rng) {
  const auto& grp = source.group;
  const std::int64_t big_k = grp.exponent();
  for (auto d : grp.cyclic_orders())
    if (d != big_k) throw InvalidDatum("scramble expects a homocyclic group (Z/k)^m");
  const auto images = detail::random_invertible_columns(grp.rank(), big_k, rng);
  auto apply = [&](const Element& g) {
    Element r = grp.identity();
    for (std::size_t i = 0; i < g.size(); ++i) r = grp.add(r, grp.scale(images[i], g[i]));
    return r;
  };
  std::vector<std::size_t> perm(source.primes.size());
  std::iota(perm.begin(), perm.end(), 0);
  detail::shuffle(perm, rng);

  LDatum target;
  target.group = grp;
  target.primes.resize(source.primes.size());
  std::map<std::string, std::string> sigma;
  for (std::size_t i = 0; i < source.primes.size(); ++i) {
    const auto& p = source.primes[i];
    AbstractPrime q;
    q.label = "q" + std::to_string(perm[i] + 1);
    q.norm = p.norm;
    q.frobenius = apply(p.frobenius);
    for (const auto& g : p.inertia) q.inertia.push_back(apply(g));
    sigma[p.label] = q.label;
    target.primes[perm[i]] = std::move(q);
  }
  return {IsoPair(source, std::move(target), images, k), std::move(sigma)};
}

// Shifts the Frobenius of one random target prime off its class modulo inertia.
inline IsoPair tamper_frobenius(const IsoPair& pair, std::mt19937_64& rng) {
  LDatum target = pair.target();
  if (target.primes.empty()) throw InvalidDatum("nothing to tamper with");
  const auto& grp = target.group;
  auto& q = target.primes[detail::draw(rng, target.primes.size())];
  const auto inertia = grp.subgroup(q.inertia);
  if (static_cast<std::int64_t>(inertia.size()) == grp.order()) throw InvalidDatum("inertia is the whole group");
  while (true) {
    const auto idx = static_cast<std::int64_t>(detail::draw(rng, static_cast<std::uint64_t>(grp.order())));
    if (std::binary_search(inertia.begin(), inertia.end(), idx)) continue;
    q.frobenius = grp.add(q.frobenius, grp.element_at(idx));
    break;
  }
  return IsoPair(pair.source(), std::move(target), pair.images(), pair.k());
}

}  // namespace lrecon
