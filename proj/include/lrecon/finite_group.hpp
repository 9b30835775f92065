#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lrecon/errors.hpp"

namespace lrecon {

inline constexpr std::size_t kMaxValidatedGroupOrder = 10'000;

// Finite group given by its multiplication table; elements are 0..order-1.
class FiniteGroup {
public:
  FiniteGroup() : FiniteGroup({{0}}, 0) {}
  FiniteGroup(std::vector<std::vector<int>> table, int identity, std::vector<int> generators = {},
              std::vector<std::string> names = {})
      : table_(std::move(table)), identity_(identity), generators_(std::move(generators)), names_(std::move(names)) {
    const int n = order();
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& row : table_)
      if (static_cast<int>(row.size()) != n) throw InvalidDatum("multiplication table is not square");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int c = table_[a][b];
        if (c < 0 || c >= n) throw InvalidDatum("multiplication table entry out of range");
        if (c == identity_) inverse_[static_cast<std::size_t>(a)] = b;
      }
    for (int a = 0; a < n; ++a) {
      if (table_[a][identity_] != a || table_[identity_][a] != a) throw InvalidDatum("identity element is wrong");
      if (inverse_[static_cast<std::size_t>(a)] < 0) throw InvalidDatum("element without inverse");
    }
    if (static_cast<std::size_t>(n) <= kMaxValidatedGroupOrder) {
      // Light's test: (xb)y = x(by) for b in a generating set implies associativity.
      std::vector<int> gens;
      std::vector<bool> reached(static_cast<std::size_t>(n), false);
      for (int a = 0; a < n; ++a) {
        if (reached[static_cast<std::size_t>(a)]) continue;
        gens.push_back(a);
        std::vector<int> members{identity_};
        std::fill(reached.begin(), reached.end(), false);
        reached[static_cast<std::size_t>(identity_)] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
          for (int g : gens) {
            const int x = mul(members[head], g);
            if (!reached[static_cast<std::size_t>(x)]) {
              reached[static_cast<std::size_t>(x)] = true;
              members.push_back(x);
            }
          }
      }
      for (int b : gens)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (mul(mul(x, b), y) != mul(x, mul(b, y))) throw InvalidDatum("multiplication is not associative");
    }
  }

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }  // h g h^-1
  int pow(int a, long e) const {
    int r = identity_;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  int element_order(int a) const {
    int r = a, k = 1;
    while (r != identity_) {
      r = mul(r, a);
      ++k;
    }
    return k;
  }
  int exponent() const {
    int e = 1;
    for (int a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
    return e;
  }
  const std::vector<int>& generators() const { return generators_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::string name(int a) const {
    return static_cast<std::size_t>(a) < names_.size() ? names_[static_cast<std::size_t>(a)] : std::to_string(a);
  }

  // Closure of gens, as a sorted element list.
  std::vector<int> subgroup(const std::vector<int>& gens) const {
    std::vector<int> members{identity_};
    std::vector<bool> seen(static_cast<std::size_t>(order()), false);
    seen[static_cast<std::size_t>(identity_)] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int s : gens) {
        const int x = mul(members[head], s);
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = true;
          members.push_back(x);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  static FiniteGroup cyclic(int n);
  // Order 2n, elements r^i s^f stored at index i + n f; generators {r, s}.
  static FiniteGroup dihedral(int n);
  // All permutations of {0..n-1}, lexicographic; composition (a*b)(x) = a(b(x)).
  static FiniteGroup symmetric(int n);

private:
  std::vector<std::vector<int>> table_;
  int identity_;
  std::vector<int> generators_;
  std::vector<std::string> names_;
  std::vector<int> inverse_;
};

inline FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return FiniteGroup(std::move(t), 0, n > 1 ? std::vector<int>{1} : std::vector<int>{}, std::move(names));
}

inline FiniteGroup FiniteGroup::dihedral(int n) {
  const int order = 2 * n;
  auto idx = [n](int i, int f) { return ((i % n) + n) % n + n * f; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int a = 0; a < order; ++a) {
    const int i = a % n, f = a / n;
    std::string r = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    names[static_cast<std::size_t>(a)] = f ? r + "s" : (r.empty() ? "e" : r);
    for (int b = 0; b < order; ++b) {
      const int j = b % n, g = b / n;
      // r^i s^f r^j s^g = r^(i + (-1)^f j) s^(f+g), using s r s = r^-1
      t[a][b] = idx(f ? i - j : i + j, (f + g) % 2);
    }
  }
  return FiniteGroup(std::move(t), 0, {1 % order, n}, std::move(names));
}

inline FiniteGroup FiniteGroup::symmetric(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const std::size_t order = perms.size();
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < order; ++a) {
    std::string s = "[";
    for (int x : perms[a]) s += std::to_string(x);
    names.push_back(s + "]");
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      t[a][b] = index.at(c);
    }
  }
  std::vector<int> gens;
  if (n >= 2) {
    std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int x = 0; x < n; ++x) cycle[static_cast<std::size_t>(x)] = (x + 1) % n;
    gens = {index.at(swap), index.at(cycle)};
  }
  return FiniteGroup(std::move(t), 0, std::move(gens), std::move(names));
}

// Left multiplication action of G on the left cosets gH. Coset 0 is H itself.
class CosetAction {
public:
  CosetAction(FiniteGroup g, std::vector<int> subgroup) : group_(std::move(g)), subgroup_(std::move(subgroup)) {
    std::sort(subgroup_.begin(), subgroup_.end());
    if (group_.subgroup(subgroup_) != subgroup_) throw InvalidDatum("subgroup is not closed");
    coset_of_.assign(static_cast<std::size_t>(group_.order()), -1);
    std::vector<int> scan{group_.identity()};
    for (int t = 0; t < group_.order(); ++t)
      if (t != group_.identity()) scan.push_back(t);
    for (int t : scan) {
      if (coset_of_[static_cast<std::size_t>(t)] >= 0) continue;
      const int c = static_cast<int>(representatives_.size());
      representatives_.push_back(t);
      for (int h : subgroup_) coset_of_[static_cast<std::size_t>(group_.mul(t, h))] = c;
    }
    action_.assign(static_cast<std::size_t>(group_.order()), std::vector<int>(representatives_.size()));
    for (int g = 0; g < group_.order(); ++g)
      for (std::size_t c = 0; c < representatives_.size(); ++c)
        action_[g][c] = coset_of_[static_cast<std::size_t>(group_.mul(g, representatives_[c]))];
  }

  const FiniteGroup& group() const { return group_; }
  const std::vector<int>& subgroup() const { return subgroup_; }
  int cosets() const { return static_cast<int>(representatives_.size()); }
  // Representative t_c with t_0 = identity.
  int representative(int c) const { return representatives_[static_cast<std::size_t>(c)]; }
  int coset_of(int g) const { return coset_of_[static_cast<std::size_t>(g)]; }
  int act(int g, int c) const { return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)]; }

private:
  FiniteGroup group_;
  std::vector<int> subgroup_;
  std::vector<int> representatives_;
  std::vector<int> coset_of_;
  std::vector<std::vector<int>> action_;
};

}  // namespace lrecon
