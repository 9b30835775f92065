#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lrecon/cyclo.hpp"
#include "lrecon/errors.hpp"
#include "lrecon/finite_group.hpp"
#include "lrecon/monomial.hpp"

namespace lrecon {

inline constexpr int kMaxStructureDimension = 8;
inline constexpr int kMaxStructureGroupOrder = 200;

using Vector = std::vector<CycloRat>;
using Matrix = std::vector<Vector>;

// Q(zeta_k) contains exactly the roots of unity mu_K, K = lcm(2, k).
inline unsigned field_conductor(unsigned k) { return k % 2 == 0 ? k : 2 * k; }

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const CycloRat inv = inverse(m[row][c]);
    for (auto& x : m[row]) x = x * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const CycloRat f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline std::string vector_key(const Vector& v) {
  std::string s;
  for (const auto& x : v) {
    for (const auto& c : x.coords()) s += c.get_str() + ",";
    s += ";";
  }
  return s;
}

inline std::string matrix_key(const Matrix& m) {
  std::string s;
  for (const auto& row : m) s += vector_key(row) + "|";
  return s;
}

// Scales v so that its first nonzero coordinate is 1.
inline Vector normalize_line(Vector v) {
  for (const auto& x : v)
    if (!x.is_zero()) {
      const CycloRat inv = inverse(x);
      for (auto& y : v) y = y * inv;
      break;
    }
  return v;
}

// Spanning vector of the kernel of a rank n-1 RREF matrix.
inline Vector kernel_line(const Matrix& rref_rows, std::size_t n, unsigned field) {
  std::vector<bool> pivot(n, false);
  std::vector<std::size_t> pivot_col;
  for (const auto& row : rref_rows) {
    std::size_t c = 0;
    while (row[c].is_zero()) ++c;
    pivot[c] = true;
    pivot_col.push_back(c);
  }
  std::size_t free = 0;
  while (pivot[free]) ++free;
  Vector v(n, CycloRat::zero(field));
  v[free] = CycloRat::one(field);
  for (std::size_t r = 0; r < rref_rows.size(); ++r) v[pivot_col[r]] = -rref_rows[r][free];
  return normalize_line(v);
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

}  // namespace detail

// rho(g) as a dense matrix over Q(zeta_K).
inline Matrix dense_matrix(const MonomialRep& rep, int g, unsigned field) {
  const auto n = static_cast<std::size_t>(rep.dimension());
  Matrix m(n, Vector(n, CycloRat::zero(field)));
  const auto& mm = rep.matrix(g);
  const long step = field / rep.k();
  for (std::size_t j = 0; j < n; ++j) m[static_cast<std::size_t>(mm.perm[j])][j] = CycloRat::root(field, mm.diag[j] * step);
  return m;
}

inline Vector apply(const MonomialRep& rep, int g, const Vector& v, unsigned field) {
  const auto& mm = rep.matrix(g);
  const long step = field / rep.k();
  Vector out(v.size(), CycloRat::zero(field));
  for (std::size_t j = 0; j < v.size(); ++j)
    out[static_cast<std::size_t>(mm.perm[j])] = v[j] * CycloRat::root(field, mm.diag[j] * step);
  return out;
}

// Finite G-set: action[g][x] is the image of point x under g.
struct GSet {
  std::vector<std::vector<int>> action;
  int points() const { return action.empty() ? 0 : static_cast<int>(action[0].size()); }
};

struct MonomialStructure {
  std::vector<Vector> lines;     // normalized, sorted by key
  std::vector<int> orbit_sizes;  // sorted
  GSet gset;
};

struct StructureReport {
  unsigned field = 2;
  std::vector<MonomialStructure> structures;
  std::vector<int> iso_class;  // G-set isomorphism class of each structure
  int iso_classes = 0;
};

namespace detail {

inline std::vector<int> stabilizer(const GSet& s, int x) {
  std::vector<int> out;
  for (std::size_t g = 0; g < s.action.size(); ++g)
    if (s.action[g][static_cast<std::size_t>(x)] == x) out.push_back(static_cast<int>(g));
  return out;
}

inline std::vector<std::vector<int>> orbits(const GSet& s) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(s.points()), false);
  for (int x = 0; x < s.points(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::set<int> orb;
    for (const auto& perm : s.action) orb.insert(perm[static_cast<std::size_t>(x)]);
    for (int y : orb) seen[static_cast<std::size_t>(y)] = true;
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

}  // namespace detail

// Two G-sets are isomorphic iff their orbits pair up with equal point stabilizers.
inline bool gset_isomorphic(const GSet& a, const GSet& b) {
  if (a.points() != b.points() || a.action.size() != b.action.size()) return false;
  const auto oa = detail::orbits(a), ob = detail::orbits(b);
  if (oa.size() != ob.size()) return false;
  std::vector<std::vector<int>> sa, sb;
  for (const auto& o : oa) sa.push_back(detail::stabilizer(a, o[0]));
  std::vector<std::vector<std::vector<int>>> stabs_b;  // all stabilizers in each orbit of b
  for (const auto& o : ob) {
    std::vector<std::vector<int>> s;
    for (int y : o) s.push_back(detail::stabilizer(b, y));
    stabs_b.push_back(std::move(s));
  }
  std::vector<bool> used(ob.size(), false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == oa.size()) return true;
    for (std::size_t j = 0; j < ob.size(); ++j) {
      if (used[j] || ob[j].size() != oa[i].size()) continue;
      if (std::find(stabs_b[j].begin(), stabs_b[j].end(), sa[i]) == stabs_b[j].end()) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

// Lines that are full joint eigenspaces of the given elements.
inline std::vector<Vector> joint_eigenlines(const MonomialRep& rep, const std::vector<int>& elements) {
  const unsigned field = field_conductor(rep.k());
  const auto n = static_cast<std::size_t>(rep.dimension());
  std::vector<Matrix> current{Matrix{}};  // constraint rows; empty = whole space
  for (int g : elements) {
    const Matrix m = dense_matrix(rep, g, field);
    std::vector<Matrix> next;
    for (const auto& cons : current) {
      for (unsigned j = 0; j < field; ++j) {
        Matrix rows = cons;
        for (std::size_t r = 0; r < n; ++r) {
          Vector row = m[r];
          row[r] -= CycloRat::root(field, j);
          rows.push_back(std::move(row));
        }
        detail::rref(rows);
        if (rows.size() < n) next.push_back(std::move(rows));
      }
    }
    current = std::move(next);
  }
  std::vector<Vector> out;
  for (const auto& cons : current)
    if (cons.size() + 1 == n) out.push_back(detail::kernel_line(cons, n, field));
  if (n == 1 && current.size() == 1 && current[0].empty()) out.push_back(Vector{CycloRat::one(field)});
  std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) { return detail::vector_key(a) < detail::vector_key(b); });
  return out;
}

inline std::vector<Vector> coordinate_lines(int dim, unsigned field) {
  std::vector<Vector> out;
  for (int i = 0; i < dim; ++i) {
    Vector v(static_cast<std::size_t>(dim), CycloRat::zero(field));
    v[static_cast<std::size_t>(i)] = CycloRat::one(field);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const Vector& a, const Vector& b) { return detail::vector_key(a) < detail::vector_key(b); });
  return out;
}

// All decompositions of the representation space into n lines over Q(zeta_K)
// permuted by G. Every line of such a decomposition is an intersection of
// eigenspaces of group elements, so candidates come from that closure.
inline StructureReport enumerate_monomial_structures(const MonomialRep& rep) {
  const int dim = rep.dimension();
  const int order = rep.group().order();
  if (dim > kMaxStructureDimension || order > kMaxStructureGroupOrder)
    throw EnvelopeExceeded("structure enumeration is limited to dimension <= " + std::to_string(kMaxStructureDimension) +
                           " and |G| <= " + std::to_string(kMaxStructureGroupOrder));
  StructureReport report;
  const unsigned field = field_conductor(rep.k());
  report.field = field;
  const auto n = static_cast<std::size_t>(dim);

  std::vector<Matrix> eigen;
  std::set<std::string> eigen_keys;
  for (int g = 0; g < order; ++g) {
    const Matrix m = dense_matrix(rep, g, field);
    for (unsigned j = 0; j < field; ++j) {
      Matrix rows = m;
      for (std::size_t r = 0; r < n; ++r) rows[r][r] -= CycloRat::root(field, j);
      detail::rref(rows);
      if (rows.empty() || rows.size() >= n) continue;  // whole space or zero
      if (eigen_keys.insert(detail::matrix_key(rows)).second) eigen.push_back(std::move(rows));
    }
  }
  std::map<std::string, Matrix> closure;
  std::vector<Matrix> queue;
  for (const auto& e : eigen)
    if (closure.emplace(detail::matrix_key(e), e).second) queue.push_back(e);
  if (n == 1) queue.push_back(Matrix{});
  std::map<std::string, Vector> lines;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Matrix u = queue[head];
    if (u.size() + 1 == n) {
      Vector v = detail::kernel_line(u, n, field);
      lines.emplace(detail::vector_key(v), std::move(v));
      continue;
    }
    for (const auto& e : eigen) {
      Matrix rows = u;
      rows.insert(rows.end(), e.begin(), e.end());
      detail::rref(rows);
      if (rows.size() >= n) continue;
      const std::string key = detail::matrix_key(rows);
      if (closure.emplace(key, rows).second) queue.push_back(std::move(rows));
    }
  }
  if (n == 1) lines.emplace(detail::vector_key(Vector{CycloRat::one(field)}), Vector{CycloRat::one(field)});

  // G-orbits of candidate lines.
  std::vector<Vector> cand;
  std::map<std::string, int> index;
  for (auto& [key, v] : lines) {
    index[key] = static_cast<int>(cand.size());
    cand.push_back(v);
  }
  std::vector<std::vector<int>> act(static_cast<std::size_t>(order), std::vector<int>(cand.size()));
  for (int g = 0; g < order; ++g)
    for (std::size_t i = 0; i < cand.size(); ++i)
      act[static_cast<std::size_t>(g)][i] = index.at(detail::vector_key(detail::normalize_line(apply(rep, g, cand[i], field))));
  std::vector<std::vector<int>> orbs;
  {
    std::vector<bool> seen(cand.size(), false);
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (seen[i]) continue;
      std::set<int> orb;
      for (int g = 0; g < order; ++g) orb.insert(act[static_cast<std::size_t>(g)][i]);
      for (int x : orb) seen[static_cast<std::size_t>(x)] = true;
      orbs.emplace_back(orb.begin(), orb.end());
    }
  }

  // Unions of orbits with n independent lines.
  std::vector<int> chosen;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t from, std::size_t total) {
    if (total == n) {
      Matrix rows;
      std::vector<int> pts;
      for (int o : chosen)
        for (int x : orbs[static_cast<std::size_t>(o)]) {
          rows.push_back(cand[static_cast<std::size_t>(x)]);
          pts.push_back(x);
        }
      if (detail::rank(rows) != n) return;
      MonomialStructure s;
      std::sort(pts.begin(), pts.end());  // candidate order is key order
      std::map<int, int> local;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        local[pts[i]] = static_cast<int>(i);
        s.lines.push_back(cand[static_cast<std::size_t>(pts[i])]);
      }
      for (int g = 0; g < order; ++g) {
        std::vector<int> perm;
        for (int x : pts) perm.push_back(local.at(act[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]));
        s.gset.action.push_back(std::move(perm));
      }
      for (int o : chosen) s.orbit_sizes.push_back(static_cast<int>(orbs[static_cast<std::size_t>(o)].size()));
      std::sort(s.orbit_sizes.begin(), s.orbit_sizes.end());
      report.structures.push_back(std::move(s));
      return;
    }
    for (std::size_t o = from; o < orbs.size(); ++o) {
      if (total + orbs[o].size() > n) continue;
      chosen.push_back(static_cast<int>(o));
      search(o + 1, total + orbs[o].size());
      chosen.pop_back();
    }
  };
  search(0, 0);

  for (std::size_t i = 0; i < report.structures.size(); ++i) {
    int cls = -1;
    for (std::size_t j = 0; j < i && cls < 0; ++j)
      if (gset_isomorphic(report.structures[i].gset, report.structures[j].gset)) cls = report.iso_class[j];
    if (cls < 0) cls = report.iso_classes++;
    report.iso_class.push_back(cls);
  }
  return report;
}

}  // namespace lrecon
