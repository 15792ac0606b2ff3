#pragma once

// Slow, direct computations used to cross-check the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sglue/glue.hpp"
#include "sglue/lattice.hpp"
#include "sglue/predicates.hpp"

namespace sglue::oracle {

/// Order of a glued sum as a boolean matrix over the union carrier, built
/// by Floyd-Warshall over the union of the block orders.
struct ClosureOrder {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le;

  std::size_t size() const { return names.size(); }
  std::size_t index(const std::string& n) const {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
  }
  /// Least upper bound by scanning all upper bounds; size() if none.
  std::size_t sup(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> ub;
    for (std::size_t u = 0; u < size(); ++u)
      if (le[a][u] && le[b][u]) ub.push_back(u);
    for (std::size_t u : ub)
      if (std::all_of(ub.begin(), ub.end(), [&](std::size_t v) { return le[u][v]; })) return u;
    return size();
  }
  std::size_t inf(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> lb;
    for (std::size_t u = 0; u < size(); ++u)
      if (le[u][a] && le[u][b]) lb.push_back(u);
    for (std::size_t u : lb)
      if (std::all_of(lb.begin(), lb.end(), [&](std::size_t v) { return le[v][u]; })) return u;
    return size();
  }
};

inline ClosureOrder closure_order(const GluedSystem& sys) {
  ClosureOrder c;
  for (const auto& B : sys.blocks)
    for (const auto& n : B.names())
      if (std::find(c.names.begin(), c.names.end(), n) == c.names.end()) c.names.push_back(n);
  const std::size_t n = c.names.size();
  c.le.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) c.le[i][i] = true;
  for (const auto& B : sys.blocks)
    for (Elem a = 0; a < B.size(); ++a)
      for (Elem b = 0; b < B.size(); ++b)
        if (B.leq(a, b)) c.le[c.index(B.name(a))][c.index(B.name(b))] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (c.le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (c.le[k][j]) c.le[i][j] = true;
  return c;
}

/// Interval [lo, hi] is atomistic when every element is a join of atoms of
/// the interval, tested by comparing against the join of the atoms below it.
inline bool interval_is_atomistic(const FiniteLattice& L, Elem lo, Elem hi) {
  std::vector<Elem> members, atoms;
  for (Elem c = 0; c < L.size(); ++c)
    if (L.leq(lo, c) && L.leq(c, hi)) members.push_back(c);
  for (Elem c : members) {
    if (c == lo) continue;
    bool atom = true;
    for (Elem d : members)
      if (d != lo && d != c && L.leq(d, c)) atom = false;
    if (atom) atoms.push_back(c);
  }
  for (Elem c : members) {
    // Least element of the interval above every atom below c.
    std::vector<Elem> below;
    for (Elem a : atoms)
      if (L.leq(a, c)) below.push_back(a);
    Elem acc = lo;
    for (Elem a : below) {
      // join inside the parent; the interval is a sublattice
      Elem best = kNone;
      for (Elem u : members)
        if (L.leq(acc, u) && L.leq(a, u) && (best == kNone || L.leq(u, best))) best = u;
      acc = best;
    }
    if (acc != c) return false;
  }
  return true;
}

/// Minima of the maximal atomistic intervals, found by testing every
/// comparable pair.
inline std::vector<Elem> maximal_atomistic_minima(const FiniteLattice& L) {
  struct Iv {
    Elem lo, hi;
  };
  std::vector<Iv> atomistic;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (L.leq(a, b) && interval_is_atomistic(L, a, b)) atomistic.push_back({a, b});
  std::vector<Elem> out;
  for (const auto& iv : atomistic) {
    bool maximal = true;
    for (const auto& other : atomistic)
      if ((other.lo != iv.lo || other.hi != iv.hi) && L.leq(other.lo, iv.lo) && L.leq(iv.hi, other.hi)) maximal = false;
    if (maximal) out.push_back(iv.lo);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Congruence generated by (a, b): grow a relation matrix until it is an
/// equivalence compatible with join and meet.
inline std::vector<std::vector<bool>> naive_congruence(const FiniteLattice& L, Elem a, Elem b) {
  const std::size_t n = L.size();
  std::vector<std::vector<bool>> th(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) th[i][i] = true;
  th[a][b] = th[b][a] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](std::size_t x, std::size_t y) {
      if (!th[x][y]) {
        th[x][y] = th[y][x] = true;
        changed = true;
      }
    };
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (!th[x][y]) continue;
        for (Elem z = 0; z < n; ++z) {
          add(L.join(x, z), L.join(y, z));
          add(L.meet(x, z), L.meet(y, z));
          if (th[y][z]) add(x, z);
        }
      }
  }
  return th;
}

inline bool naive_is_simple(const FiniteLattice& L) {
  if (L.size() < 2) return false;
  for (auto [a, b] : L.covers()) {
    const auto th = naive_congruence(L, a, b);
    for (const auto& row : th)
      if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

/// Breadth from the definition: the largest size of a set whose join is
/// not the join of any proper subset. Exponential; small lattices only.
inline int breadth_by_definition(const FiniteLattice& L) {
  const std::size_t n = L.size();
  if (n > 20) throw LatticeError(ErrorKind::LimitExceeded, "breadth_by_definition is for small lattices");
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    if (k <= best) continue;
    auto join_of = [&](std::uint32_t m) {
      Elem acc = L.bottom();
      for (Elem e = 0; e < n; ++e)
        if (m & (1u << e)) acc = L.join(acc, e);
      return acc;
    };
    const Elem full = join_of(mask);
    bool irredundant = true;
    for (Elem e = 0; e < n && irredundant; ++e)
      if ((mask & (1u << e)) && join_of(mask & ~(1u << e)) == full) irredundant = false;
    if (irredundant) best = k;
  }
  return best;
}

/// Every lattice on exactly n <= 5 elements up to isomorphism, from all
/// relations on n points: keep partial orders that are lattices, then drop
/// isomorphic copies pairwise.
inline std::vector<FiniteLattice> naive_lattices(int n) {
  std::vector<FiniteLattice> found;
  if (n < 1 || n > 5) throw LatticeError(ErrorKind::LimitExceeded, "naive enumeration is for 1..5 elements");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::uint32_t> le(n);
    for (int i = 0; i < n; ++i) le[i] = 1u << i;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (std::uint64_t{1} << s)) le[slots[s].first] |= 1u << slots[s].second;
    bool order = true;
    for (int i = 0; i < n && order; ++i)
      for (int j = 0; j < n && order; ++j) {
        if (i != j && (le[i] >> j & 1) && (le[j] >> i & 1)) order = false;
        if ((le[i] >> j & 1) && (le[j] & ~le[i])) order = false;
      }
    if (!order) continue;
    // lattice: every pair has a least upper bound and a greatest lower bound
    bool lattice = true;
    for (int a = 0; a < n && lattice; ++a)
      for (int b = 0; b < n && lattice; ++b) {
        std::uint32_t ub = le[a] & le[b], lb = 0;
        for (int c = 0; c < n; ++c)
          if ((le[c] >> a & 1) && (le[c] >> b & 1)) lb |= 1u << c;
        bool has_sup = false, has_inf = false;
        for (int u = 0; u < n; ++u) {
          if ((ub >> u & 1) && (le[u] & ub) == ub) has_sup = true;
          if (lb >> u & 1) {
            bool greatest = true;
            for (int v = 0; v < n; ++v)
              if ((lb >> v & 1) && !(le[v] >> u & 1)) greatest = false;
            if (greatest) has_inf = true;
          }
        }
        lattice = has_sup && has_inf;
      }
    if (!lattice) continue;
    std::vector<Bits> rel(n, Bits(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && (le[i] >> j & 1)) rel[i].set(j);
    FiniteLattice L = FiniteLattice::from_relation(names, std::move(rel));
    if (std::none_of(found.begin(), found.end(), [&](const FiniteLattice& F) { return isomorphic(F, L); }))
      found.push_back(std::move(L));
  }
  return found;
}

}  // namespace sglue::oracle
