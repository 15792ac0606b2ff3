#pragma once

// Decision procedures for lattice classes: modular, semimodular,
// distributive, atomistic, breadth, n-distributive, simple.

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "sglue/lattice.hpp"

namespace sglue {

/// a <= c implies a + (b . c) = (a + b) . c, checked over all triples.
inline bool is_modular(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      if (!L.leq(a, c) || a == c) continue;
      for (Elem b = 0; b < n; ++b)
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
    }
  return true;
}

/// a < b, a < c covers with b != c imply b + c covers both b and c.
inline bool is_semimodular(const FiniteLattice& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    auto up = L.upper_covers(a);
    for (std::size_t i = 0; i < up.size(); ++i)
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        const Elem s = L.join(up[i], up[j]);
        if (!L.is_cover(up[i], s) || !L.is_cover(up[j], s)) return false;
      }
  }
  return true;
}

inline bool is_dual_semimodular(const FiniteLattice& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    auto down = L.lower_covers(a);
    for (std::size_t i = 0; i < down.size(); ++i)
      for (std::size_t j = i + 1; j < down.size(); ++j) {
        const Elem m = L.meet(down[i], down[j]);
        if (!L.is_cover(m, down[i]) || !L.is_cover(m, down[j])) return false;
      }
  }
  return true;
}

inline bool is_distributive(const FiniteLattice& L) {
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

/// Every element is the join of the atoms below it.
inline bool is_atomistic(const FiniteLattice& L) {
  const auto atoms = L.atoms();
  for (Elem e = 0; e < L.size(); ++e) {
    Elem acc = L.bottom();
    for (Elem a : atoms)
      if (L.leq(a, e)) acc = L.join(acc, a);
    if (acc != e) return false;
  }
  return true;
}

inline bool is_coatomistic(const FiniteLattice& L) {
  const auto coatoms = L.coatoms();
  for (Elem e = 0; e < L.size(); ++e) {
    Elem acc = L.top();
    for (Elem a : coatoms)
      if (L.leq(e, a)) acc = L.meet(acc, a);
    if (acc != e) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Breadth

/// Searches for a map of the Boolean lattice 2^k into L that preserves and
/// reflects the order. result[mask] is the image of the subset `mask`.
inline std::optional<std::vector<Elem>> find_boolean_embedding(const FiniteLattice& L, int k) {
  const std::size_t n = L.size();
  const std::size_t cells = std::size_t{1} << k;
  if (cells > n) return std::nullopt;

  // Subsets ordered by cardinality so every proper subset is placed first.
  std::vector<unsigned> order(cells);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });

  std::vector<Elem> image(cells, kNone);
  Bits all(n);
  all.set();

  auto candidates = [&](std::size_t pos) {
    const unsigned A = order[pos];
    Bits cand = all;
    for (int i = 0; i < k; ++i) {
      if (!(A >> i & 1u)) continue;
      const Elem below = image[A & ~(1u << i)];
      cand &= L.up_set(below);
      cand.reset(below);
    }
    for (std::size_t q = 0; q < pos; ++q) {
      const unsigned B = order[q];
      if ((B & A) == B) continue;
      cand -= L.up_set(image[B]);
      cand -= L.down_set(image[B]);
    }
    // Coordinates are interchangeable: singletons get increasing indices.
    if (std::popcount(A) == 1 && A != 1u) {
      const Elem prev = image[A >> 1];
      for (Elem e = 0; e <= prev && e < n; ++e) cand.reset(e);
    }
    return cand;
  };

  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == cells) return true;
    const Bits cand = candidates(pos);
    for (auto c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
      image[order[pos]] = static_cast<Elem>(c);
      if (self(self, pos + 1)) return true;
    }
    image[order[pos]] = kNone;
    return false;
  };
  if (rec(rec, 0)) return image;
  return std::nullopt;
}

/// Largest n such that 2^n order-embeds into L, by direct search.
inline int breadth_by_embedding(const FiniteLattice& L) {
  int k = 0;
  while (find_boolean_embedding(L, k + 1)) ++k;
  return k;
}

/// Largest irredundant set of join-irreducibles: no member lies below the
/// join of the others. Such a set of size n yields the embedding
/// A -> join(A) of 2^n, and any embedding yields one by picking, for each
/// atom image, a join-irreducible below it but not below the other atoms'
/// join. Agrees with breadth_by_embedding; much faster on large lattices.
inline int breadth(const FiniteLattice& L) {
  std::vector<Elem> ji;
  for (Elem a = 0; a < L.size(); ++a)
    if (L.lower_covers(a).size() == 1) ji.push_back(a);
  int best = 0;
  std::vector<Elem> chosen;
  auto irredundant_with = [&](Elem j) {
    chosen.push_back(j);
    bool ok = true;
    for (std::size_t i = 0; i < chosen.size() && ok; ++i) {
      Elem rest = L.bottom();
      for (std::size_t k = 0; k < chosen.size(); ++k)
        if (k != i) rest = L.join(rest, chosen[k]);
      if (L.leq(chosen[i], rest)) ok = false;
    }
    chosen.pop_back();
    return ok;
  };
  auto rec = [&](auto&& self, std::size_t from) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t i = from; i < ji.size(); ++i) {
      if (static_cast<int>(chosen.size() + (ji.size() - i)) <= best) return;
      if (!irredundant_with(ji[i])) continue;
      chosen.push_back(ji[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// ---------------------------------------------------------------------------
// n-distributivity

namespace detail {
inline void require_modular(const FiniteLattice& L, const char* what) {
  if (!is_modular(L)) throw LatticeError(ErrorKind::NotModular, std::string(what) + " needs a modular lattice");
}
}  // namespace detail

/// Huhn's identity x . sum_i y_i = sum_j (x . sum_{i != j} y_i) over all
/// x and all multisets y_0 <= ... <= y_n. Throws NotModular.
inline bool is_n_distributive(const FiniteLattice& L, int n) {
  if (n < 1) throw LatticeError(ErrorKind::Malformed, "n-distributivity needs n >= 1");
  detail::require_modular(L, "n-distributivity");
  // Distributive means 1-distributive, and n-distributive implies
  // (n+1)-distributive.
  if (is_distributive(L)) return true;
  const Elem size = static_cast<Elem>(L.size());
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  std::vector<Elem> y(m, 0), prefix(m + 1), suffix(m + 1);
  while (true) {
    prefix[0] = L.bottom();
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = L.join(prefix[i], y[i]);
    suffix[m] = L.bottom();
    for (std::size_t i = m; i-- > 0;) suffix[i] = L.join(suffix[i + 1], y[i]);
    const Elem total = prefix[m];
    for (Elem x = 0; x < size; ++x) {
      Elem rhs = L.bottom();
      for (std::size_t j = 0; j < m; ++j) rhs = L.join(rhs, L.meet(x, L.join(prefix[j], suffix[j + 1])));
      if (L.meet(x, total) != rhs) return false;
    }
    // Next nondecreasing tuple.
    std::size_t i = m;
    while (i > 0 && y[i - 1] == size - 1) --i;
    if (i == 0) break;
    ++y[i - 1];
    for (std::size_t j = i; j < m; ++j) y[j] = y[i - 1];
  }
  return true;
}

struct ForbiddenConfig {
  std::vector<Elem> atoms;  // a_0 .. a_n
  Elem bottom = 0, top = 0, w = 0;
};

/// A sublattice isomorphic to 2^(n+1) with atoms a_i, plus w with
/// a_i . w = its bottom and a_i + w = its top for every i. Throws NotModular.
inline std::optional<ForbiddenConfig> find_forbidden_n_config(const FiniteLattice& L, int n) {
  if (n < 1) throw LatticeError(ErrorKind::Malformed, "n must be >= 1");
  detail::require_modular(L, "the forbidden configuration search");
  const std::size_t k = static_cast<std::size_t>(n) + 1;
  const Elem size = static_cast<Elem>(L.size());

  // Joins of all subsets of `atoms` (with u as the empty join) must be
  // pairwise distinct and meet like sets do.
  auto boolean_ok = [&](Elem u, const std::vector<Elem>& atoms) {
    const std::size_t cells = std::size_t{1} << atoms.size();
    std::vector<Elem> j(cells, u);
    for (std::size_t A = 1; A < cells; ++A) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(A));
      j[A] = L.join(j[A & (A - 1)], atoms[low]);
    }
    for (std::size_t A = 0; A < cells; ++A)
      for (std::size_t B = A + 1; B < cells; ++B) {
        if (j[A] == j[B]) return false;
        if (L.meet(j[A], j[B]) != j[A & B]) return false;
      }
    return true;
  };

  std::vector<Elem> atoms;
  std::optional<ForbiddenConfig> found;
  auto rec = [&](auto&& self, Elem u, Elem from) -> bool {
    if (atoms.size() == k) {
      const Elem v = L.join_all(atoms);
      for (Elem w = 0; w < size; ++w) {
        bool ok = true;
        for (Elem a : atoms)
          if (L.meet(a, w) != u || L.join(a, w) != v) {
            ok = false;
            break;
          }
        if (ok) {
          found = ForbiddenConfig{atoms, u, v, w};
          return true;
        }
      }
      return false;
    }
    for (Elem c = from; c < size; ++c) {
      if (c == u || !L.leq(u, c)) continue;
      atoms.push_back(c);
      if (boolean_ok(u, atoms) && self(self, u, c + 1)) return true;
      atoms.pop_back();
    }
    return false;
  };
  for (Elem u = 0; u < size; ++u) {
    atoms.clear();
    if (rec(rec, u, 0)) return found;
  }
  return std::nullopt;
}

inline bool has_forbidden_n_config(const FiniteLattice& L, int n) {
  return find_forbidden_n_config(L, n).has_value();
}

// ---------------------------------------------------------------------------
// Congruences

struct CongruencePartition {
  FiniteLattice lattice;
  std::vector<Elem> block_of;  // canonical block label per element
  std::size_t block_count = 0;

  bool same_block(Elem a, Elem b) const { return block_of[a] == block_of[b]; }
  bool is_full() const { return block_count <= 1; }
  bool is_trivial() const { return block_count == lattice.size(); }
};

namespace detail {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Elem{0}); }
  Elem find(Elem a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

inline CongruencePartition make_partition(const FiniteLattice& L, UnionFind& uf) {
  CongruencePartition p{L, std::vector<Elem>(L.size()), 0};
  std::vector<Elem> label(L.size(), kNone);
  for (Elem a = 0; a < L.size(); ++a) {
    const Elem r = uf.find(a);
    if (label[r] == kNone) label[r] = static_cast<Elem>(p.block_count++);
    p.block_of[a] = label[r];
  }
  return p;
}

}  // namespace detail

/// Smallest congruence collapsing a and b, by closing the partition under
/// join- and meet-compatibility.
inline CongruencePartition principal_congruence(const FiniteLattice& L, Elem a, Elem b) {
  L.check(a);
  L.check(b);
  const Elem n = static_cast<Elem>(L.size());
  detail::UnionFind uf(n);
  uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem x = 0; x < n; ++x) {
      const Elem r = uf.find(x);
      if (r == x) continue;
      for (Elem z = 0; z < n; ++z) {
        changed |= uf.unite(L.join(x, z), L.join(r, z));
        changed |= uf.unite(L.meet(x, z), L.meet(r, z));
      }
    }
  }
  return detail::make_partition(L, uf);
}

/// Every nontrivial congruence contains a cover pair, so L is simple iff each
/// cover generates the full congruence. A one-element lattice is not simple.
inline bool is_simple(const FiniteLattice& L) {
  if (L.size() < 2) return false;
  for (auto [a, b] : L.covers())
    if (!principal_congruence(L, a, b).is_full()) return false;
  return true;
}

inline bool is_sublattice(const FiniteLattice& host, std::span<const Elem> subset) {
  Bits in(host.size());
  for (Elem e : subset) {
    host.check(e);
    in.set(e);
  }
  for (Elem a : subset)
    for (Elem b : subset)
      if (!in.test(host.join(a, b)) || !in.test(host.meet(a, b))) return false;
  return true;
}

/// Closure of `generators` under join and meet.
inline std::vector<Elem> generated_sublattice(const FiniteLattice& L, std::span<const Elem> generators) {
  Bits in(L.size());
  std::vector<Elem> members;
  for (Elem g : generators) {
    L.check(g);
    if (!in.test(g)) {
      in.set(g);
      members.push_back(g);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem c : {L.join(members[i], members[j]), L.meet(members[i], members[j])}) {
        if (!in.test(c)) {
          in.set(c);
          members.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace sglue
