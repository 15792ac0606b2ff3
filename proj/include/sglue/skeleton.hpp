#pragma once

// Skeletons of finite modular lattices.
//
// a* is the join of the upper covers of a, a+ the meet of its lower covers.
// The skeleton is the set of fixed points of a -> a*+, and the lattice is
// recovered by gluing the intervals [x, x*] over it.

#include <string>
#include <vector>

#include "sglue/glue.hpp"
#include "sglue/predicates.hpp"
#include "sglue/report.hpp"

namespace sglue {

namespace detail {

inline Elem star_unchecked(const FiniteLattice& M, Elem a) {
  if (a == M.top()) return a;
  Elem acc = a;
  for (Elem c : M.upper_covers(a)) acc = M.join(acc, c);
  return acc;
}

inline Elem plus_unchecked(const FiniteLattice& M, Elem a) {
  if (a == M.bottom()) return a;
  Elem acc = a;
  for (Elem c : M.lower_covers(a)) acc = M.meet(acc, c);
  return acc;
}

inline std::vector<Elem> skeleton_set_unchecked(const FiniteLattice& M) {
  std::vector<Elem> out;
  for (Elem a = 0; a < M.size(); ++a)
    if (plus_unchecked(M, star_unchecked(M, a)) == a) out.push_back(a);
  return out;
}

inline std::vector<Elem> dual_skeleton_set_unchecked(const FiniteLattice& M) {
  std::vector<Elem> out;
  for (Elem a = 0; a < M.size(); ++a)
    if (star_unchecked(M, plus_unchecked(M, a)) == a) out.push_back(a);
  return out;
}

/// The skeleton as a lattice under the order of M. Its joins must be those
/// of M and its meets (x.y)*+; anything else is a bug.
inline FiniteLattice skeleton_lattice_unchecked(const FiniteLattice& M, const std::vector<Elem>& set) {
  FiniteLattice S = induced(M, set);
  for (Elem i = 0; i < set.size(); ++i)
    for (Elem j = 0; j < set.size(); ++j) {
      const Elem jn = M.join(set[i], set[j]);
      const Elem mt = plus_unchecked(M, star_unchecked(M, M.meet(set[i], set[j])));
      if (set[S.join(i, j)] != jn || set[S.meet(i, j)] != mt)
        throw std::logic_error("skeleton operations disagree with the closure formulas");
    }
  return S;
}

}  // namespace detail

inline Elem star(const FiniteLattice& M, Elem a) {
  detail::require_modular(M, "star");
  M.check(a);
  return detail::star_unchecked(M, a);
}

inline Elem plus(const FiniteLattice& M, Elem a) {
  detail::require_modular(M, "plus");
  M.check(a);
  return detail::plus_unchecked(M, a);
}

inline std::vector<Elem> skeleton_set(const FiniteLattice& M) {
  detail::require_modular(M, "skeleton");
  return detail::skeleton_set_unchecked(M);
}

inline std::vector<Elem> dual_skeleton(const FiniteLattice& M) {
  detail::require_modular(M, "dual skeleton");
  return detail::dual_skeleton_set_unchecked(M);
}

/// Element names are those of M.
inline FiniteLattice skeleton_lattice(const FiniteLattice& M) {
  detail::require_modular(M, "skeleton");
  return detail::skeleton_lattice_unchecked(M, detail::skeleton_set_unchecked(M));
}

/// Identities (a)-(e) of the star/plus calculus and their duals, checked for
/// every element and pair.
inline Report star_plus_suite(const FiniteLattice& M) {
  detail::require_modular(M, "star/plus identities");
  const std::size_t n = M.size();
  std::vector<Elem> st(n), pl(n);
  for (Elem a = 0; a < n; ++a) {
    st[a] = detail::star_unchecked(M, a);
    pl[a] = detail::plus_unchecked(M, a);
  }
  Report r;
  auto at = [&](const char* tag, Elem a) { return std::string(tag) + " at " + M.name(a); };
  auto at2 = [&](const char* tag, Elem a, Elem b) { return std::string(tag) + " at " + M.name(a) + "," + M.name(b); };
  for (Elem a = 0; a < n; ++a) {
    r.expect(M.leq(a, st[pl[a]]) && M.leq(st[pl[a]], st[a]), at("(b)", a));
    r.expect(M.leq(pl[a], pl[st[a]]) && M.leq(pl[st[a]], a), at("(b dual)", a));
    r.expect(st[pl[st[a]]] == st[a], at("(c)", a));
    r.expect(pl[st[pl[a]]] == pl[a], at("(c dual)", a));
    for (Elem b = 0; b < n; ++b) {
      if (M.leq(a, b)) {
        r.expect(M.leq(st[a], st[b]), at2("(a)", a, b));
        r.expect(M.leq(pl[a], pl[b]), at2("(a dual)", a, b));
      }
      const Elem j = M.join(a, b), m = M.meet(a, b);
      if (pl[st[a]] == a && pl[st[b]] == b) r.expect(pl[st[j]] == j, at2("(d)", a, b));
      if (st[pl[a]] == a && st[pl[b]] == b) r.expect(st[pl[m]] == m, at2("(d dual)", a, b));
      r.expect(M.join(pl[a], pl[b]) == pl[j], at2("(e)", a, b));
      r.expect(M.meet(st[a], st[b]) == st[m], at2("(e dual)", a, b));
    }
  }
  return r;
}

struct SkeletonDecomposition {
  FiniteLattice source;
  std::vector<Elem> skeleton_set;  // indices into source
  std::vector<Elem> dual_set;      // indices into source
  GluedSystem system;              // skeleton lattice and blocks [x, x*]
};

/// Blocks [x, x*] over the skeleton. The result is validated and must be
/// strictly monotone.
inline SkeletonDecomposition decompose(const FiniteLattice& M) {
  detail::require_modular(M, "decompose");
  SkeletonDecomposition d;
  d.source = M;
  d.skeleton_set = detail::skeleton_set_unchecked(M);
  d.dual_set = detail::dual_skeleton_set_unchecked(M);
  d.system.skeleton = detail::skeleton_lattice_unchecked(M, d.skeleton_set);
  for (Elem x : d.skeleton_set) d.system.blocks.push_back(interval(M, x, detail::star_unchecked(M, x)).as_lattice());
  auto v = validate(d.system);
  if (!v.empty())
    throw std::logic_error("decomposition violates " + std::string(to_string(v.front().axiom)) + " at " +
                           v.front().x + "," + v.front().y);
  if (!is_monotone_strict(d.system)) throw std::logic_error("decomposition is not strictly monotone");
  return d;
}

/// Gluing the decomposition gives back M with the same carrier and order.
inline bool roundtrip(const FiniteLattice& M) { return sum(decompose(M).system).same_as(M); }

/// * and + are inverse order isomorphisms between the skeleton and the dual
/// skeleton, the dual skeleton is the skeleton of the dual lattice, and a
/// self-dual lattice has a self-dual skeleton.
inline Report skeleton_duality_suite(const FiniteLattice& M) {
  detail::require_modular(M, "skeleton duality");
  Report r;
  const auto S = detail::skeleton_set_unchecked(M);
  const auto D = detail::dual_skeleton_set_unchecked(M);
  Bits in_s(M.size()), in_d(M.size());
  for (Elem x : S) in_s.set(x);
  for (Elem x : D) in_d.set(x);
  r.expect(S.size() == D.size(), "skeleton and dual skeleton differ in size");
  for (Elem x : S) {
    const Elem s = detail::star_unchecked(M, x);
    r.expect(in_d.test(s), "star of " + M.name(x) + " is not in the dual skeleton");
    r.expect(detail::plus_unchecked(M, s) == x, "plus does not invert star at " + M.name(x));
    for (Elem y : S)
      r.expect(M.leq(x, y) == M.leq(s, detail::star_unchecked(M, y)),
               "star is not an order isomorphism at " + M.name(x) + "," + M.name(y));
  }
  for (Elem x : D) {
    const Elem p = detail::plus_unchecked(M, x);
    r.expect(in_s.test(p), "plus of " + M.name(x) + " is not in the skeleton");
    r.expect(detail::star_unchecked(M, p) == x, "star does not invert plus at " + M.name(x));
  }
  const FiniteLattice Md = dual(M);
  Bits from_dual(M.size());
  for (Elem x : detail::skeleton_set_unchecked(Md)) from_dual.set(M.at(Md.name(x)));
  r.expect(from_dual == in_d, "dual skeleton differs from the skeleton of the dual lattice");
  if (find_anti_automorphism(M)) {
    const FiniteLattice Sk = detail::skeleton_lattice_unchecked(M, S);
    r.expect(find_anti_automorphism(Sk).has_value(), "self-dual lattice with a non-self-dual skeleton");
  }
  return r;
}

/// breadth(M) <= n iff every block has breadth <= n, and M is
/// n-distributive iff every block is.
inline Report block_bound_suite(const FiniteLattice& M, int n) {
  const auto d = decompose(M);
  Report r;
  bool blocks_breadth = true, blocks_ndist = true;
  for (const auto& B : d.system.blocks) {
    if (breadth(B) > n) blocks_breadth = false;
    if (!is_n_distributive(B, n)) blocks_ndist = false;
  }
  r.expect((breadth(M) <= n) == blocks_breadth, "breadth bound does not match the blocks");
  r.expect(is_n_distributive(M, n) == blocks_ndist, "n-distributivity does not match the blocks");
  return r;
}

}  // namespace sglue
