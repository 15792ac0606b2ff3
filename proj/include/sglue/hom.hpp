#pragma once

// Lattice homomorphisms and gluing a family of them over a glued sum.

#include <string>
#include <vector>

#include "sglue/connect.hpp"
#include "sglue/glue.hpp"
#include "sglue/predicates.hpp"

namespace sglue {

struct LatticeHom {
  FiniteLattice domain, codomain;
  std::vector<Elem> map;  // map[a] for every a in domain

  Elem operator()(Elem a) const { return map[a]; }
};

inline bool is_homomorphism(const LatticeHom& h) {
  const auto& D = h.domain;
  const auto& C = h.codomain;
  if (h.map.size() != D.size()) return false;
  for (Elem e : h.map)
    if (e >= C.size()) return false;
  for (Elem a = 0; a < D.size(); ++a)
    for (Elem b = a + 1; b < D.size(); ++b) {
      if (h.map[D.join(a, b)] != C.join(h.map[a], h.map[b])) return false;
      if (h.map[D.meet(a, b)] != C.meet(h.map[a], h.map[b])) return false;
    }
  return true;
}

inline bool is_injective(const LatticeHom& h) {
  Bits seen(h.codomain.size());
  for (Elem e : h.map) {
    if (seen.test(e)) return false;
    seen.set(e);
  }
  return true;
}

/// One homomorphism per skeleton element, defined on that block and all
/// mapping into the same codomain.
using HomFamily = std::vector<LatticeHom>;

namespace detail {
inline void check_family_shape(const GluedSystem& sys, const HomFamily& fam) {
  if (fam.size() != sys.blocks.size())
    throw LatticeError(ErrorKind::InvalidSystem, "need one homomorphism per block");
  for (Elem x = 0; x < fam.size(); ++x) {
    if (!fam[x].domain.same_as(sys.blocks[x]) || fam[x].map.size() != sys.blocks[x].size())
      throw LatticeError(ErrorKind::InvalidSystem, "homomorphism domain is not its block");
    if (!fam[x].codomain.same_as(fam.front().codomain))
      throw LatticeError(ErrorKind::InvalidSystem, "homomorphisms have different codomains");
  }
}

/// Image of the global carrier element g under the map attached to block x.
inline Elem image_in(const GlueIndex& idx, const HomFamily& fam, Elem x, Elem g) {
  return fam[x].map[fam[x].domain.at(idx.name(g))];
}
}  // namespace detail

/// phi_x 0_x + phi_y 0_y = phi_(xvy) 0_(xvy) and the dual condition on tops,
/// for every pair of skeleton elements.
inline bool check_star(const GluedSystem& sys, const HomFamily& fam) {
  detail::check_family_shape(sys, fam);
  const GlueIndex idx(sys);
  const auto& S = sys.skeleton;
  const auto& C = fam.front().codomain;
  auto zero = [&](Elem x) { return detail::image_in(idx, fam, x, idx.zero(x)); };
  auto one = [&](Elem x) { return detail::image_in(idx, fam, x, idx.one(x)); };
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = x + 1; y < S.size(); ++y) {
      if (C.join(zero(x), zero(y)) != zero(S.join(x, y))) return false;
      if (C.meet(one(x), one(y)) != one(S.meet(x, y))) return false;
    }
  return true;
}

/// The union of the family as a homomorphism on the glued sum. Requires
/// agreement on the overlaps of covering pairs, and the zero/one condition
/// unless the skeleton is modular.
inline LatticeHom glue_homs(const GluedSystem& sys, const HomFamily& fam) {
  detail::check_family_shape(sys, fam);
  const GlueIndex idx(sys);
  const auto& S = sys.skeleton;
  for (auto [x, y] : S.covers()) {
    const Bits I = idx.members(x) & idx.members(y);
    for (auto g = I.find_first(); g != Bits::npos; g = I.find_next(g)) {
      const Elem e = static_cast<Elem>(g);
      if (detail::image_in(idx, fam, x, e) != detail::image_in(idx, fam, y, e))
        throw LatticeError(ErrorKind::OverlapDisagreement,
                           S.name(x) + "," + S.name(y) + " disagree on '" + idx.name(e) + "'");
    }
  }
  // Agreement on covers forces agreement on every overlap.
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = x + 1; y < S.size(); ++y) {
      const Bits I = idx.members(x) & idx.members(y);
      for (auto g = I.find_first(); g != Bits::npos; g = I.find_next(g))
        if (detail::image_in(idx, fam, x, static_cast<Elem>(g)) != detail::image_in(idx, fam, y, static_cast<Elem>(g)))
          throw std::logic_error("overlap agreement does not propagate from covers");
    }
  if (!is_modular(S) && !check_star(sys, fam))
    throw LatticeError(ErrorKind::StarConditionFailed, "zero/one condition fails on a non-modular skeleton");

  LatticeHom h;
  h.domain = sum(sys);
  h.codomain = fam.front().codomain;
  h.map.resize(h.domain.size());
  for (Elem a = 0; a < h.domain.size(); ++a) {
    const Elem g = *idx.find(h.domain.name(a));
    h.map[a] = detail::image_in(idx, fam, idx.home(g), g);
  }
  if (!is_homomorphism(h)) throw std::logic_error("glued map is not a homomorphism");
  return h;
}

/// Glues homomorphisms given on the blocks of a connected system after
/// passing to the quotient. phi_x must equal phi_y after the map x -> y on
/// every covering pair.
inline LatticeHom glue_connected_homs(const ConnectedSystem& cs, const HomFamily& fam) {
  if (fam.size() != cs.blocks.size()) throw LatticeError(ErrorKind::InvalidSystem, "need one homomorphism per block");
  const auto& S = cs.skeleton;
  for (auto [x, y] : S.covers()) {
    const PartialIso p = cs.map(x, y);
    for (Elem a = 0; a < p.fwd.size(); ++a)
      if (p.in_domain(a) && fam[x].map[a] != fam[y].map[p.apply(a)])
        throw LatticeError(ErrorKind::OverlapDisagreement,
                           S.name(x) + "," + S.name(y) + " disagree at '" + cs.blocks[x].name(a) + "'");
  }
  const ConnectedSum q = connected_sum(cs);
  HomFamily glued_fam;
  for (Elem x = 0; x < S.size(); ++x) {
    LatticeHom g{q.glued.blocks[x], fam[x].codomain, std::vector<Elem>(cs.blocks[x].size())};
    for (Elem a = 0; a < cs.blocks[x].size(); ++a) g.map[g.domain.at(q.projection[x][a])] = fam[x].map[a];
    glued_fam.push_back(std::move(g));
  }
  return glue_homs(q.glued, glued_fam);
}

/// Blocks given as sublattices of `host` (by element name): the glued sum
/// is closed under the host operations, which agree with those of the sum.
inline bool sum_is_sublattice_of(const GluedSystem& sys, const FiniteLattice& host) {
  const FiniteLattice M = sum(sys);
  std::vector<Elem> to_host(M.size());
  for (Elem a = 0; a < M.size(); ++a) {
    auto h = host.find(M.name(a));
    if (!h) return false;
    to_host[a] = *h;
  }
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = a + 1; b < M.size(); ++b) {
      if (host.join(to_host[a], to_host[b]) != to_host[M.join(a, b)]) return false;
      if (host.meet(to_host[a], to_host[b]) != to_host[M.meet(a, b)]) return false;
    }
  return true;
}

/// For a system of simple blocks: is the glued sum simple?
inline bool simplicity_transfer_check(const GluedSystem& sys) {
  for (const auto& B : sys.blocks)
    if (!is_simple(B)) throw LatticeError(ErrorKind::InvalidSystem, "a block is not simple");
  return is_simple(sum(sys));
}

}  // namespace sglue
