#pragma once

// Families of pairwise disjoint lattices tied together by partial
// isomorphisms, and their quotient into a glued system.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sglue/glue.hpp"
#include "sglue/predicates.hpp"

namespace sglue {

/// Injective partial map from block `source` to block `target`, stored in
/// both directions by local index. kNone marks "undefined".
struct PartialIso {
  Elem source = 0, target = 0;
  std::vector<Elem> fwd;  // indexed by L_source
  std::vector<Elem> bwd;  // indexed by L_target

  static PartialIso empty(Elem x, Elem y, std::size_t nx, std::size_t ny) {
    return {x, y, std::vector<Elem>(nx, kNone), std::vector<Elem>(ny, kNone)};
  }
  static PartialIso identity(Elem x, std::size_t n) {
    PartialIso p = empty(x, x, n, n);
    for (Elem a = 0; a < n; ++a) p.fwd[a] = p.bwd[a] = a;
    return p;
  }
  /// Builds from local index pairs; rejects anything that is not a partial bijection.
  static PartialIso from_pairs(Elem x, Elem y, std::size_t nx, std::size_t ny,
                               std::span<const std::pair<Elem, Elem>> pairs) {
    PartialIso p = empty(x, y, nx, ny);
    for (auto [a, b] : pairs) {
      if (a >= nx || b >= ny) throw LatticeError(ErrorKind::UnknownElement, "map pair out of range");
      if ((p.fwd[a] != kNone && p.fwd[a] != b) || (p.bwd[b] != kNone && p.bwd[b] != a))
        throw LatticeError(ErrorKind::Malformed, "map is not injective");
      p.fwd[a] = b;
      p.bwd[b] = a;
    }
    return p;
  }

  Elem apply(Elem a) const { return fwd[a]; }
  Elem invert(Elem b) const { return bwd[b]; }
  bool in_domain(Elem a) const { return fwd[a] != kNone; }
  bool in_image(Elem b) const { return bwd[b] != kNone; }
  bool is_empty() const {
    return std::all_of(fwd.begin(), fwd.end(), [](Elem e) { return e == kNone; });
  }
  std::size_t domain_size() const {
    return static_cast<std::size_t>(std::count_if(fwd.begin(), fwd.end(), [](Elem e) { return e != kNone; }));
  }
  friend bool operator==(const PartialIso&, const PartialIso&) = default;
};

/// `second` after `first`: first maps x -> z, second maps z -> y.
inline PartialIso compose(const PartialIso& second, const PartialIso& first) {
  if (first.target != second.source) throw std::logic_error("compose: blocks do not match");
  PartialIso p = PartialIso::empty(first.source, second.target, first.fwd.size(), second.bwd.size());
  for (Elem a = 0; a < first.fwd.size(); ++a) {
    const Elem mid = first.fwd[a];
    if (mid == kNone) continue;
    const Elem b = second.fwd[mid];
    if (b == kNone) continue;
    p.fwd[a] = b;
    p.bwd[b] = a;
  }
  return p;
}

/// Skeleton, blocks and a sparse table of maps keyed by (source, target).
/// An absent entry is the empty map; (x, x) is always the identity.
struct MappedFamily {
  FiniteLattice skeleton;
  std::vector<FiniteLattice> blocks;
  std::map<std::pair<Elem, Elem>, PartialIso> maps;

  PartialIso map(Elem x, Elem y) const {
    if (x == y) return PartialIso::identity(x, blocks[x].size());
    auto it = maps.find({x, y});
    if (it != maps.end()) return it->second;
    return PartialIso::empty(x, y, blocks[x].size(), blocks[y].size());
  }
  /// Image of a in L_x under the map to L_y, or kNone.
  Elem apply(Elem x, Elem y, Elem a) const {
    if (x == y) return a;
    auto it = maps.find({x, y});
    return it == maps.end() ? kNone : it->second.apply(a);
  }
  /// Preimage in L_x of b in L_y, or kNone.
  Elem invert(Elem x, Elem y, Elem b) const {
    if (x == y) return b;
    auto it = maps.find({x, y});
    return it == maps.end() ? kNone : it->second.invert(b);
  }
  void set(PartialIso p) {
    if (p.source == p.target) return;
    if (p.is_empty())
      maps.erase({p.source, p.target});
    else
      maps.insert_or_assign({p.source, p.target}, std::move(p));
  }
};

struct ConnectedSystem : MappedFamily {};
struct LocalConnectedSystem : MappedFamily {};

struct ConnectViolation {
  std::string condition;  // short tag, e.g. "filter-ideal" or "square"
  std::string x, y;
  std::vector<std::string> witness;
  std::string detail;
};

namespace detail {

inline void check_map_shape(const MappedFamily& f) {
  if (f.skeleton.empty() || f.blocks.size() != f.skeleton.size())
    throw LatticeError(ErrorKind::InvalidSystem, "need exactly one block per skeleton element");
  for (const auto& [key, p] : f.maps) {
    auto [x, y] = key;
    if (x >= f.skeleton.size() || y >= f.skeleton.size() || !f.skeleton.leq(x, y))
      throw LatticeError(ErrorKind::InvalidSystem, "map between non-comparable skeleton elements");
    if (p.source != x || p.target != y || p.fwd.size() != f.blocks[x].size() || p.bwd.size() != f.blocks[y].size())
      throw LatticeError(ErrorKind::InvalidSystem, "map table entry does not match its key");
  }
}

/// Filter-to-ideal isomorphism test for one map; returns a message or "".
inline std::string filter_ideal_problem(const FiniteLattice& Lx, const FiniteLattice& Ly, const PartialIso& p,
                                        std::vector<std::string>& witness) {
  for (Elem a = 0; a < Lx.size(); ++a) {
    if (!p.in_domain(a)) continue;
    for (Elem c = 0; c < Lx.size(); ++c)
      if (Lx.leq(a, c) && !p.in_domain(c)) {
        witness = {Lx.name(a), Lx.name(c)};
        return "domain is not upward closed";
      }
    for (Elem b = 0; b < Lx.size(); ++b) {
      if (!p.in_domain(b)) continue;
      if (!p.in_domain(Lx.meet(a, b))) {
        witness = {Lx.name(a), Lx.name(b)};
        return "domain is not closed under meets";
      }
      if (Lx.leq(a, b) != Ly.leq(p.apply(a), p.apply(b))) {
        witness = {Lx.name(a), Lx.name(b)};
        return "map does not preserve and reflect order";
      }
    }
  }
  for (Elem b = 0; b < Ly.size(); ++b) {
    if (!p.in_image(b)) continue;
    for (Elem c = 0; c < Ly.size(); ++c) {
      if (Ly.leq(c, b) && !p.in_image(c)) {
        witness = {Ly.name(b), Ly.name(c)};
        return "image is not downward closed";
      }
      if (p.in_image(c) && !p.in_image(Ly.join(b, c))) {
        witness = {Ly.name(b), Ly.name(c)};
        return "image is not closed under joins";
      }
    }
  }
  return {};
}

inline std::vector<std::string> elem_names(const FiniteLattice& L, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (Elem e : es) out.push_back(L.name(e));
  return out;
}

}  // namespace detail

/// Every map is an isomorphism from a filter onto an ideal, maps on covers
/// are nonempty, maps compose, and the image/domain conditions at joins and
/// meets hold. Checked exhaustively.
inline std::vector<ConnectViolation> validate_connected(const ConnectedSystem& cs) {
  detail::check_map_shape(cs);
  const auto& S = cs.skeleton;
  std::vector<ConnectViolation> out;

  for (const auto& [key, p] : cs.maps) {
    std::vector<std::string> w;
    auto msg = detail::filter_ideal_problem(cs.blocks[key.first], cs.blocks[key.second], p, w);
    if (!msg.empty()) out.push_back({"filter-ideal", S.name(key.first), S.name(key.second), w, msg});
  }
  for (auto [x, y] : S.covers())
    if (cs.map(x, y).is_empty())
      out.push_back({"nonempty", S.name(x), S.name(y), {}, "map on a covering pair is empty"});

  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y) {
      if (!S.lt(x, y)) continue;
      const PartialIso direct = cs.map(x, y);
      for (Elem z = 0; z < S.size(); ++z) {
        if (z == x || z == y || !S.leq(x, z) || !S.leq(z, y)) continue;
        if (compose(cs.map(z, y), cs.map(x, z)) != direct) {
          out.push_back({"composite", S.name(x), S.name(y), {S.name(z)}, "map is not the composite through z"});
          break;
        }
      }
    }

  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = x + 1; y < S.size(); ++y) {
      const Elem j = S.join(x, y), m = S.meet(x, y);
      const PartialIso jx = cs.map(x, j), jy = cs.map(y, j), jm = cs.map(m, j);
      const auto& Lj = cs.blocks[j];
      for (Elem c = 0; c < Lj.size(); ++c)
        if (jx.in_image(c) && jy.in_image(c) && !jm.in_image(c)) {
          out.push_back({"join-image", S.name(x), S.name(y), {Lj.name(c)}, "common image not in the image from x^y"});
          break;
        }
      const PartialIso xm = cs.map(m, x), ym = cs.map(m, y);
      const auto& Lm = cs.blocks[m];
      for (Elem c = 0; c < Lm.size(); ++c)
        if (xm.in_domain(c) && ym.in_domain(c) && !jm.in_domain(c)) {
          out.push_back({"meet-domain", S.name(x), S.name(y), {Lm.name(c)}, "common domain not in the domain towards xvy"});
          break;
        }
    }
  return out;
}

/// The four equivalent formulations of "a in L_x is identified with b in L_y".
inline std::array<bool, 4> equivalence_criteria(const ConnectedSystem& cs, Elem x, Elem a, Elem y, Elem b) {
  const auto& S = cs.skeleton;
  std::array<bool, 4> r{};
  for (Elem z = 0; z < S.size(); ++z) {
    if (S.leq(x, z) && S.leq(y, z)) {
      const Elem ia = cs.apply(x, z, a), ib = cs.apply(y, z, b);
      if (ia != kNone && ia == ib) r[0] = true;
    }
    if (S.leq(z, x) && S.leq(z, y)) {
      const Elem pa = cs.invert(z, x, a), pb = cs.invert(z, y, b);
      if (pa != kNone && pa == pb) r[2] = true;
    }
  }
  const Elem j = S.join(x, y), m = S.meet(x, y);
  const Elem ja = cs.apply(x, j, a), jb = cs.apply(y, j, b);
  r[1] = ja != kNone && ja == jb;
  const Elem ma = cs.invert(m, x, a), mb = cs.invert(m, y, b);
  r[3] = ma != kNone && ma == mb;
  return r;
}

/// Decides a ~ b by the join-side criterion and cross-checks the meet side.
inline bool equivalent(const ConnectedSystem& cs, Elem x, Elem a, Elem y, Elem b) {
  const auto& S = cs.skeleton;
  const Elem j = S.join(x, y), m = S.meet(x, y);
  const Elem ja = cs.apply(x, j, a), jb = cs.apply(y, j, b);
  const bool up = ja != kNone && ja == jb;
  const Elem ma = cs.invert(m, x, a), mb = cs.invert(m, y, b);
  const bool down = ma != kNone && ma == mb;
  if (up != down) throw std::logic_error("join-side and meet-side identification disagree");
  return up;
}

struct ConnectedSum {
  GluedSystem glued;
  /// projection[x][a] is the carrier name of the class of a in L_x.
  std::vector<std::vector<std::string>> projection;
  std::size_t class_count = 0;
};

/// Quotient of the disjoint union by ~. Each class is named "x:a" after its
/// representative, the member whose block comes first in a fixed linear
/// extension of the skeleton.
inline ConnectedSum connected_sum(const ConnectedSystem& cs) {
  auto violations = validate_connected(cs);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw LatticeError(ErrorKind::InvalidSystem,
                       "condition (" + v.condition + ") fails at " + v.x + "," + v.y + ": " + v.detail);
  }
  const auto& S = cs.skeleton;
  ConnectedSum out;
  out.projection.resize(S.size());
  for (Elem x = 0; x < S.size(); ++x) out.projection[x].resize(cs.blocks[x].size());

  const auto& order = S.linear_order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    const auto& Lx = cs.blocks[x];
    for (Elem a = 0; a < Lx.size(); ++a) {
      if (!out.projection[x][a].empty()) continue;
      const std::string cls = S.name(x) + ":" + Lx.name(a);
      ++out.class_count;
      out.projection[x][a] = cls;
      for (std::size_t k = i + 1; k < order.size(); ++k) {
        const Elem y = order[k];
        for (Elem b = 0; b < cs.blocks[y].size(); ++b) {
          if (!equivalent(cs, x, a, y, b)) continue;
          if (!out.projection[y][b].empty() && out.projection[y][b] != cls)
            throw std::logic_error("identification is not transitive");
          out.projection[y][b] = cls;
        }
      }
    }
  }

  out.glued.skeleton = S;
  for (Elem x = 0; x < S.size(); ++x) {
    const auto& names = out.projection[x];
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("projection of a block is not injective");
    out.glued.blocks.push_back(FiniteLattice::from_index_covers(names, cs.blocks[x].covers()));
  }
  auto gv = validate(out.glued);
  if (!gv.empty())
    throw std::logic_error("quotient is not a glued system: axiom " + std::string(to_string(gv.front().axiom)));
  return out;
}

/// Cover maps are filter-to-ideal isomorphisms, and every diamond commutes
/// with the image/domain conditions on its diagonal.
inline std::vector<ConnectViolation> validate_local(const LocalConnectedSystem& lcs) {
  detail::check_map_shape(lcs);
  const auto& S = lcs.skeleton;
  if (!is_modular(S)) throw LatticeError(ErrorKind::NotModularSkeleton, "local systems need a modular skeleton");
  std::vector<ConnectViolation> out;
  for (const auto& [key, p] : lcs.maps)
    if (!S.is_cover(key.first, key.second))
      out.push_back({"cover-only", S.name(key.first), S.name(key.second), {}, "map given on a non-covering pair"});
  for (auto [x, y] : S.covers()) {
    const PartialIso p = lcs.map(x, y);
    if (p.is_empty()) {
      out.push_back({"nonempty", S.name(x), S.name(y), {}, "map on a covering pair is empty"});
      continue;
    }
    std::vector<std::string> w;
    auto msg = detail::filter_ideal_problem(lcs.blocks[x], lcs.blocks[y], p, w);
    if (!msg.empty()) out.push_back({"filter-ideal", S.name(x), S.name(y), w, msg});
  }
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = x + 1; y < S.size(); ++y) {
      const Elem m = S.meet(x, y), j = S.join(x, y);
      if (!S.is_cover(m, x) || !S.is_cover(m, y) || !S.is_cover(x, j) || !S.is_cover(y, j)) continue;
      const PartialIso via_x = compose(lcs.map(x, j), lcs.map(m, x));
      const PartialIso via_y = compose(lcs.map(y, j), lcs.map(m, y));
      if (via_x != via_y) {
        out.push_back({"square", S.name(x), S.name(y), {}, "square does not commute"});
        continue;
      }
      const PartialIso jx = lcs.map(x, j), jy = lcs.map(y, j);
      const auto& Lj = lcs.blocks[j];
      for (Elem c = 0; c < Lj.size(); ++c)
        if (jx.in_image(c) && jy.in_image(c) && !via_x.in_image(c)) {
          out.push_back({"diagonal-image", S.name(x), S.name(y), {Lj.name(c)}, "common image not in the diagonal image"});
          break;
        }
      const PartialIso xm = lcs.map(m, x), ym = lcs.map(m, y);
      const auto& Lm = lcs.blocks[m];
      for (Elem c = 0; c < Lm.size(); ++c)
        if (xm.in_domain(c) && ym.in_domain(c) && !via_x.in_domain(c)) {
          out.push_back({"diagonal-domain", S.name(x), S.name(y), {Lm.name(c)}, "common domain not in the diagonal domain"});
          break;
        }
    }
  return out;
}

enum class ChainCheck { TwoChains, Exhaustive };

namespace detail {

inline std::vector<Elem> greedy_chain(const FiniteLattice& S, Elem x, Elem y, bool last) {
  std::vector<Elem> chain{x};
  while (chain.back() != y) {
    Elem pick = kNone;
    for (Elem c : S.upper_covers(chain.back()))
      if (S.leq(c, y)) {
        pick = c;
        if (!last) break;
      }
    chain.push_back(pick);
  }
  return chain;
}

inline PartialIso compose_chain(const LocalConnectedSystem& lcs, const std::vector<Elem>& chain) {
  PartialIso acc = lcs.map(chain.front(), chain.front());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) acc = compose(lcs.map(chain[i], chain[i + 1]), acc);
  return acc;
}

}  // namespace detail

/// Extends cover maps to all comparable pairs by composing along maximal
/// chains. Every chain examined must give the same composite.
inline ConnectedSystem elevate(const LocalConnectedSystem& lcs, ChainCheck mode = ChainCheck::TwoChains) {
  auto violations = validate_local(lcs);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw LatticeError(ErrorKind::InvalidSystem,
                       "condition (" + v.condition + ") fails at " + v.x + "," + v.y + ": " + v.detail);
  }
  const auto& S = lcs.skeleton;
  ConnectedSystem cs;
  cs.skeleton = S;
  cs.blocks = lcs.blocks;
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y) {
      if (!S.lt(x, y)) continue;
      std::vector<std::vector<Elem>> chains;
      if (mode == ChainCheck::Exhaustive) {
        chains = maximal_chains(S, x, y);
      } else {
        chains.push_back(detail::greedy_chain(S, x, y, false));
        auto other = detail::greedy_chain(S, x, y, true);
        if (other != chains.front()) chains.push_back(std::move(other));
      }
      PartialIso first = detail::compose_chain(lcs, chains.front());
      for (std::size_t k = 1; k < chains.size(); ++k)
        if (detail::compose_chain(lcs, chains[k]) != first) {
          std::string w;
          for (Elem c : chains[k]) w += (w.empty() ? "" : "<") + S.name(c);
          throw LatticeError(ErrorKind::ChainDependence, S.name(x) + " to " + S.name(y) + " along " + w);
        }
      cs.set(std::move(first));
    }
  return cs;
}

/// Presents a glued system as a connected one: blocks become disjoint copies
/// and each comparable pair is linked by the identity on the overlap.
inline ConnectedSystem to_connected(const GluedSystem& sys) {
  const GlueIndex idx(sys);
  const auto& S = sys.skeleton;
  ConnectedSystem cs;
  cs.skeleton = S;
  cs.blocks = sys.blocks;
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y) {
      if (!S.lt(x, y)) continue;
      std::vector<std::pair<Elem, Elem>> pairs;
      const Bits I = idx.members(x) & idx.members(y);
      for (auto g = I.find_first(); g != Bits::npos; g = I.find_next(g))
        pairs.emplace_back(idx.local(x, static_cast<Elem>(g)), idx.local(y, static_cast<Elem>(g)));
      cs.set(PartialIso::from_pairs(x, y, sys.blocks[x].size(), sys.blocks[y].size(), pairs));
    }
  return cs;
}

/// Same as to_connected but keeps only the maps on covering pairs.
inline LocalConnectedSystem to_local(const GluedSystem& sys) {
  ConnectedSystem cs = to_connected(sys);
  LocalConnectedSystem lcs;
  lcs.skeleton = cs.skeleton;
  lcs.blocks = cs.blocks;
  for (auto& [key, p] : cs.maps)
    if (cs.skeleton.is_cover(key.first, key.second)) lcs.maps.emplace(key, p);
  return lcs;
}

}  // namespace sglue
