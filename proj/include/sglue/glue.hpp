#pragma once

// S-glued systems over a shared carrier.
//
// Blocks are ordinary FiniteLattice values; an element name that occurs in
// several blocks denotes one element of the carrier. Gluing is therefore
// nothing more than name identity, and the sum carries the transitive
// closure of the union of the block orders.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sglue/lattice.hpp"

namespace sglue {

struct GluedSystem {
  FiniteLattice skeleton;
  /// blocks[x] is the component lattice attached to skeleton element x.
  std::vector<FiniteLattice> blocks;

  const FiniteLattice& block(Elem x) const { return blocks.at(x); }
};

enum class Axiom { A1, A2, A3, A4 };

constexpr std::string_view to_string(Axiom a) noexcept {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
  }
  return "?";
}

struct GlueViolation {
  Axiom axiom;
  std::string x, y;                  // skeleton elements
  std::vector<std::string> witness;  // carrier elements
  std::string detail;
};

/// Shared-carrier bookkeeping: global ids, block membership and the
/// translation between block-local and global indices.
class GlueIndex {
 public:
  explicit GlueIndex(const GluedSystem& sys) : sys_(&sys) {
    if (sys.skeleton.empty() || sys.blocks.size() != sys.skeleton.size())
      throw LatticeError(ErrorKind::InvalidSystem, "need exactly one block per skeleton element");
    std::unordered_map<std::string, Elem> index;
    to_global_.resize(sys.blocks.size());
    for (Elem x = 0; x < sys.blocks.size(); ++x) {
      const auto& B = sys.blocks[x];
      if (B.empty()) throw LatticeError(ErrorKind::InvalidSystem, "empty block");
      for (Elem a = 0; a < B.size(); ++a) {
        auto [it, fresh] = index.emplace(B.name(a), static_cast<Elem>(names_.size()));
        if (fresh) names_.push_back(B.name(a));
        to_global_[x].push_back(it->second);
      }
    }
    index_ = std::move(index);
    const std::size_t n = names_.size();
    to_local_.assign(sys.blocks.size(), std::vector<Elem>(n, kNone));
    members_.assign(sys.blocks.size(), Bits(n));
    home_.assign(n, kNone);
    // Home block: the first block containing the element, in a linear
    // extension of the skeleton.
    for (Elem x : sys.skeleton.linear_order()) {
      for (Elem a = 0; a < to_global_[x].size(); ++a) {
        const Elem g = to_global_[x][a];
        to_local_[x][g] = a;
        members_[x].set(g);
        if (home_[g] == kNone) home_[g] = x;
      }
    }
  }

  const GluedSystem& system() const { return *sys_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem g) const { return names_.at(g); }
  std::optional<Elem> find(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Elem global(Elem x, Elem local) const { return to_global_[x][local]; }
  Elem local(Elem x, Elem g) const { return to_local_[x][g]; }
  bool in_block(Elem x, Elem g) const { return members_[x].test(g); }
  const Bits& members(Elem x) const { return members_[x]; }
  Elem home(Elem g) const { return home_[g]; }
  Elem zero(Elem x) const { return global(x, sys_->blocks[x].bottom()); }
  Elem one(Elem x) const { return global(x, sys_->blocks[x].top()); }

  /// Join / meet inside block x of two global elements of that block.
  Elem join_in(Elem x, Elem a, Elem b) const {
    return global(x, sys_->blocks[x].join(checked_local(x, a), checked_local(x, b)));
  }
  Elem meet_in(Elem x, Elem a, Elem b) const {
    return global(x, sys_->blocks[x].meet(checked_local(x, a), checked_local(x, b)));
  }
  bool leq_in(Elem x, Elem a, Elem b) const {
    return sys_->blocks[x].leq(checked_local(x, a), checked_local(x, b));
  }

 private:
  Elem checked_local(Elem x, Elem g) const {
    const Elem l = to_local_[x][g];
    if (l == kNone)
      throw std::logic_error("'" + names_[g] + "' is not in block '" + sys_->skeleton.name(x) + "'");
    return l;
  }

  const GluedSystem* sys_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<std::vector<Elem>> to_global_;
  std::vector<std::vector<Elem>> to_local_;
  std::vector<Bits> members_;
  std::vector<Elem> home_;
};

namespace detail {

inline std::vector<std::string> bit_names(const GlueIndex& idx, const Bits& b) {
  std::vector<std::string> out;
  for (auto g = b.find_first(); g != Bits::npos; g = b.find_next(g)) out.push_back(idx.name(static_cast<Elem>(g)));
  return out;
}

/// Facts that follow from the axioms; a failure here is a library bug.
inline void check_derived_facts(const GlueIndex& idx) {
  const auto& S = idx.system().skeleton;
  for (Elem x = 0; x < S.size(); ++x) {
    for (Elem y = 0; y < S.size(); ++y) {
      const Bits I = idx.members(x) & idx.members(y);
      const Bits I2 = idx.members(S.meet(x, y)) & idx.members(S.join(x, y));
      if (I != I2) throw std::logic_error("overlap differs from the meet/join overlap for " + S.name(x) + "," + S.name(y));
      if (I.none()) continue;
      if (S.leq(x, y)) {
        const Elem zy = idx.zero(y), ox = idx.one(x);
        if (!I.test(zy) || !I.test(ox)) throw std::logic_error("0_y or 1_x missing from the overlap");
        for (auto g = idx.members(x).find_first(); g != Bits::npos; g = idx.members(x).find_next(g)) {
          const Elem e = static_cast<Elem>(g);
          const bool between = idx.leq_in(x, zy, e) && idx.leq_in(x, e, ox);
          if (between != I.test(e)) throw std::logic_error("overlap is not the interval [0_y, 1_x] of L_x");
        }
      }
      for (auto a = I.find_first(); a != Bits::npos; a = I.find_next(a))
        for (auto b = I.find_first(); b != Bits::npos; b = I.find_next(b)) {
          const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
          if (idx.join_in(x, ea, eb) != idx.join_in(y, ea, eb) || idx.meet_in(x, ea, eb) != idx.meet_in(y, ea, eb))
            throw std::logic_error("block operations disagree on an overlap");
        }
    }
  }
}

}  // namespace detail

/// Checks axioms A1-A4 for every pair of skeleton elements. An empty
/// result means the family is an S-glued system.
inline std::vector<GlueViolation> validate(const GluedSystem& sys) {
  const GlueIndex idx(sys);
  const auto& S = sys.skeleton;
  std::vector<GlueViolation> out;

  for (Elem x = 0; x < S.size(); ++x) {
    for (Elem y = 0; y < S.size(); ++y) {
      if (x == y) continue;
      const Bits I = idx.members(x) & idx.members(y);
      if (S.leq(x, y) && I.any()) {
        // A1: filter of L_x, ideal of L_y.
        std::optional<GlueViolation> v1;
        for (auto a = I.find_first(); a != Bits::npos && !v1; a = I.find_next(a)) {
          const Elem ea = static_cast<Elem>(a);
          const auto& Bx = sys.blocks[x];
          const auto& By = sys.blocks[y];
          const Elem lx = idx.local(x, ea), ly = idx.local(y, ea);
          for (Elem c = 0; c < Bx.size() && !v1; ++c)
            if (Bx.leq(lx, c) && !I.test(idx.global(x, c)))
              v1 = GlueViolation{Axiom::A1, S.name(x), S.name(y), {idx.name(ea), Bx.name(c)},
                                 "overlap is not upward closed in L_x"};
          for (Elem c = 0; c < By.size() && !v1; ++c)
            if (By.leq(c, ly) && !I.test(idx.global(y, c)))
              v1 = GlueViolation{Axiom::A1, S.name(x), S.name(y), {idx.name(ea), By.name(c)},
                                 "overlap is not downward closed in L_y"};
          for (auto b = I.find_first(); b != Bits::npos && !v1; b = I.find_next(b)) {
            const Elem eb = static_cast<Elem>(b);
            const Elem m = idx.global(x, Bx.meet(lx, idx.local(x, eb)));
            const Elem j = idx.global(y, By.join(ly, idx.local(y, eb)));
            if (!I.test(m))
              v1 = GlueViolation{Axiom::A1, S.name(x), S.name(y), {idx.name(ea), idx.name(eb)},
                                 "overlap is not closed under the meet of L_x"};
            else if (!I.test(j))
              v1 = GlueViolation{Axiom::A1, S.name(x), S.name(y), {idx.name(ea), idx.name(eb)},
                                 "overlap is not closed under the join of L_y"};
          }
        }
        if (v1) out.push_back(*v1);

        // A2: orders agree on the overlap.
        bool done = false;
        for (auto a = I.find_first(); a != Bits::npos && !done; a = I.find_next(a))
          for (auto b = I.find_first(); b != Bits::npos && !done; b = I.find_next(b)) {
            const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
            if (idx.leq_in(x, ea, eb) != idx.leq_in(y, ea, eb)) {
              out.push_back({Axiom::A2, S.name(x), S.name(y), {idx.name(ea), idx.name(eb)},
                             "orders of L_x and L_y disagree"});
              done = true;
            }
          }
      }
      // A3: covering pairs overlap.
      if (S.is_cover(x, y) && I.none())
        out.push_back({Axiom::A3, S.name(x), S.name(y), {}, "covering pair with empty overlap"});
      // A4, each unordered pair once.
      if (x < y) {
        const Bits allowed = idx.members(S.meet(x, y)) & idx.members(S.join(x, y));
        const Bits extra = I - allowed;
        if (extra.any())
          out.push_back({Axiom::A4, S.name(x), S.name(y), detail::bit_names(idx, extra),
                         "overlap not contained in L_(x^y) and L_(xvy)"});
      }
    }
  }
  if (out.empty()) detail::check_derived_facts(idx);
  return out;
}

inline bool is_valid(const GluedSystem& sys) { return validate(sys).empty(); }

/// The glued sum: union carrier ordered by the transitive closure of the
/// union of the block orders. The result is re-validated as a lattice.
inline FiniteLattice sum(const GluedSystem& sys) {
  const GlueIndex idx(sys);
  std::vector<Bits> rel(idx.size(), Bits(idx.size()));
  for (Elem x = 0; x < sys.blocks.size(); ++x) {
    const auto& B = sys.blocks[x];
    for (auto [a, b] : B.covers()) rel[idx.global(x, a)].set(idx.global(x, b));
  }
  try {
    return FiniteLattice::from_relation(idx.names(), std::move(rel));
  } catch (const LatticeError& e) {
    throw LatticeError(ErrorKind::NotALattice, std::string("glued sum: ") + e.what());
  }
}

/// Covers of the sum are exactly the block covers, and every block is an
/// interval sublattice of the sum with the same operations.
inline bool check_sum_structure(const GluedSystem& sys, const FiniteLattice& M) {
  const GlueIndex idx(sys);
  std::vector<Elem> to_m(idx.size());
  for (Elem g = 0; g < idx.size(); ++g) {
    auto e = M.find(idx.name(g));
    if (!e) return false;
    to_m[g] = *e;
  }
  if (M.size() != idx.size()) return false;
  std::size_t block_covers = 0;
  std::vector<std::pair<Elem, Elem>> seen;
  for (Elem x = 0; x < sys.blocks.size(); ++x) {
    const auto& B = sys.blocks[x];
    for (auto [a, b] : B.covers()) seen.emplace_back(to_m[idx.global(x, a)], to_m[idx.global(x, b)]);
    for (Elem a = 0; a < B.size(); ++a)
      for (Elem b = 0; b < B.size(); ++b) {
        const Elem ma = to_m[idx.global(x, a)], mb = to_m[idx.global(x, b)];
        if (M.join(ma, mb) != to_m[idx.global(x, B.join(a, b))]) return false;
        if (M.meet(ma, mb) != to_m[idx.global(x, B.meet(a, b))]) return false;
      }
    // Interval: everything between 0_x and 1_x lies in the block.
    const Bits between = M.up_set(to_m[idx.zero(x)]) & M.down_set(to_m[idx.one(x)]);
    if (between.count() != B.size()) return false;
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  block_covers = seen.size();
  if (block_covers != M.cover_count()) return false;
  for (auto [a, b] : seen)
    if (!M.is_cover(a, b)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Arithmetic of the sum from block operations alone

/// Computes joins and meets in the glued sum using only block operations:
/// sup(a, 0_z) is pushed up a maximal chain x = x_0 < x_1 < ... < x_n = z by
/// c_i = c_(i-1) +_(x_(i-1)) 0_(x_i), and sup(a, b) = sup(a, 0_(xvy)) +_(xvy)
/// sup(b, 0_(xvy)). Meets are dual. Where the skeleton offers two different
/// maximal chains, both are evaluated and must agree.
class FormulaArithmetic {
 public:
  explicit FormulaArithmetic(const GluedSystem& sys) : sys_(sys), idx_(sys_) {}

  const GlueIndex& index() const { return idx_; }

  Elem sup(Elem a, Elem b) const {
    if (a == b) return a;
    const auto& S = sys_.skeleton;
    const Elem x = idx_.home(a), y = idx_.home(b);
    const Elem z = S.join(x, y);
    return idx_.join_in(z, raise(a, x, z), raise(b, y, z));
  }

  Elem inf(Elem a, Elem b) const {
    if (a == b) return a;
    const auto& S = sys_.skeleton;
    const Elem x = idx_.home(a), y = idx_.home(b);
    const Elem z = S.meet(x, y);
    return idx_.meet_in(z, lower(a, x, z), lower(b, y, z));
  }

  /// sup(a, 0_z) for a in L_x, x <= z.
  Elem raise(Elem a, Elem x, Elem z) const {
    const Elem first = raise_along(a, chain_up(x, z, false));
    const Elem second = raise_along(a, chain_up(x, z, true));
    if (first != second) throw std::logic_error("join formula depends on the chosen skeleton chain");
    return first;
  }

  /// inf(a, 1_z) for a in L_x, z <= x.
  Elem lower(Elem a, Elem x, Elem z) const {
    const Elem first = lower_along(a, chain_down(x, z, false));
    const Elem second = lower_along(a, chain_down(x, z, true));
    if (first != second) throw std::logic_error("meet formula depends on the chosen skeleton chain");
    return first;
  }

 private:
  std::vector<Elem> chain_up(Elem x, Elem z, bool last) const {
    const auto& S = sys_.skeleton;
    std::vector<Elem> chain{x};
    while (chain.back() != z) {
      Elem pick = kNone;
      for (Elem c : S.upper_covers(chain.back()))
        if (S.leq(c, z)) {
          pick = c;
          if (!last) break;
        }
      chain.push_back(pick);
    }
    return chain;
  }
  std::vector<Elem> chain_down(Elem x, Elem z, bool last) const {
    const auto& S = sys_.skeleton;
    std::vector<Elem> chain{x};
    while (chain.back() != z) {
      Elem pick = kNone;
      for (Elem c : S.lower_covers(chain.back()))
        if (S.leq(z, c)) {
          pick = c;
          if (!last) break;
        }
      chain.push_back(pick);
    }
    return chain;
  }
  Elem raise_along(Elem a, const std::vector<Elem>& chain) const {
    Elem c = a;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) c = idx_.join_in(chain[i], c, idx_.zero(chain[i + 1]));
    return c;
  }
  Elem lower_along(Elem a, const std::vector<Elem>& chain) const {
    Elem c = a;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) c = idx_.meet_in(chain[i], c, idx_.one(chain[i + 1]));
    return c;
  }

  GluedSystem sys_;
  GlueIndex idx_;
};

inline std::string sup_via_formulas(const GluedSystem& sys, const std::string& a, const std::string& b) {
  FormulaArithmetic f(sys);
  const auto& idx = f.index();
  auto ga = idx.find(a), gb = idx.find(b);
  if (!ga || !gb) throw LatticeError(ErrorKind::UnknownElement, a + " or " + b);
  return idx.name(f.sup(*ga, *gb));
}

inline std::string inf_via_formulas(const GluedSystem& sys, const std::string& a, const std::string& b) {
  FormulaArithmetic f(sys);
  const auto& idx = f.index();
  auto ga = idx.find(a), gb = idx.find(b);
  if (!ga || !gb) throw LatticeError(ErrorKind::UnknownElement, a + " or " + b);
  return idx.name(f.inf(*ga, *gb));
}

// ---------------------------------------------------------------------------
// Monotonicity and the maps x -> 0_x, x -> 1_x

/// For every skeleton cover x < y neither block contains the other.
inline bool is_monotone_strict(const GluedSystem& sys) {
  const GlueIndex idx(sys);
  for (auto [x, y] : sys.skeleton.covers()) {
    if (idx.members(y).is_subset_of(idx.members(x))) return false;
    if (idx.members(x).is_subset_of(idx.members(y))) return false;
  }
  return true;
}

namespace detail {
/// Only L_y not contained in L_x for covers x < y. Kept to reproduce the
/// failure of the one-sided definition.
inline bool is_monotone_one_sided(const GluedSystem& sys) {
  const GlueIndex idx(sys);
  for (auto [x, y] : sys.skeleton.covers())
    if (idx.members(y).is_subset_of(idx.members(x))) return false;
  return true;
}
}  // namespace detail

struct ZeroOneMaps {
  std::vector<std::string> zero;  // zero[x] = name of 0_x
  std::vector<std::string> one;   // one[x] = name of 1_x
  bool zero_preserves_joins = false;
  bool one_preserves_meets = false;
  bool zero_injective = false;
  bool one_injective = false;
};

inline ZeroOneMaps zero_one_maps(const GluedSystem& sys) {
  const GlueIndex idx(sys);
  const FiniteLattice M = sum(sys);
  const auto& S = sys.skeleton;
  ZeroOneMaps out;
  std::vector<Elem> z(S.size()), o(S.size());
  for (Elem x = 0; x < S.size(); ++x) {
    out.zero.push_back(idx.name(idx.zero(x)));
    out.one.push_back(idx.name(idx.one(x)));
    z[x] = M.at(out.zero.back());
    o[x] = M.at(out.one.back());
  }
  out.zero_preserves_joins = out.one_preserves_meets = true;
  out.zero_injective = out.one_injective = true;
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem y = 0; y < S.size(); ++y) {
      if (M.join(z[x], z[y]) != z[S.join(x, y)]) out.zero_preserves_joins = false;
      if (M.meet(o[x], o[y]) != o[S.meet(x, y)]) out.one_preserves_meets = false;
      if (x != y && z[x] == z[y]) out.zero_injective = false;
      if (x != y && o[x] == o[y]) out.one_injective = false;
    }
  return out;
}

struct LengthBound {
  int sum_length = 0;
  int block_length = 0;     // k: longest block
  int skeleton_length = 0;  // l
  bool holds() const { return sum_length <= block_length * (skeleton_length + 1); }
};

inline LengthBound length_bound(const GluedSystem& sys) {
  LengthBound lb;
  lb.sum_length = sum(sys).length();
  for (const auto& B : sys.blocks) lb.block_length = std::max(lb.block_length, B.length());
  lb.skeleton_length = sys.skeleton.length();
  return lb;
}

inline bool length_bound_check(const GluedSystem& sys) { return length_bound(sys).holds(); }

}  // namespace sglue
