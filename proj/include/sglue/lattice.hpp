#pragma once

// Finite bounded lattices given by their Hasse diagram.
//
// A FiniteLattice is an immutable handle: the order relation, the join and
// meet tables, heights and cover lists are computed once at construction and
// shared between copies.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sglue/errors.hpp"

namespace sglue {

/// Index of an element inside one lattice. Names are the carrier ids.
using Elem = std::uint32_t;
using Bits = boost::dynamic_bitset<>;
using Cover = std::pair<Elem, Elem>;

inline constexpr Elem kNone = static_cast<Elem>(-1);

class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Builds a lattice from element names and cover pairs (lower, upper).
  static FiniteLattice from_covers(std::vector<std::string> names,
                                   const std::vector<std::pair<std::string, std::string>>& covers);

  static FiniteLattice from_index_covers(std::vector<std::string> names, std::vector<Cover> covers);

  /// Builds a lattice from an arbitrary relation; its reflexive-transitive
  /// closure is taken as the order and the covers are derived from it.
  /// `above[a]` holds every b with a R b.
  static FiniteLattice from_relation(std::vector<std::string> names, std::vector<Bits> above);

  bool empty() const noexcept { return !d_; }
  std::size_t size() const noexcept { return d_ ? d_->names.size() : 0; }

  const std::string& name(Elem a) const { return d_->names.at(a); }
  const std::vector<std::string>& names() const { return d_->names; }
  std::optional<Elem> find(std::string_view n) const {
    auto it = d_->index.find(std::string(n));
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
  }
  Elem at(std::string_view n) const {
    if (auto e = find(n)) return *e;
    throw LatticeError(ErrorKind::UnknownElement, "no element named '" + std::string(n) + "'");
  }
  void check(Elem a) const {
    if (a >= size()) throw LatticeError(ErrorKind::UnknownElement, "element index " + std::to_string(a));
  }

  bool leq(Elem a, Elem b) const { return d_->up[a].test(b); }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  Elem join(Elem a, Elem b) const { return d_->join[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return d_->meet[a * size() + b]; }
  Elem bottom() const { return d_->bottom; }
  Elem top() const { return d_->top; }

  /// Elements >= a (including a).
  const Bits& up_set(Elem a) const { return d_->up[a]; }
  /// Elements <= a (including a).
  const Bits& down_set(Elem a) const { return d_->down[a]; }

  std::span<const Elem> upper_covers(Elem a) const { return d_->upper[a]; }
  std::span<const Elem> lower_covers(Elem a) const { return d_->lower[a]; }
  bool is_cover(Elem a, Elem b) const {
    auto u = upper_covers(a);
    return std::find(u.begin(), u.end(), b) != u.end();
  }
  std::vector<Cover> covers() const {
    std::vector<Cover> out;
    for (Elem a = 0; a < size(); ++a)
      for (Elem b : upper_covers(a)) out.emplace_back(a, b);
    return out;
  }
  std::size_t cover_count() const {
    std::size_t n = 0;
    for (Elem a = 0; a < size(); ++a) n += d_->upper[a].size();
    return n;
  }

  /// Length of the longest chain from 0 to a.
  int height(Elem a) const { return d_->height[a]; }
  int length() const { return d_->height[d_->top]; }

  std::vector<Elem> atoms() const {
    auto u = upper_covers(bottom());
    return {u.begin(), u.end()};
  }
  std::vector<Elem> coatoms() const {
    auto l = lower_covers(top());
    return {l.begin(), l.end()};
  }

  /// A linear extension: elements sorted by height, ties by index.
  const std::vector<Elem>& linear_order() const { return d_->linear; }

  /// Join/meet of a (possibly empty) set; the empty join is 0.
  template <class Range>
  Elem join_all(const Range& r) const {
    Elem acc = bottom();
    for (Elem e : r) acc = join(acc, e);
    return acc;
  }
  template <class Range>
  Elem meet_all(const Range& r) const {
    Elem acc = top();
    for (Elem e : r) acc = meet(acc, e);
    return acc;
  }

  /// Same carrier and same order (names compared, order of listing ignored).
  bool same_as(const FiniteLattice& other) const;

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, Elem> index;
    std::vector<std::vector<Elem>> upper, lower;
    std::vector<Bits> up, down;
    std::vector<Elem> join, meet;
    std::vector<int> height;
    std::vector<Elem> linear;
    Elem bottom = 0, top = 0;
  };
  std::shared_ptr<const Data> d_;
};

namespace detail {

inline std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

inline std::unordered_map<std::string, Elem> index_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string, Elem> index;
  index.reserve(names.size());
  for (Elem i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second)
      throw LatticeError(ErrorKind::DuplicateElement, "element '" + names[i] + "' listed twice");
  }
  return index;
}

}  // namespace detail

inline FiniteLattice FiniteLattice::from_covers(
    std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& covers) {
  auto index = detail::index_names(names);
  std::vector<Cover> ic;
  ic.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto l = index.find(lo), h = index.find(hi);
    if (l == index.end() || h == index.end())
      throw LatticeError(ErrorKind::UnknownElement,
                         "cover (" + lo + "," + hi + ") references an unknown element");
    ic.emplace_back(l->second, h->second);
  }
  return from_index_covers(std::move(names), std::move(ic));
}

inline FiniteLattice FiniteLattice::from_index_covers(std::vector<std::string> names,
                                                      std::vector<Cover> covers) {
  const std::size_t n = names.size();
  if (n == 0) throw LatticeError(ErrorKind::NotBounded, "a lattice needs at least one element");
  auto d = std::make_shared<Data>();
  d->index = detail::index_names(names);
  d->names = std::move(names);
  d->upper.resize(n);
  d->lower.resize(n);

  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw LatticeError(ErrorKind::UnknownElement, "cover index out of range");
    if (a == b) throw LatticeError(ErrorKind::CycleDetected, "self-cover on '" + d->names[a] + "'");
    d->upper[a].push_back(b);
    d->lower[b].push_back(a);
  }

  // Kahn's algorithm gives a topological order or exposes a cycle.
  std::vector<Elem> topo;
  topo.reserve(n);
  {
    std::vector<std::size_t> indeg(n);
    for (Elem b = 0; b < n; ++b) indeg[b] = d->lower[b].size();
    for (Elem a = 0; a < n; ++a)
      if (indeg[a] == 0) topo.push_back(a);
    for (std::size_t i = 0; i < topo.size(); ++i)
      for (Elem b : d->upper[topo[i]])
        if (--indeg[b] == 0) topo.push_back(b);
    if (topo.size() != n) {
      for (Elem a = 0; a < n; ++a)
        if (indeg[a] != 0)
          throw LatticeError(ErrorKind::CycleDetected, "cover cycle through '" + d->names[a] + "'");
    }
  }

  d->up.assign(n, Bits(n));
  d->down.assign(n, Bits(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Elem a = *it;
    d->up[a].set(a);
    for (Elem b : d->upper[a]) d->up[a] |= d->up[b];
  }
  for (Elem a : topo) {
    d->down[a].set(a);
    for (Elem b : d->lower[a]) d->down[a] |= d->down[b];
  }

  for (auto [a, b] : covers) {
    for (Elem c : d->upper[a]) {
      if (c != b && d->up[c].test(b))
        throw LatticeError(ErrorKind::NotTransitiveReduction,
                           "cover (" + d->names[a] + "," + d->names[b] + ") is implied by '" +
                               d->names[c] + "'");
    }
  }

  std::vector<Elem> minimal, maximal;
  for (Elem a = 0; a < n; ++a) {
    if (d->lower[a].empty()) minimal.push_back(a);
    if (d->upper[a].empty()) maximal.push_back(a);
  }
  if (minimal.size() != 1 || maximal.size() != 1)
    throw LatticeError(ErrorKind::NotBounded, std::to_string(minimal.size()) + " minimal and " +
                                                  std::to_string(maximal.size()) + " maximal elements");
  d->bottom = minimal.front();
  d->top = maximal.front();

  d->height.assign(n, 0);
  for (Elem a : topo)
    for (Elem b : d->upper[a]) d->height[b] = std::max(d->height[b], d->height[a] + 1);

  std::vector<std::size_t> upcount(n), downcount(n);
  for (Elem a = 0; a < n; ++a) {
    upcount[a] = d->up[a].count();
    downcount[a] = d->down[a].count();
  }
  d->join.assign(n * n, kNone);
  d->meet.assign(n * n, kNone);
  Bits common(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      common = d->up[a];
      common &= d->up[b];
      const std::size_t c = common.count();
      Elem j = kNone;
      for (auto u = common.find_first(); u != Bits::npos; u = common.find_next(u)) {
        if (upcount[u] == c) {
          j = static_cast<Elem>(u);
          break;
        }
      }
      if (j == kNone)
        throw LatticeError(ErrorKind::NoUniqueJoin, "'" + d->names[a] + "' and '" + d->names[b] + "'");
      common = d->down[a];
      common &= d->down[b];
      const std::size_t m = common.count();
      Elem k = kNone;
      for (auto u = common.find_first(); u != Bits::npos; u = common.find_next(u)) {
        if (downcount[u] == m) {
          k = static_cast<Elem>(u);
          break;
        }
      }
      if (k == kNone)
        throw LatticeError(ErrorKind::NoUniqueMeet, "'" + d->names[a] + "' and '" + d->names[b] + "'");
      d->join[a * n + b] = d->join[b * n + a] = j;
      d->meet[a * n + b] = d->meet[b * n + a] = k;
    }
  }

  d->linear.resize(n);
  for (Elem a = 0; a < n; ++a) d->linear[a] = a;
  std::stable_sort(d->linear.begin(), d->linear.end(),
                   [&](Elem x, Elem y) { return d->height[x] < d->height[y]; });

  FiniteLattice out;
  out.d_ = std::move(d);
  return out;
}

inline FiniteLattice FiniteLattice::from_relation(std::vector<std::string> names,
                                                  std::vector<Bits> above) {
  const std::size_t n = names.size();
  if (above.size() != n) throw LatticeError(ErrorKind::Malformed, "relation size mismatch");
  for (Elem a = 0; a < n; ++a) {
    above[a].resize(n);
    above[a].set(a);
  }
  // Warshall closure on bitset rows.
  for (Elem k = 0; k < n; ++k)
    for (Elem a = 0; a < n; ++a)
      if (above[a].test(k)) above[a] |= above[k];

  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (above[a].test(b) && above[b].test(a))
        throw LatticeError(ErrorKind::CycleDetected,
                           "'" + names[a] + "' and '" + names[b] + "' are mutually below each other");

  std::vector<Cover> covers;
  Bits strict(n), implied(n);
  for (Elem a = 0; a < n; ++a) {
    strict = above[a];
    strict.reset(a);
    implied.reset();
    for (auto c = strict.find_first(); c != Bits::npos; c = strict.find_next(c)) {
      Bits s = above[c];
      s.reset(c);
      implied |= s;
    }
    strict -= implied;
    for (auto b = strict.find_first(); b != Bits::npos; b = strict.find_next(b))
      covers.emplace_back(a, static_cast<Elem>(b));
  }
  return from_index_covers(std::move(names), std::move(covers));
}

inline bool FiniteLattice::same_as(const FiniteLattice& other) const {
  if (size() != other.size()) return false;
  std::vector<Elem> to(size());
  for (Elem a = 0; a < size(); ++a) {
    auto b = other.find(name(a));
    if (!b) return false;
    to[a] = *b;
  }
  for (Elem a = 0; a < size(); ++a)
    for (Elem b = 0; b < size(); ++b)
      if (leq(a, b) != other.leq(to[a], to[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Derived lattices

/// Interval [lo, hi] of a parent lattice.
struct Interval {
  FiniteLattice parent;
  Elem lo = 0, hi = 0;
  std::vector<Elem> carrier;

  bool contains(Elem c) const { return parent.leq(lo, c) && parent.leq(c, hi); }
  /// The interval as a lattice in its own right, keeping the parent's names.
  FiniteLattice as_lattice() const;
};

/// Sublattice induced on `subset`; throws if the induced order is not a lattice.
inline FiniteLattice induced(const FiniteLattice& L, std::span<const Elem> subset) {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (Elem e : subset) {
    L.check(e);
    names.push_back(L.name(e));
  }
  std::vector<Bits> rel(subset.size(), Bits(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j)
      if (L.leq(subset[i], subset[j])) rel[i].set(j);
  return FiniteLattice::from_relation(std::move(names), std::move(rel));
}

inline FiniteLattice Interval::as_lattice() const {
  // Covers of an interval are the parent's covers inside it.
  std::vector<Elem> local(parent.size(), kNone);
  std::vector<std::string> names;
  for (Elem i = 0; i < carrier.size(); ++i) {
    local[carrier[i]] = i;
    names.push_back(parent.name(carrier[i]));
  }
  std::vector<Cover> covers;
  for (Elem c : carrier)
    for (Elem d : parent.upper_covers(c))
      if (local[d] != kNone) covers.emplace_back(local[c], local[d]);
  return FiniteLattice::from_index_covers(std::move(names), std::move(covers));
}

inline Interval interval(const FiniteLattice& L, Elem lo, Elem hi) {
  L.check(lo);
  L.check(hi);
  if (!L.leq(lo, hi))
    throw LatticeError(ErrorKind::NotComparable, "'" + L.name(lo) + "' is not below '" + L.name(hi) + "'");
  Interval iv{L, lo, hi, {}};
  Bits c = L.up_set(lo) & L.down_set(hi);
  for (auto e = c.find_first(); e != Bits::npos; e = c.find_next(e)) iv.carrier.push_back(static_cast<Elem>(e));
  return iv;
}

inline FiniteLattice dual(const FiniteLattice& L) {
  std::vector<Cover> covers;
  for (auto [a, b] : L.covers()) covers.emplace_back(b, a);
  return FiniteLattice::from_index_covers(L.names(), std::move(covers));
}

/// Direct product with componentwise order; element (a,b) has index a*|L2|+b.
inline FiniteLattice product(const FiniteLattice& L1, const FiniteLattice& L2) {
  const std::size_t m = L2.size();
  std::vector<std::string> names;
  names.reserve(L1.size() * m);
  for (Elem a = 0; a < L1.size(); ++a)
    for (Elem b = 0; b < m; ++b) names.push_back(detail::pair_name(L1.name(a), L2.name(b)));
  std::vector<Cover> covers;
  for (Elem a = 0; a < L1.size(); ++a) {
    for (Elem b = 0; b < m; ++b) {
      const Elem self = static_cast<Elem>(a * m + b);
      for (Elem a2 : L1.upper_covers(a)) covers.emplace_back(self, static_cast<Elem>(a2 * m + b));
      for (Elem b2 : L2.upper_covers(b)) covers.emplace_back(self, static_cast<Elem>(a * m + b2));
    }
  }
  return FiniteLattice::from_index_covers(std::move(names), std::move(covers));
}

/// Copy of L with every element renamed through `rename`.
template <class F>
FiniteLattice renamed(const FiniteLattice& L, F&& rename) {
  std::vector<std::string> names;
  names.reserve(L.size());
  for (Elem a = 0; a < L.size(); ++a) names.push_back(rename(L.name(a)));
  return FiniteLattice::from_index_covers(std::move(names), L.covers());
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Searches for an order isomorphism L1 -> L2; result[a] is the image of a.
/// Elements are placed in height order, so every lower cover of the element
/// being placed already has an image, and a candidate must have exactly
/// those images as its lower covers.
inline std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& L1, const FiniteLattice& L2) {
  const std::size_t n = L1.size();
  if (n != L2.size() || L1.cover_count() != L2.cover_count() || L1.length() != L2.length())
    return std::nullopt;

  auto signature = [](const FiniteLattice& L, Elem a) {
    return std::tuple(L.height(a), L.upper_covers(a).size(), L.lower_covers(a).size(),
                      L.up_set(a).count(), L.down_set(a).count());
  };
  {
    std::vector<decltype(signature(L1, 0))> s1, s2;
    for (Elem a = 0; a < n; ++a) {
      s1.push_back(signature(L1, a));
      s2.push_back(signature(L2, a));
    }
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  const auto& order = L1.linear_order();
  std::vector<std::vector<Elem>> candidates(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (signature(L1, a) == signature(L2, b)) candidates[a].push_back(b);

  std::vector<Elem> image(n, kNone);
  std::vector<char> used(n, 0);

  auto fits = [&](Elem a, Elem b) {
    for (Elem c : L1.lower_covers(a))
      if (!L2.is_cover(image[c], b)) return false;
    return true;
  };

  // Iterative backtracking over positions in `order`.
  std::vector<std::size_t> cursor(n, 0);
  std::size_t pos = 0;
  while (true) {
    if (pos == n) return image;
    const Elem a = order[pos];
    bool placed = false;
    while (cursor[pos] < candidates[a].size()) {
      const Elem b = candidates[a][cursor[pos]++];
      if (!used[b] && fits(a, b)) {
        image[a] = b;
        used[b] = 1;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++pos;
      if (pos < n) cursor[pos] = 0;
      continue;
    }
    if (pos == 0) return std::nullopt;
    --pos;
    const Elem prev = order[pos];
    used[image[prev]] = 0;
    image[prev] = kNone;
  }
}

inline bool isomorphic(const FiniteLattice& L1, const FiniteLattice& L2) {
  return find_isomorphism(L1, L2).has_value();
}

/// An order-reversing bijection of L onto itself, if one exists.
inline std::optional<std::vector<Elem>> find_anti_automorphism(const FiniteLattice& L) {
  return find_isomorphism(L, dual(L));
}

// ---------------------------------------------------------------------------
// Chains

/// All maximal chains of the interval [lo, hi], each listed from lo upward.
/// Stops after `limit` chains.
inline std::vector<std::vector<Elem>> maximal_chains(const FiniteLattice& L, Elem lo, Elem hi,
                                                     std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<std::vector<Elem>> out;
  if (!L.leq(lo, hi)) return out;
  std::vector<Elem> path{lo};
  auto rec = [&](auto&& self, Elem cur) -> void {
    if (out.size() >= limit) return;
    if (cur == hi) {
      out.push_back(path);
      return;
    }
    for (Elem nxt : L.upper_covers(cur)) {
      if (!L.leq(nxt, hi)) continue;
      path.push_back(nxt);
      self(self, nxt);
      path.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

}  // namespace sglue
