#pragma once

// All lattices with a given number of elements, one per isomorphism class.
//
// A lattice on n >= 2 elements is a bounded poset, so it is enough to
// enumerate posets on the n - 2 interior elements. Every poset has a natural
// labelling (i < j whenever i is below j), so only upper-triangular
// transitive relations are generated. Isomorphs are removed by a canonical
// code: the smallest relation matrix over all relabellings of the interior.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sglue/lattice.hpp"

namespace sglue {

inline constexpr int kMaxEnumerated = 8;

namespace detail {

/// above[i] is the bitmask of interior elements strictly above i.
using Rows = std::vector<std::uint32_t>;

inline bool bounded_poset_is_lattice(const Rows& above, int m) {
  // Interior elements only; the bounds always give a least upper bound
  // unless two or more minimal common upper bounds exist inside.
  std::vector<std::uint32_t> up(m), down(m, 0);
  for (int i = 0; i < m; ++i) up[i] = above[i] | (1u << i);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (up[i] & (1u << j)) down[j] |= 1u << i;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const std::uint32_t ub = up[a] & up[b];
      if (ub) {
        bool found = false;
        for (int u = 0; u < m && !found; ++u)
          if ((ub & (1u << u)) && (up[u] & ub) == ub) found = true;
        if (!found) return false;
      }
      const std::uint32_t lb = down[a] & down[b];
      if (lb) {
        bool found = false;
        for (int l = 0; l < m && !found; ++l)
          if ((lb & (1u << l)) && (down[l] & lb) == lb) found = true;
        if (!found) return false;
      }
    }
  return true;
}

inline std::uint64_t relation_code(const Rows& above, const std::vector<int>& perm, int m) {
  // perm[new] = old; bit (i*m + j) set when new i is below new j.
  std::uint64_t code = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (above[perm[i]] & (1u << perm[j])) code |= std::uint64_t{1} << (i * m + j);
  return code;
}

inline std::uint64_t canonical_code(const Rows& above, int m) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, relation_code(above, perm, m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline FiniteLattice lattice_from_code(std::uint64_t code, int m) {
  const std::size_t n = static_cast<std::size_t>(m) + 2;
  std::vector<std::string> names{"0"};
  for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  names.push_back("1");
  std::vector<Bits> rel(n, Bits(n));
  const Elem top = static_cast<Elem>(m + 1);
  rel[0].set(top);
  for (int i = 0; i < m; ++i) {
    rel[0].set(i + 1);
    rel[i + 1].set(top);
    for (int j = 0; j < m; ++j)
      if (code & (std::uint64_t{1} << (i * m + j))) rel[i + 1].set(j + 1);
  }
  return FiniteLattice::from_relation(std::move(names), std::move(rel));
}

}  // namespace detail

/// One representative per isomorphism class of lattices with exactly n
/// elements, in a fixed order.
inline std::vector<FiniteLattice> enumerate_lattices_of_size(int n) {
  if (n > kMaxEnumerated) throw LatticeError(ErrorKind::LimitExceeded, "enumeration is limited to 8 elements");
  std::vector<FiniteLattice> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(FiniteLattice::from_index_covers({"0"}, {}));
    return out;
  }
  const int m = n - 2;
  std::vector<std::pair<int, int>> slots;  // i < j candidate relations
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  detail::Rows above(m);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(above.begin(), above.end(), 0u);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask & (std::uint64_t{1} << s)) above[slots[s].first] |= 1u << slots[s].second;
    bool transitive = true;
    for (int i = 0; i < m && transitive; ++i)
      for (int j = i + 1; j < m && transitive; ++j)
        if ((above[i] & (1u << j)) && (above[j] & ~above[i])) transitive = false;
    if (!transitive || !detail::bounded_poset_is_lattice(above, m)) continue;
    seen.insert(detail::canonical_code(above, m));
  }
  for (std::uint64_t code : seen) out.push_back(detail::lattice_from_code(code, m));
  return out;
}

/// All lattices with 1..max_elements elements, grouped by size.
inline std::vector<FiniteLattice> enumerate_lattices(int max_elements) {
  if (max_elements > kMaxEnumerated)
    throw LatticeError(ErrorKind::LimitExceeded, "enumeration is limited to 8 elements");
  std::vector<FiniteLattice> out;
  for (int n = 1; n <= max_elements; ++n) {
    auto part = enumerate_lattices_of_size(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace sglue
