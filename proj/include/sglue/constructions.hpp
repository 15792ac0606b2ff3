#pragma once

// Named lattices, the two skeleton constructions, and the fixture catalog
// used by the tests and the command line.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sglue/connect.hpp"
#include "sglue/glue.hpp"
#include "sglue/skeleton.hpp"

namespace sglue {

// ---------------------------------------------------------------------------
// Standard lattices

/// Chain 0 < 1 < ... < n (n + 1 elements).
inline FiniteLattice chain(int n) {
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (int i = 0; i <= n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return FiniteLattice::from_index_covers(std::move(names), std::move(covers));
}

/// Subsets of the first n letters; the empty set is "0".
inline FiniteLattice boolean(int n) {
  if (n < 0 || n > 20) throw LatticeError(ErrorKind::LimitExceeded, "boolean lattice rank");
  const std::uint32_t size = 1u << n;
  std::vector<std::string> names(size);
  for (std::uint32_t s = 0; s < size; ++s) {
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) names[s] += static_cast<char>('a' + i);
    if (names[s].empty()) names[s] = "0";
  }
  std::vector<Cover> covers;
  for (std::uint32_t s = 0; s < size; ++s)
    for (int i = 0; i < n; ++i)
      if (!(s & (1u << i))) covers.emplace_back(s, s | (1u << i));
  return FiniteLattice::from_index_covers(std::move(names), std::move(covers));
}

/// 0 < a_1, ..., a_n < 1; m(3) is the diamond.
inline FiniteLattice mn(int n) {
  std::vector<std::string> names{"0"};
  std::vector<Cover> covers;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  names.push_back("1");
  const Elem top = static_cast<Elem>(n + 1);
  for (Elem i = 1; i <= static_cast<Elem>(n); ++i) {
    covers.emplace_back(0, i);
    covers.emplace_back(i, top);
  }
  if (n == 0) covers.emplace_back(0, top);
  return FiniteLattice::from_index_covers(std::move(names), std::move(covers));
}

inline FiniteLattice m3() { return mn(3); }

/// The pentagon 0 < a < b < 1, 0 < c < 1.
inline FiniteLattice n5() {
  return FiniteLattice::from_covers({"0", "a", "b", "c", "1"},
                                    {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

/// Product of the chains 0..p and 0..q; elements are named "(i,j)".
inline FiniteLattice grid(int p, int q) { return product(chain(p), chain(q)); }

/// Subspace lattice of the Fano plane: bottom "o", points "p1".."p7",
/// lines "l124" etc., top "i".
inline FiniteLattice fano() {
  static constexpr int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  std::vector<std::string> names{"o"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int p = 1; p <= 7; ++p) {
    names.push_back("p" + std::to_string(p));
    covers.emplace_back("o", names.back());
  }
  for (const auto& l : lines) {
    std::string n = "l";
    for (int p : l) n += std::to_string(p);
    names.push_back(n);
    for (int p : l) covers.emplace_back("p" + std::to_string(p), n);
    covers.emplace_back(n, "i");
  }
  names.push_back("i");
  return FiniteLattice::from_covers(std::move(names), covers);
}

// ---------------------------------------------------------------------------
// Lattices with a prescribed skeleton

struct SkeletonConstruction {
  GluedSystem system;
  FiniteLattice lattice;                  // the glued sum
  std::vector<Elem> skeleton_embedding;   // x -> 0_x as an element of `lattice`
};

namespace detail {
inline std::string subset_name(const FiniteLattice& S, std::uint64_t set) {
  std::string out = "{";
  bool first = true;
  for (Elem s = 0; s < S.size(); ++s)
    if (set & (std::uint64_t{1} << s)) {
      if (!first) out += ",";
      out += S.name(s);
      first = false;
    }
  return out + "}";
}

inline void finish_construction(SkeletonConstruction& c) {
  c.lattice = sum(c.system);
  const GlueIndex idx(c.system);
  for (Elem x = 0; x < c.system.skeleton.size(); ++x) c.skeleton_embedding.push_back(c.lattice.at(idx.name(idx.zero(x))));
}
}  // namespace detail

/// Distributive lattice whose skeleton is S: the block of x is the set of
/// pairs (A, B) with A a subset of the down-set of x and B a subset of its
/// up-set, ordered by A growing and B shrinking.
inline SkeletonConstruction distributive_with_skeleton(const FiniteLattice& S) {
  if (S.size() > 16) throw LatticeError(ErrorKind::LimitExceeded, "skeleton too large for this construction");
  SkeletonConstruction c;
  c.system.skeleton = S;
  for (Elem x = 0; x < S.size(); ++x) {
    std::vector<Elem> down, up;
    for (Elem s = 0; s < S.size(); ++s) {
      if (S.leq(s, x)) down.push_back(s);
      if (S.leq(x, s)) up.push_back(s);
    }
    const std::size_t k = down.size() + up.size();
    const std::uint32_t count = 1u << k;
    // Bit i < |down| selects down[i] into A; the remaining bits select
    // up-set elements that are *missing* from B, so the order is inclusion.
    auto decode = [&](std::uint32_t code) {
      std::uint64_t A = 0, B = 0;
      for (std::size_t i = 0; i < down.size(); ++i)
        if (code & (1u << i)) A |= std::uint64_t{1} << down[i];
      for (std::size_t i = 0; i < up.size(); ++i)
        if (!(code & (1u << (down.size() + i)))) B |= std::uint64_t{1} << up[i];
      return std::pair{A, B};
    };
    std::vector<std::string> names(count);
    for (std::uint32_t code = 0; code < count; ++code) {
      auto [A, B] = decode(code);
      names[code] = detail::subset_name(S, A) + "|" + detail::subset_name(S, B);
    }
    std::vector<Cover> covers;
    for (std::uint32_t code = 0; code < count; ++code)
      for (std::size_t i = 0; i < k; ++i)
        if (!(code & (1u << i))) covers.emplace_back(code, code | (1u << i));
    c.system.blocks.push_back(FiniteLattice::from_index_covers(std::move(names), std::move(covers)));
  }
  detail::finish_construction(c);
  return c;
}

/// Sublattice of S x S whose skeleton is S, for modular S: the block of x
/// is the interval [(x+, x), (x, x*)].
inline SkeletonConstruction square_sublattice(const FiniteLattice& S) {
  detail::require_modular(S, "square sublattice construction");
  const FiniteLattice P = product(S, S);
  const std::size_t n = S.size();
  SkeletonConstruction c;
  c.system.skeleton = S;
  for (Elem x = 0; x < n; ++x) {
    const Elem lo = static_cast<Elem>(detail::plus_unchecked(S, x) * n + x);
    const Elem hi = static_cast<Elem>(x * n + detail::star_unchecked(S, x));
    c.system.blocks.push_back(interval(P, lo, hi).as_lattice());
  }
  detail::finish_construction(c);
  return c;
}

// ---------------------------------------------------------------------------
// Expected-property manifests

struct Manifest {
  std::optional<bool> valid;
  std::optional<std::string> violated_axiom;
  std::optional<bool> strictly_monotone;
  std::optional<bool> zero_injective;
  std::optional<bool> modular_sum;
  std::optional<bool> distributive_sum;
  std::optional<bool> simple_sum;
  std::optional<int> sum_size;
  std::optional<int> sum_length;
  std::optional<int> sum_breadth;
  std::optional<int> skeleton_length;
  std::string note;
};

struct GluedFixture {
  std::string name;
  GluedSystem system;
  Manifest expect;
};

namespace detail {
inline FiniteLattice lat(std::vector<std::string> names, std::vector<std::pair<std::string, std::string>> covers) {
  return FiniteLattice::from_covers(std::move(names), covers);
}
}  // namespace detail

/// Four 2x2 squares over a diamond skeleton; their sum is the 3x3 grid.
inline GluedFixture squares_3x3() {
  using detail::lat;
  GluedSystem s;
  s.skeleton = lat({"1", "2", "3", "4"}, {{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}});
  s.blocks = {lat({"a", "b", "c", "e"}, {{"a", "b"}, {"a", "c"}, {"b", "e"}, {"c", "e"}}),
              lat({"b", "d", "e", "g"}, {{"b", "d"}, {"b", "e"}, {"d", "g"}, {"e", "g"}}),
              lat({"c", "e", "f", "h"}, {{"c", "e"}, {"c", "f"}, {"e", "h"}, {"f", "h"}}),
              lat({"e", "g", "h", "i"}, {{"e", "g"}, {"e", "h"}, {"g", "i"}, {"h", "i"}})};
  Manifest m;
  m.valid = true;
  m.strictly_monotone = true;
  m.modular_sum = m.distributive_sum = true;
  m.simple_sum = false;
  m.sum_size = 9;
  m.sum_length = 4;
  m.sum_breadth = 2;
  m.skeleton_length = 2;
  return {"squares_3x3", std::move(s), m};
}

/// Chain skeleton where the second block swallows the first: valid, but
/// 0_1 = 0_2.
inline GluedFixture overlap_fixture() {
  using detail::lat;
  GluedSystem s;
  s.skeleton = lat({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}});
  s.blocks = {lat({"a", "b"}, {{"a", "b"}}), lat({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}),
              lat({"c", "d"}, {{"c", "d"}}), lat({"c", "d"}, {{"c", "d"}})};
  Manifest m;
  m.valid = true;
  m.strictly_monotone = false;
  m.zero_injective = false;
  m.sum_size = 4;
  m.sum_length = 3;
  return {"overlap", std::move(s), m};
}

/// B3 glued over a 2-chain with the interval above the atom b.
inline GluedFixture shrinking_skeleton() {
  using detail::lat;
  GluedSystem s;
  s.skeleton = lat({"1", "2"}, {{"1", "2"}});
  s.blocks = {lat({"0", "a", "b", "c", "ab", "ac", "bc", "1"}, {{"0", "a"},
                                                               {"0", "b"},
                                                               {"0", "c"},
                                                               {"a", "ab"},
                                                               {"a", "ac"},
                                                               {"b", "ab"},
                                                               {"b", "bc"},
                                                               {"c", "ac"},
                                                               {"c", "bc"},
                                                               {"ab", "1"},
                                                               {"ac", "1"},
                                                               {"bc", "1"}}),
              lat({"b", "ab", "bc", "1"}, {{"b", "ab"}, {"b", "bc"}, {"ab", "1"}, {"bc", "1"}})};
  Manifest m;
  m.valid = true;
  m.strictly_monotone = false;
  m.modular_sum = m.distributive_sum = true;
  m.sum_size = 8;
  m.sum_length = 3;
  return {"shrinking_skeleton", std::move(s), m};
}

/// Skeleton A < 1..n < Omega. L_A and L_Omega are M_n; block k carries a
/// chain of k elements beside e. The sum has length n + 3.
inline GluedFixture unbounded_family(int n) {
  if (n < 1) throw LatticeError(ErrorKind::Malformed, "unbounded_family needs n >= 1");
  GluedSystem s;
  std::vector<std::string> sk{"A"};
  std::vector<std::pair<std::string, std::string>> skc;
  for (int k = 1; k <= n; ++k) {
    sk.push_back(std::to_string(k));
    skc.emplace_back("A", sk.back());
    skc.emplace_back(sk.back(), "Omega");
  }
  sk.push_back("Omega");
  s.skeleton = FiniteLattice::from_covers(sk, skc);

  auto b = [](int k) { return "b" + std::to_string(k); };
  auto g = [](int k) { return "g" + std::to_string(k); };
  auto d = [](int k, int j) { return "d" + std::to_string(k) + "_" + std::to_string(j); };

  std::vector<std::string> na{"a", "e"};
  std::vector<std::pair<std::string, std::string>> ca;
  std::vector<std::string> no{"e", "h"};
  std::vector<std::pair<std::string, std::string>> co;
  for (int k = 1; k <= n; ++k) {
    na.push_back(b(k));
    ca.emplace_back("a", b(k));
    ca.emplace_back(b(k), "e");
    no.push_back(g(k));
    co.emplace_back("e", g(k));
    co.emplace_back(g(k), "h");
  }
  s.blocks.push_back(FiniteLattice::from_covers(na, ca));
  for (int k = 1; k <= n; ++k) {
    std::vector<std::string> nk{b(k), "e", g(k)};
    std::vector<std::pair<std::string, std::string>> ck{{b(k), "e"}, {"e", g(k)}};
    std::string prev = b(k);
    for (int j = 1; j <= k; ++j) {
      nk.push_back(d(k, j));
      ck.emplace_back(prev, d(k, j));
      prev = d(k, j);
    }
    ck.emplace_back(prev, g(k));
    s.blocks.push_back(FiniteLattice::from_covers(nk, ck));
  }
  s.blocks.push_back(FiniteLattice::from_covers(no, co));
  Manifest m;
  m.valid = true;
  m.sum_length = n + 3;
  m.skeleton_length = 2;
  return {"unbounded_" + std::to_string(n), std::move(s), m};
}

/// Two disjoint chains would violate A1: the overlap {u} is not a filter
/// of the lower block.
inline GluedFixture nonsystem_filter() {
  using detail::lat;
  GluedSystem s;
  s.skeleton = lat({"0", "1"}, {{"0", "1"}});
  s.blocks = {lat({"p", "u", "q"}, {{"p", "u"}, {"u", "q"}}), lat({"u", "r"}, {{"u", "r"}})};
  Manifest m;
  m.valid = false;
  m.violated_axiom = "A1";
  return {"nonsystem_filter", std::move(s), m};
}

/// Incomparable blocks share elements that are not in the bottom block.
inline GluedFixture nonsystem_overlap() {
  using detail::lat;
  GluedSystem s;
  s.skeleton = lat({"0", "x", "y", "1"}, {{"0", "x"}, {"0", "y"}, {"x", "1"}, {"y", "1"}});
  s.blocks = {lat({"p", "a"}, {{"p", "a"}}), lat({"a", "u"}, {{"a", "u"}}), lat({"a", "u"}, {{"a", "u"}}),
              lat({"u", "t"}, {{"u", "t"}})};
  Manifest m;
  m.valid = false;
  m.violated_axiom = "A4";
  return {"nonsystem_overlap", std::move(s), m};
}

/// Two 2-chains sharing one element.
inline GluedFixture hall_dilworth() {
  using detail::lat;
  GluedSystem s;
  s.skeleton = lat({"0", "1"}, {{"0", "1"}});
  s.blocks = {lat({"p", "q"}, {{"p", "q"}}), lat({"q", "r"}, {{"q", "r"}})};
  Manifest m;
  m.valid = true;
  m.strictly_monotone = true;
  m.modular_sum = m.distributive_sum = true;
  m.sum_size = 3;
  m.sum_length = 2;
  return {"hall_dilworth", std::move(s), m};
}

/// A chain of k diamonds, consecutive ones overlapping in a 2-chain.
inline GluedFixture m3_chain(int k) {
  GluedSystem s;
  s.skeleton = chain(k - 1);
  // Block i has bottom z_i, atoms z_(i+1), y_i, w_i and top z_(i+2).
  auto z = [](int i) { return "z" + std::to_string(i); };
  for (int i = 0; i < k; ++i) {
    const std::string y = "y" + std::to_string(i), w = "w" + std::to_string(i);
    s.blocks.push_back(FiniteLattice::from_covers(
        {z(i), z(i + 1), y, w, z(i + 2)},
        {{z(i), z(i + 1)}, {z(i), y}, {z(i), w}, {z(i + 1), z(i + 2)}, {y, z(i + 2)}, {w, z(i + 2)}}));
  }
  Manifest m;
  m.valid = true;
  m.strictly_monotone = true;
  m.modular_sum = true;
  m.simple_sum = true;
  m.sum_size = 3 * k + 2;
  m.sum_length = k + 1;
  m.sum_breadth = 2;
  return {"m3_chain_" + std::to_string(k), std::move(s), m};
}

/// Two diamonds sharing only the top of one and the bottom of the other.
/// Every block is simple, the sum is not.
inline GluedFixture m3_point_pair() {
  GluedSystem s;
  s.skeleton = chain(1);
  s.blocks = {FiniteLattice::from_covers({"0", "a", "b", "c", "m"},
                                         {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "m"}, {"b", "m"}, {"c", "m"}}),
              FiniteLattice::from_covers({"m", "d", "e", "f", "1"},
                                         {{"m", "d"}, {"m", "e"}, {"m", "f"}, {"d", "1"}, {"e", "1"}, {"f", "1"}})};
  Manifest m;
  m.valid = true;
  m.modular_sum = true;
  m.simple_sum = false;
  m.sum_size = 9;
  m.sum_length = 4;
  return {"m3_point_pair", std::move(s), m};
}

/// Two Fano planes: the line l123 and the top of the first are the bottom
/// and the point p1 of the second. Both blocks are simple.
inline GluedFixture fano_pair() {
  GluedSystem s;
  s.skeleton = chain(1);
  s.blocks.push_back(fano());
  s.blocks.push_back(renamed(fano(), [](const std::string& n) {
    if (n == "o") return std::string("l123");
    if (n == "p1") return std::string("i");
    return "u" + n;
  }));
  Manifest m;
  m.valid = true;
  m.strictly_monotone = true;
  m.modular_sum = true;
  m.simple_sum = true;
  m.sum_size = 30;
  m.sum_length = 5;
  return {"fano_pair", std::move(s), m};
}

// ---------------------------------------------------------------------------
// The projective-plane example

/// Skeleton M4 = {0, x1..x4, 1}. L_0 and L_1 are Fano planes; L_x1 is a
/// diamond with atoms a1, e1, e0; L_xj (j = 2, 3, 4) is a square with atoms
/// aj, ej. The lines g1..g4 of L_0 are the four lines missing point 1, and
/// the points P1..P4 of L_1 form a frame. Maps: g_i -> 0_xi, 1_0 -> a_i and
/// a_i -> 0_1, 1_xi -> P_i.
inline LocalConnectedSystem projective_example() {
  LocalConnectedSystem lcs;
  std::vector<std::string> sk{"0", "x1", "x2", "x3", "x4", "1"};
  std::vector<std::pair<std::string, std::string>> skc;
  for (int i = 1; i <= 4; ++i) {
    skc.emplace_back("0", sk[i]);
    skc.emplace_back(sk[i], "1");
  }
  lcs.skeleton = FiniteLattice::from_covers(sk, skc);
  lcs.blocks.resize(6);
  lcs.blocks[0] = fano();
  lcs.blocks[5] = fano();
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "a" + std::to_string(i), e = "e" + std::to_string(i);
    if (i == 1)
      lcs.blocks[i] = FiniteLattice::from_covers(
          {"o", a, e, "e0", "i"}, {{"o", a}, {"o", e}, {"o", "e0"}, {a, "i"}, {e, "i"}, {"e0", "i"}});
    else
      lcs.blocks[i] = FiniteLattice::from_covers({"o", a, e, "i"}, {{"o", a}, {"o", e}, {a, "i"}, {e, "i"}});
  }
  static const char* lines[4] = {"l246", "l257", "l347", "l356"};
  static const char* frame[4] = {"p1", "p2", "p4", "p7"};
  const FiniteLattice& L0 = lcs.blocks[0];
  const FiniteLattice& L1 = lcs.blocks[5];
  for (Elem i = 1; i <= 4; ++i) {
    const FiniteLattice& Lx = lcs.blocks[i];
    const Elem ai = Lx.at("a" + std::to_string(i));
    const std::vector<std::pair<Elem, Elem>> low{{L0.at(lines[i - 1]), Lx.at("o")}, {L0.at("i"), ai}};
    const std::vector<std::pair<Elem, Elem>> high{{ai, L1.at("o")}, {Lx.at("i"), L1.at(frame[i - 1])}};
    lcs.set(PartialIso::from_pairs(0, i, L0.size(), Lx.size(), low));
    lcs.set(PartialIso::from_pairs(i, 5, Lx.size(), L1.size(), high));
  }
  return lcs;
}

/// Carrier names of the five generators in the connected sum.
inline std::vector<std::string> projective_generators() { return {"x1:e0", "x1:e1", "x2:e2", "x3:e3", "x4:e4"}; }

inline GluedFixture projective_glued() {
  Manifest m;
  m.valid = true;
  m.strictly_monotone = true;
  m.modular_sum = true;
  m.distributive_sum = false;
  m.simple_sum = true;
  m.sum_size = 36;
  m.sum_length = 6;
  m.sum_breadth = 3;
  m.skeleton_length = 2;
  return {"projective", connected_sum(elevate(projective_example())).glued, m};
}

/// Connected two-chain pair: top of the first identified with the bottom
/// of the second.
inline ConnectedSystem hall_dilworth_connected() {
  ConnectedSystem cs;
  cs.skeleton = chain(1);
  cs.blocks = {FiniteLattice::from_covers({"a", "u"}, {{"a", "u"}}), FiniteLattice::from_covers({"v", "b"}, {{"v", "b"}})};
  const std::vector<std::pair<Elem, Elem>> pairs{{cs.blocks[0].at("u"), cs.blocks[1].at("v")}};
  cs.set(PartialIso::from_pairs(0, 1, 2, 2, pairs));
  return cs;
}

/// Every glued fixture with a manifest, including the invalid ones.
inline std::vector<GluedFixture> glued_fixtures() {
  std::vector<GluedFixture> out;
  out.push_back(squares_3x3());
  out.push_back(overlap_fixture());
  out.push_back(shrinking_skeleton());
  for (int n = 1; n <= 5; ++n) out.push_back(unbounded_family(n));
  out.push_back(nonsystem_filter());
  out.push_back(nonsystem_overlap());
  out.push_back(hall_dilworth());
  out.push_back(m3_chain(2));
  out.push_back(m3_chain(3));
  out.push_back(m3_point_pair());
  out.push_back(fano_pair());
  out.push_back(projective_glued());
  {
    auto c = distributive_with_skeleton(n5());
    Manifest m;
    m.valid = true;
    m.strictly_monotone = true;
    m.distributive_sum = true;
    out.push_back({"distributive_over_n5", c.system, m});
  }
  {
    auto c = square_sublattice(m3());
    Manifest m;
    m.valid = true;
    m.strictly_monotone = true;
    m.modular_sum = true;
    out.push_back({"square_over_m3", c.system, m});
  }
  return out;
}

/// Looks up a glued fixture by name; unbounded_N and m3_chain_N accept any N.
inline std::optional<GluedFixture> find_glued_fixture(const std::string& name) {
  auto numbered = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (auto n = numbered("unbounded_")) return unbounded_family(*n);
  if (auto n = numbered("m3_chain_")) return m3_chain(*n);
  for (auto& f : glued_fixtures())
    if (f.name == name) return f;
  return std::nullopt;
}

}  // namespace sglue
