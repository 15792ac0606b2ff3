#pragma once

// Acceptance criteria AC1..AC12 over the small-lattice corpus and the
// fixture catalog. Shared by the `suite` subcommand and the acceptance test.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sglue/connect.hpp"
#include "sglue/constructions.hpp"
#include "sglue/enumerate.hpp"
#include "sglue/glue.hpp"
#include "sglue/hom.hpp"
#include "sglue/oracles.hpp"
#include "sglue/predicates.hpp"
#include "sglue/skeleton.hpp"

namespace sglue {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;  // first failures, or a one-line summary
  double seconds = 0;
  double limit = 0;    // wall-clock budget in seconds, 0 if none
};

struct SuiteOptions {
  int corpus_max = 7;
  std::optional<std::uint64_t> seed;  // shuffles iteration order only
};

/// Reads LATTICE_SUITE_SEED if set.
inline SuiteOptions suite_options_from_env(int corpus_max) {
  SuiteOptions o;
  o.corpus_max = corpus_max;
  if (const char* s = std::getenv("LATTICE_SUITE_SEED")) {
    try {
      o.seed = std::stoull(s);
    } catch (const std::exception&) {
      throw LatticeError(ErrorKind::Malformed, "LATTICE_SUITE_SEED must be an unsigned integer");
    }
  }
  return o;
}

struct NamedLattice {
  std::string label;
  FiniteLattice lattice;
};

struct Corpus {
  std::vector<NamedLattice> enumerated;  // every lattice up to corpus_max elements
  std::vector<NamedLattice> modular;     // modular enumerated lattices plus fixtures
  std::vector<GluedFixture> glued;       // valid glued fixtures
  std::vector<GluedFixture> invalid;     // fixtures rejected by validate()
  int corpus_max = 0;
};

inline Corpus build_corpus(const SuiteOptions& opt) {
  Corpus c;
  c.corpus_max = opt.corpus_max;
  const auto all = enumerate_lattices(opt.corpus_max);
  std::map<std::size_t, int> seen;
  for (const auto& L : all) {
    const std::string label = "L" + std::to_string(L.size()) + "_" + std::to_string(seen[L.size()]++);
    c.enumerated.push_back({label, L});
    if (is_modular(L)) c.modular.push_back({label, L});
  }
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 3; ++q) c.modular.push_back({"grid_" + std::to_string(p) + "x" + std::to_string(q), grid(p, q)});
  for (int n = 0; n <= 4; ++n) c.modular.push_back({"boolean_" + std::to_string(n), boolean(n)});
  c.modular.push_back({"m3_x_chain2", product(m3(), chain(2))});
  c.modular.push_back({"fano", fano()});
  for (const auto& e : std::vector<NamedLattice>(c.modular.begin(), c.modular.end()))
    if (e.lattice.size() <= 7 && e.label[0] == 'L')
      c.modular.push_back({"square_" + e.label, square_sublattice(e.lattice).lattice});
  for (auto& f : glued_fixtures()) {
    if (!is_valid(f.system)) {
      c.invalid.push_back(std::move(f));
      continue;
    }
    if (f.name == "projective") c.modular.push_back({"projective", sum(f.system)});
    c.glued.push_back(std::move(f));
  }
  if (opt.seed) {
    std::mt19937_64 rng(*opt.seed);
    std::shuffle(c.enumerated.begin(), c.enumerated.end(), rng);
    std::shuffle(c.modular.begin(), c.modular.end(), rng);
    std::shuffle(c.glued.begin(), c.glued.end(), rng);
  }
  return c;
}

namespace detail {

/// Collects failures; keeps the first few for the report line.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      if (failures_.size() < 5) failures_.push_back(what);
      ++failed_;
    }
  }
  void absorb(const Report& r, const std::string& where) {
    ++checks_;
    if (!r.ok()) {
      if (failures_.size() < 5) failures_.push_back(where + ": " + r.failures.front());
      ++failed_;
    }
  }
  bool ok() const { return failed_ == 0; }
  std::string summary(const std::string& extra = {}) const {
    std::ostringstream os;
    if (ok()) {
      os << checks_ << " checks";
      if (!extra.empty()) os << ", " << extra;
      return os.str();
    }
    os << failed_ << " of " << checks_ << " checks failed";
    for (const auto& f : failures_) os << "; " << f;
    return os.str();
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

inline bool nd(const FiniteLattice& L, int n) { return is_modular(L) && is_n_distributive(L, n); }

/// Glued systems for the formula and transfer checks: valid fixtures and
/// the decompositions of the modular corpus.
inline std::vector<std::pair<std::string, GluedSystem>> glued_systems(const Corpus& c) {
  std::vector<std::pair<std::string, GluedSystem>> out;
  for (const auto& f : c.glued) out.emplace_back(f.name, f.system);
  for (const auto& e : c.modular) out.emplace_back("decompose(" + e.label + ")", decompose(e.lattice).system);
  return out;
}

/// Identity family of a decomposition: each block [x, x*] included in M.
inline HomFamily inclusion_family(const GluedSystem& sys, const FiniteLattice& host) {
  HomFamily fam;
  for (const auto& B : sys.blocks) {
    LatticeHom h{B, host, std::vector<Elem>(B.size())};
    for (Elem a = 0; a < B.size(); ++a) h.map[a] = host.at(B.name(a));
    fam.push_back(std::move(h));
  }
  return fam;
}

inline bool all_injective(const HomFamily& fam) {
  return std::all_of(fam.begin(), fam.end(), [](const LatticeHom& h) { return is_injective(h); });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criteria

inline CriterionResult ac1_roundtrip(const Corpus& c) {
  detail::Tally t;
  for (const auto& e : c.modular) {
    const auto d = decompose(e.lattice);
    const FiniteLattice M = sum(d.system);
    t.check(M.same_as(e.lattice), "roundtrip differs on " + e.label);
    t.check(check_sum_structure(d.system, M), "block structure wrong on " + e.label);
  }
  return {"AC1", "decompose then glue reproduces every modular lattice", t.ok(),
          t.summary(std::to_string(c.modular.size()) + " lattices"), 0, 60};
}

inline CriterionResult ac2_formulas(const Corpus& c) {
  detail::Tally t;
  for (const auto& [label, sys] : detail::glued_systems(c)) {
    const auto oracle = oracle::closure_order(sys);
    const FormulaArithmetic fa(sys);
    const GlueIndex& idx = fa.index();
    std::vector<std::size_t> to_oracle(idx.size());
    for (Elem g = 0; g < idx.size(); ++g) to_oracle[g] = oracle.index(idx.name(g));
    bool ok = oracle.size() == idx.size();
    for (Elem a = 0; a < idx.size() && ok; ++a)
      for (Elem b = a; b < idx.size() && ok; ++b) {
        const auto s = oracle.sup(to_oracle[a], to_oracle[b]);
        const auto i = oracle.inf(to_oracle[a], to_oracle[b]);
        if (s == oracle.size() || i == oracle.size()) ok = false;
        else if (oracle.names[s] != idx.name(fa.sup(a, b)) || oracle.names[i] != idx.name(fa.inf(a, b))) ok = false;
      }
    t.check(ok, "formulas disagree with the closure order on " + label);
  }
  return {"AC2", "sup/inf formulas match brute-force bounds", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac3_transfer(const Corpus& c) {
  detail::Tally t;
  for (const auto& [label, sys] : detail::glued_systems(c)) {
    const FiniteLattice M = sum(sys);
    const bool blocks_modular =
        std::all_of(sys.blocks.begin(), sys.blocks.end(), [](const FiniteLattice& B) { return is_modular(B); });
    if (blocks_modular) t.check(is_modular(M), "modular blocks, non-modular sum on " + label);
    int block_breadth = 0;
    for (const auto& B : sys.blocks) block_breadth = std::max(block_breadth, breadth(B));
    const int b = breadth(M);
    t.check(b == block_breadth, "breadth " + std::to_string(b) + " vs block maximum " + std::to_string(block_breadth) +
                                    " on " + label);
    for (int n = 1; n <= 3; ++n) {
      const bool blocks_nd =
          std::all_of(sys.blocks.begin(), sys.blocks.end(), [n](const FiniteLattice& B) { return detail::nd(B, n); });
      if (blocks_nd) t.check(detail::nd(M, n), std::to_string(n) + "-distributive blocks, sum is not, on " + label);
    }
  }
  return {"AC3", "modularity, breadth and n-distributivity transfer to the sum", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac4_star_plus(const Corpus& c) {
  detail::Tally t;
  for (const auto& e : c.modular) t.absorb(star_plus_suite(e.lattice), e.label);
  return {"AC4", "star/plus identities and their duals", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac5_skeleton(const Corpus& c) {
  detail::Tally t;
  for (const auto& e : c.modular) {
    t.check(skeleton_set(e.lattice) == oracle::maximal_atomistic_minima(e.lattice),
            "fixed points differ from atomistic-interval minima on " + e.label);
    t.absorb(skeleton_duality_suite(e.lattice), e.label);
  }
  return {"AC5", "skeleton equals maximal atomistic interval minima; duality", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac6_distributive_construction(const Corpus&) {
  detail::Tally t;
  const auto lattices = enumerate_lattices(5);
  for (const auto& S : lattices) {
    const auto con = distributive_with_skeleton(S);
    const std::string label = "S with " + std::to_string(S.size()) + " elements";
    t.check(is_valid(con.system) && is_monotone_strict(con.system), "invalid system over " + label);
    t.check(is_distributive(con.lattice), "not distributive over " + label);
    t.check(isomorphic(skeleton_lattice(con.lattice), S), "skeleton not isomorphic over " + label);
    auto embedded = con.skeleton_embedding;
    std::sort(embedded.begin(), embedded.end());
    t.check(embedded == skeleton_set(con.lattice), "block zeros are not the skeleton over " + label);
  }
  return {"AC6", "distributive lattice with prescribed skeleton", t.ok(),
          t.summary(std::to_string(lattices.size()) + " skeletons"), 0, 120};
}

inline CriterionResult ac7_square_construction(const Corpus& c) {
  detail::Tally t;
  std::size_t count = 0;
  for (const auto& e : c.enumerated) {
    if (e.lattice.size() > 7 || !is_modular(e.lattice)) continue;
    ++count;
    const auto con = square_sublattice(e.lattice);
    t.check(sum_is_sublattice_of(con.system, product(e.lattice, e.lattice)), "not a sublattice of S x S for " + e.label);
    t.check(isomorphic(skeleton_lattice(con.lattice), e.lattice), "skeleton not isomorphic for " + e.label);
  }
  return {"AC7", "sublattice of S x S with skeleton S", t.ok(), t.summary(std::to_string(count) + " skeletons"), 0,
          0};
}

inline CriterionResult ac8_projective_example(const Corpus&) {
  detail::Tally t;
  const auto f = projective_glued();
  const FiniteLattice M = sum(f.system);
  t.check(M.length() == 6, "length " + std::to_string(M.length()));
  const int b = breadth(M);
  t.check(b == 3, "breadth " + std::to_string(b));
  t.check(find_boolean_embedding(M, 3).has_value() && !find_boolean_embedding(M, 4).has_value(),
          "order-embedding search disagrees with breadth 3");
  t.check(is_modular(M), "not modular");
  t.check(is_simple(M), "not simple");
  std::vector<Elem> gens;
  for (const auto& n : projective_generators()) gens.push_back(M.at(n));
  t.check(generated_sublattice(M, gens).size() == M.size(), "generators do not generate");
  return {"AC8", "projective-plane example", t.ok(), t.summary(std::to_string(M.size()) + " elements"), 0, 60};
}

namespace detail {

inline void check_connected(Tally& t, const ConnectedSystem& cs, const std::string& label) {
  t.check(validate_connected(cs).empty(), "connected conditions fail on " + label);
  const auto& S = cs.skeleton;
  std::vector<std::pair<Elem, Elem>> all;
  for (Elem x = 0; x < S.size(); ++x)
    for (Elem a = 0; a < cs.blocks[x].size(); ++a) all.emplace_back(x, a);
  const std::size_t n = all.size();
  std::vector<Bits> rel(n, Bits(n));
  bool coincide = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto crit = equivalence_criteria(cs, all[i].first, all[i].second, all[j].first, all[j].second);
      if (!std::all_of(crit.begin(), crit.end(), [&](bool v) { return v == crit[0]; })) coincide = false;
      if (crit[0]) rel[i].set(j);
    }
  t.check(coincide, "criteria disagree on " + label);
  bool equivalence = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i].test(i)) equivalence = false;
    for (auto j = rel[i].find_first(); j != Bits::npos; j = rel[i].find_next(j))
      if (!rel[j].test(i) || !rel[j].is_subset_of(rel[i])) equivalence = false;
  }
  t.check(equivalence, "~ is not an equivalence on " + label);

  const ConnectedSum q = connected_sum(cs);
  t.check(is_valid(q.glued), "quotient is not a glued system on " + label);
  const FiniteLattice M = sum(q.glued);
  bool iso = true;
  for (Elem x = 0; x < S.size(); ++x) {
    const auto& L = cs.blocks[x];
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b) {
        const Elem pa = M.at(q.projection[x][a]), pb = M.at(q.projection[x][b]);
        if (L.leq(a, b) != M.leq(pa, pb) || M.at(q.projection[x][L.join(a, b)]) != M.join(pa, pb) ||
            M.at(q.projection[x][L.meet(a, b)]) != M.meet(pa, pb))
          iso = false;
      }
  }
  t.check(iso, "projection is not an isomorphism onto its block on " + label);
}

}  // namespace detail

inline CriterionResult ac9_connect(const Corpus& c) {
  detail::Tally t;
  detail::check_connected(t, hall_dilworth_connected(), "hall_dilworth_connected");
  detail::check_connected(t, elevate(projective_example()), "projective");
  for (const auto& f : c.glued) {
    const ConnectedSystem cs = to_connected(f.system);
    detail::check_connected(t, cs, f.name);
    t.check(isomorphic(sum(connected_sum(cs).glued), sum(f.system)), "quotient sum differs on " + f.name);
  }
  // Chain independence, every maximal chain.
  std::vector<std::pair<std::string, LocalConnectedSystem>> local;
  local.emplace_back("projective", projective_example());
  local.emplace_back("B2 skeleton", to_local(squares_3x3().system));
  local.emplace_back("B3 skeleton", to_local(decompose(product(product(chain(2), chain(2)), chain(2))).system));
  for (const auto& [label, lcs] : local) {
    try {
      const ConnectedSystem two = elevate(lcs, ChainCheck::TwoChains);
      const ConnectedSystem all = elevate(lcs, ChainCheck::Exhaustive);
      t.check(two.maps == all.maps, "elevation depends on chain choice on " + label);
    } catch (const LatticeError& e) {
      t.check(false, label + ": " + e.what());
    }
  }
  const auto b3 = decompose(product(product(chain(2), chain(2)), chain(2))).system;
  t.check(isomorphic(b3.skeleton, boolean(3)), "B3 fixture has the wrong skeleton");
  t.check(elevate(to_local(b3), ChainCheck::Exhaustive).maps == to_connected(b3).maps,
          "elevated maps differ from the overlap identities on B3");
  return {"AC9", "connected systems: criteria, equivalence, projections, chains", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac10_homs(const Corpus& c) {
  detail::Tally t;
  auto glue_and_check = [&](const GluedSystem& sys, const HomFamily& fam, const std::string& label) {
    if (is_modular(sys.skeleton)) t.check(check_star(sys, fam), "zero/one condition fails on " + label);
    try {
      const LatticeHom h = glue_homs(sys, fam);
      t.check(is_homomorphism(h), "glued map is not a homomorphism on " + label);
      t.check(is_injective(h) == detail::all_injective(fam), "injectivity mismatch on " + label);
    } catch (const LatticeError& e) {
      t.check(false, label + ": " + e.what());
    }
  };
  const FiniteLattice point = chain(0);
  for (const auto& e : c.modular) {
    const auto d = decompose(e.lattice);
    glue_and_check(d.system, detail::inclusion_family(d.system, e.lattice), "inclusion into " + e.label);
    HomFamily constant;
    for (const auto& B : d.system.blocks) constant.push_back({B, point, std::vector<Elem>(B.size(), 0)});
    glue_and_check(d.system, constant, "constant on " + e.label);
  }
  // Projection of a grid onto its first factor.
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q) {
      const auto d = decompose(grid(p, q));
      const FiniteLattice target = chain(p);
      HomFamily fam;
      for (const auto& B : d.system.blocks) {
        LatticeHom h{B, target, std::vector<Elem>(B.size())};
        for (Elem a = 0; a < B.size(); ++a) {
          const std::string& n = B.name(a);  // "(i,j)"
          h.map[a] = target.at(n.substr(1, n.find(',') - 1));
        }
        fam.push_back(std::move(h));
      }
      glue_and_check(d.system, fam, "projection of grid " + std::to_string(p) + "x" + std::to_string(q));
    }
  for (const auto& e : c.enumerated) {
    if (e.lattice.size() > 7 || !is_modular(e.lattice)) continue;
    const auto con = square_sublattice(e.lattice);
    const FiniteLattice host = product(e.lattice, e.lattice);
    glue_and_check(con.system, detail::inclusion_family(con.system, host), "square inclusion for " + e.label);
  }
  // A non-modular skeleton: the inclusion family satisfies the condition;
  // collapsing the top block onto the top breaks it.
  {
    const auto con = distributive_with_skeleton(n5());
    HomFamily fam = detail::inclusion_family(con.system, con.lattice);
    glue_and_check(con.system, fam, "inclusion over N5");
    t.check(check_star(con.system, fam), "inclusion family over N5 fails the zero/one condition");
    const Elem top = con.system.skeleton.top();
    std::fill(fam[top].map.begin(), fam[top].map.end(), con.lattice.top());
    t.check(!check_star(con.system, fam), "skewed family over N5 passes the zero/one condition");
    bool rejected = false;
    try {
      glue_homs(con.system, fam);
    } catch (const LatticeError&) {
      rejected = true;
    }
    t.check(rejected, "skewed family over N5 was glued");
  }
  // Families on connected systems.
  {
    const ConnectedSystem cs = hall_dilworth_connected();
    const FiniteLattice C = chain(2);
    HomFamily fam{{cs.blocks[0], C, {C.at("0"), C.at("1")}}, {cs.blocks[1], C, {C.at("1"), C.at("2")}}};
    try {
      const LatticeHom h = glue_connected_homs(cs, fam);
      t.check(is_homomorphism(h) && is_injective(h), "connected gluing into a chain");
    } catch (const LatticeError& e) {
      t.check(false, std::string("connected gluing into a chain: ") + e.what());
    }
  }
  for (const auto& f : c.glued) {
    const ConnectedSystem cs = to_connected(f.system);
    const FiniteLattice M = sum(f.system);
    try {
      const LatticeHom h = glue_connected_homs(cs, detail::inclusion_family(f.system, M));
      t.check(is_homomorphism(h) && is_injective(h) && h.domain.size() == M.size(),
              "connected inclusion family on " + f.name);
    } catch (const LatticeError& e) {
      t.check(false, f.name + ": " + e.what());
    }
  }
  // Sums of simple blocks whose overlaps are not single points.
  std::size_t simple_fixtures = 0;
  for (const auto& f : c.glued) {
    if (f.name != "m3_chain_2" && f.name != "m3_chain_3" && f.name != "fano_pair") continue;
    ++simple_fixtures;
    t.check(simplicity_transfer_check(f.system), "sum of simple blocks is not simple on " + f.name);
  }
  t.check(simple_fixtures >= 3, "fewer than three simple-block fixtures");
  return {"AC10", "gluing homomorphisms and simplicity", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac11_counterexamples(const Corpus&) {
  detail::Tally t;
  auto axioms_of = [](const GluedFixture& f) {
    std::set<std::string> out;
    for (const auto& v : validate(f.system)) out.insert(std::string(to_string(v.axiom)));
    return out;
  };
  t.check(axioms_of(nonsystem_filter()) == std::set<std::string>{"A1"}, "filter non-system is not tagged A1 only");
  t.check(axioms_of(nonsystem_overlap()) == std::set<std::string>{"A4"}, "overlap non-system is not tagged A4 only");

  const auto ov = overlap_fixture();
  t.check(is_valid(ov.system), "overlap fixture does not validate");
  t.check(!is_monotone_strict(ov.system), "overlap fixture is strictly monotone");
  const GlueIndex oi(ov.system);
  t.check(oi.zero(ov.system.skeleton.at("1")) == oi.zero(ov.system.skeleton.at("2")), "overlap fixture has distinct zeros for its two atoms");
  t.check(!zero_one_maps(ov.system).zero_injective, "overlap fixture has an injective zero map");

  const auto n3 = shrinking_skeleton();
  const FiniteLattice M3 = sum(n3.system);
  std::set<std::string> of_sum, of_blocks;
  for (Elem a : skeleton_set(M3)) of_sum.insert(M3.name(a));
  for (const auto& B : n3.system.blocks)
    for (Elem a : skeleton_set(B)) of_blocks.insert(B.name(a));
  t.check(std::includes(of_blocks.begin(), of_blocks.end(), of_sum.begin(), of_sum.end()) && of_sum != of_blocks,
          "skeleton of the sum is not a proper part of the block skeletons");

  int last = -1;
  for (int n = 1; n <= 5; ++n) {
    const auto f = unbounded_family(n);
    const auto lb = length_bound(f.system);
    t.check(lb.sum_length > last, "length does not increase at n = " + std::to_string(n));
    t.check(lb.skeleton_length == 2, "skeleton length changes at n = " + std::to_string(n));
    t.check(lb.holds(), "length bound fails at n = " + std::to_string(n));
    last = lb.sum_length;
  }
  return {"AC11", "non-systems and counterexamples", t.ok(), t.summary(), 0, 0};
}

inline CriterionResult ac12_enumeration(const Corpus& c) {
  static constexpr std::size_t expected[] = {0, 1, 1, 1, 2, 5, 15, 53, 222};
  detail::Tally t;
  std::map<std::size_t, std::size_t> counts;
  for (const auto& e : c.enumerated) ++counts[e.lattice.size()];
  for (int n = 1; n <= c.corpus_max; ++n)
    t.check(counts[n] == expected[n], std::to_string(counts[n]) + " lattices with " + std::to_string(n) + " elements");
  for (int n = 1; n <= std::min(5, c.corpus_max); ++n) {
    const auto naive = oracle::naive_lattices(n);
    const auto fast = enumerate_lattices_of_size(n);
    bool match = naive.size() == fast.size();
    for (const auto& L : naive)
      if (std::none_of(fast.begin(), fast.end(), [&](const FiniteLattice& F) { return isomorphic(F, L); })) match = false;
    t.check(match, "naive enumeration differs at " + std::to_string(n) + " elements");
  }
  return {"AC12", "lattice enumeration counts", t.ok(), t.summary(std::to_string(c.enumerated.size()) + " lattices"),
          0, 0};
}

// ---------------------------------------------------------------------------

using Criterion = std::function<CriterionResult(const Corpus&)>;

inline std::vector<std::pair<std::string, Criterion>> criteria() {
  return {{"AC1", ac1_roundtrip},
          {"AC2", ac2_formulas},
          {"AC3", ac3_transfer},
          {"AC4", ac4_star_plus},
          {"AC5", ac5_skeleton},
          {"AC6", ac6_distributive_construction},
          {"AC7", ac7_square_construction},
          {"AC8", ac8_projective_example},
          {"AC9", ac9_connect},
          {"AC10", ac10_homs},
          {"AC11", ac11_counterexamples},
          {"AC12", ac12_enumeration}};
}

/// Runs one criterion with timing; exceptions count as failure.
inline CriterionResult run_criterion(const std::string& id, const Criterion& f, const Corpus& c) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = f(c);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "aborted";
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.limit > 0 && r.seconds > r.limit) {
    r.passed = false;
    r.detail += "; over the time budget";
  }
  return r;
}

inline std::vector<CriterionResult> run_suite(const SuiteOptions& opt) {
  const Corpus c = build_corpus(opt);
  std::vector<CriterionResult> out;
  for (const auto& [id, f] : criteria()) out.push_back(run_criterion(id, f, c));
  return out;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << std::fixed;
  os.precision(2);
  os << r.seconds << " s";
  if (r.limit > 0) os << " of " << r.limit << " s";
  os << "): " << r.detail;
  return os.str();
}

}  // namespace sglue
