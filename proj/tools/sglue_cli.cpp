// Command line front end.
//
//   sglue check FILE --property modular [--property breadth ...]
//   sglue glue FILE [--out PATH] [--dot PATH]
//   sglue connect FILE [--out PATH] [--exhaustive]
//   sglue skeleton FILE [--out PATH] [--dot PATH]
//   sglue construct NAME [--n N] [--p P] [--q Q] [--skeleton FILE] [--out PATH]
//   sglue suite [--corpus-max N]
//   sglue dot FILE
//
// Exit status: 0 when every requested check holds, 1 on a violation (with a
// JSON description on stderr), 2 on malformed input.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sglue/sglue.hpp"
#include "sglue/suite.hpp"

namespace {

using namespace sglue;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kMalformed = 2;

struct Violation {
  Json body;
};

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    write_json_file(out_path, j);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> names_of(const FiniteLattice& L, const std::vector<Elem>& es) {
  std::vector<std::string> out;
  for (Elem e : es) out.push_back(L.name(e));
  return out;
}

// ---------------------------------------------------------------------------

int run_check(const std::string& file, const std::vector<std::string>& properties) {
  const FiniteLattice L = lattice_from_json(read_json_file(file));
  Json result = Json::object();
  Json failed = Json::array();
  for (const auto& p : properties) {
    if (p == "breadth") {
      result[p] = breadth(L);
      continue;
    }
    bool value = false;
    if (p == "modular") value = is_modular(L);
    else if (p == "semimodular") value = is_semimodular(L);
    else if (p == "dual-semimodular") value = is_dual_semimodular(L);
    else if (p == "distributive") value = is_distributive(L);
    else if (p == "atomistic") value = is_atomistic(L);
    else if (p == "simple") value = is_simple(L);
    else if (p.rfind("n-distributive:", 0) == 0) {
      int n = 0;
      try {
        n = std::stoi(p.substr(15));
      } catch (const std::exception&) {
        throw LatticeError(ErrorKind::Malformed, "bad property '" + p + "'");
      }
      if (n < 1) throw LatticeError(ErrorKind::Malformed, "n-distributive needs n >= 1");
      value = is_modular(L) && is_n_distributive(L, n);
    } else {
      throw LatticeError(ErrorKind::Malformed, "unknown property '" + p + "'");
    }
    result[p] = value;
    if (!value) failed.push_back(p);
  }
  std::cout << result.dump(2) << '\n';
  if (!failed.empty()) throw Violation{{{"command", "check"}, {"file", file}, {"failed", failed}}};
  return kOk;
}

int run_glue(const std::string& file, const std::string& out, const std::string& dot) {
  const GluedSystem sys = glued_from_json(read_json_file(file));
  const auto violations = validate(sys);
  if (!violations.empty()) {
    Json v = Json::array();
    for (const auto& x : violations) v.push_back(to_json(x));
    throw Violation{{{"command", "glue"}, {"file", file}, {"violations", v}}};
  }
  const FiniteLattice M = sum(sys);
  if (!dot.empty()) write_text(dot, to_dot(M));
  Json j{{"valid", true},
         {"strictly_monotone", is_monotone_strict(sys)},
         {"size", M.size()},
         {"length", M.length()},
         {"sum", to_json(M)}};
  emit(j, out);
  return kOk;
}

int run_connect(const std::string& file, const std::string& out, bool exhaustive) {
  const Json in = read_json_file(file);
  ConnectedSystem cs;
  if (is_local_json(in)) {
    const LocalConnectedSystem lcs = local_from_json(in);
    const auto violations = validate_local(lcs);
    if (!violations.empty()) {
      Json v = Json::array();
      for (const auto& x : violations) v.push_back(to_json(x));
      throw Violation{{{"command", "connect"}, {"file", file}, {"violations", v}}};
    }
    cs = elevate(lcs, exhaustive ? ChainCheck::Exhaustive : ChainCheck::TwoChains);
  } else {
    cs = connected_from_json(in);
  }
  const auto violations = validate_connected(cs);
  if (!violations.empty()) {
    Json v = Json::array();
    for (const auto& x : violations) v.push_back(to_json(x));
    throw Violation{{{"command", "connect"}, {"file", file}, {"violations", v}}};
  }
  const ConnectedSum q = connected_sum(cs);
  const FiniteLattice M = sum(q.glued);
  Json j{{"classes", q.class_count}, {"size", M.size()}, {"length", M.length()}, {"glued", to_json(q.glued)}};
  emit(j, out);
  return kOk;
}

int run_skeleton(const std::string& file, const std::string& out, const std::string& dot) {
  const FiniteLattice M = lattice_from_json(read_json_file(file));
  if (!is_modular(M)) throw Violation{{{"command", "skeleton"}, {"file", file}, {"error", "lattice is not modular"}}};
  const auto d = decompose(M);
  const bool ok = sum(d.system).same_as(M);
  Json blocks = Json::object();
  for (Elem x : d.skeleton_set) blocks[M.name(x)] = {M.name(x), M.name(star(M, x))};
  Json j{{"skeleton", names_of(M, d.skeleton_set)},
         {"dual_skeleton", names_of(M, d.dual_set)},
         {"skeleton_lattice", to_json(d.system.skeleton)},
         {"blocks", blocks},
         {"roundtrip", ok}};
  std::cout << j.dump(2) << '\n';
  if (!out.empty()) write_json_file(out, to_json(d.system));
  if (!dot.empty()) {
    Bits mark(M.size());
    for (Elem x : d.skeleton_set) mark.set(x);
    write_text(dot, to_dot(M, &mark));
  }
  if (!ok) throw Violation{{{"command", "skeleton"}, {"file", file}, {"error", "roundtrip failed"}}};
  return kOk;
}

int run_construct(const std::string& name, int n, int p, int q, const std::string& skeleton_file,
                  const std::string& out) {
  auto need_skeleton = [&] {
    if (skeleton_file.empty()) throw LatticeError(ErrorKind::Malformed, name + " needs --skeleton FILE");
    return lattice_from_json(read_json_file(skeleton_file));
  };
  Json j;
  if (name == "chain") j = to_json(chain(n));
  else if (name == "boolean") j = to_json(boolean(n));
  else if (name == "mn") j = to_json(mn(n));
  else if (name == "m3") j = to_json(m3());
  else if (name == "n5") j = to_json(n5());
  else if (name == "grid") j = to_json(grid(p, q));
  else if (name == "fano") j = to_json(fano());
  else if (name == "projective_local") j = to_json(projective_example());
  else if (name == "hall_dilworth_connected") j = to_json(hall_dilworth_connected());
  else if (name == "distributive") j = to_json(distributive_with_skeleton(need_skeleton()).system);
  else if (name == "square") j = to_json(square_sublattice(need_skeleton()).system);
  else if (auto f = find_glued_fixture(name)) j = to_json(f->system);
  else throw LatticeError(ErrorKind::Malformed, "unknown construction '" + name + "'");
  emit(j, out);
  return kOk;
}

int run_suite(int corpus_max) {
  const auto opt = suite_options_from_env(corpus_max);
  const Corpus corpus = build_corpus(opt);
  Json failed = Json::array();
  for (const auto& [id, f] : criteria()) {
    const auto r = run_criterion(id, f, corpus);
    std::cout << format_result(r) << std::endl;
    if (!r.passed) failed.push_back({{"id", r.id}, {"detail", r.detail}});
  }
  if (!failed.empty()) throw Violation{{{"command", "suite"}, {"failed", failed}}};
  return kOk;
}

int run_dot(const std::string& file) {
  const Json in = read_json_file(file);
  if (in.is_object() && in.contains("skeleton") && in.contains("blocks")) {
    const GluedSystem sys = glued_from_json(in);
    const auto violations = validate(sys);
    if (!violations.empty()) {
      Json v = Json::array();
      for (const auto& x : violations) v.push_back(to_json(x));
      throw Violation{{{"command", "dot"}, {"file", file}, {"violations", v}}};
    }
    std::cout << to_dot(sum(sys));
  } else {
    std::cout << to_dot(lattice_from_json(in));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Glued sums of finite lattices"};
  app.require_subcommand(1);

  std::string file, out, dot, name, skeleton_file;
  std::vector<std::string> properties;
  int n = 2, p = 2, q = 2, corpus_max = 6;
  bool exhaustive = false;

  auto* check = app.add_subcommand("check", "Test lattice properties");
  check->add_option("file", file, "Lattice JSON")->required();
  check->add_option("--property", properties,
                    "modular, semimodular, dual-semimodular, distributive, atomistic, simple, breadth, n-distributive:N")
      ->required();

  auto* glue = app.add_subcommand("glue", "Validate a glued system and build its sum");
  glue->add_option("file", file, "Glued system JSON")->required();
  glue->add_option("--out", out, "Write the report here instead of stdout");
  glue->add_option("--dot", dot, "Write the Hasse diagram of the sum");

  auto* connect = app.add_subcommand("connect", "Quotient of a connected or local system");
  connect->add_option("file", file, "Connected system JSON")->required();
  connect->add_option("--out", out, "Write the report here instead of stdout");
  connect->add_flag("--exhaustive", exhaustive, "Compare composites along every maximal chain");

  auto* skel = app.add_subcommand("skeleton", "Skeleton, blocks and roundtrip of a modular lattice");
  skel->add_option("file", file, "Lattice JSON")->required();
  skel->add_option("--out", out, "Write the decomposition as a glued system");
  skel->add_option("--dot", dot, "Write the Hasse diagram with the skeleton marked");

  auto* construct = app.add_subcommand("construct", "Emit a named lattice or fixture");
  construct->add_option("name", name, "chain, boolean, mn, m3, n5, grid, fano, projective_local, "
                                      "hall_dilworth_connected, distributive, square, or a glued fixture name")
      ->required();
  construct->add_option("--n", n, "Size parameter for chain, boolean, mn");
  construct->add_option("--p", p, "Grid rows");
  construct->add_option("--q", q, "Grid columns");
  construct->add_option("--skeleton", skeleton_file, "Skeleton lattice for distributive and square");
  construct->add_option("--out", out, "Output path");

  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("--corpus-max", corpus_max, "Largest enumerated lattice size")->check(CLI::Range(1, 8));

  auto* dotc = app.add_subcommand("dot", "Hasse diagram of a lattice or of a glued sum");
  dotc->add_option("file", file, "Lattice or glued system JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*check) return run_check(file, properties);
    if (*glue) return run_glue(file, out, dot);
    if (*connect) return run_connect(file, out, exhaustive);
    if (*skel) return run_skeleton(file, out, dot);
    if (*construct) return run_construct(name, n, p, q, skeleton_file, out);
    if (*suite) return run_suite(corpus_max);
    if (*dotc) return run_dot(file);
  } catch (const Violation& v) {
    std::cerr << v.body.dump() << '\n';
    return kViolation;
  } catch (const LatticeError& e) {
    const bool violation = e.kind() == ErrorKind::InvalidSystem || e.kind() == ErrorKind::NotModular ||
                           e.kind() == ErrorKind::NotModularSkeleton || e.kind() == ErrorKind::ChainDependence;
    std::cerr << Json{{"error", e.what()}}.dump() << '\n';
    return violation ? kViolation : kMalformed;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << '\n';
    return kMalformed;
  }
  return kMalformed;
}
