#pragma once

// JSON and DOT serialization.
//
//   lattice:   {"elements": [...], "covers": [["lo","hi"], ...]}
//   glued:     {"skeleton": <lattice>, "blocks": {"x": <lattice>, ...}}
//   connected: glued layout plus "maps": [{"from", "to", "pairs"}], and
//              "local": true for systems given on covers only.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sglue/connect.hpp"
#include "sglue/glue.hpp"

namespace sglue {

using Json = nlohmann::ordered_json;

namespace detail {
template <class F>
auto malformed_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw LatticeError(ErrorKind::Malformed, e.what());
  }
}
}  // namespace detail

inline Json to_json(const FiniteLattice& L) {
  Json j;
  j["elements"] = L.names();
  Json covers = Json::array();
  for (auto [a, b] : L.covers()) covers.push_back({L.name(a), L.name(b)});
  j["covers"] = std::move(covers);
  return j;
}

inline FiniteLattice lattice_from_json(const Json& j) {
  return detail::malformed_guard([&] {
    if (!j.is_object() || !j.contains("elements"))
      throw LatticeError(ErrorKind::Malformed, "lattice needs an \"elements\" array");
    auto names = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers"))
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw LatticeError(ErrorKind::Malformed, "cover must be a pair");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
      }
    return FiniteLattice::from_covers(std::move(names), covers);
  });
}

namespace detail {
inline std::vector<FiniteLattice> blocks_from_json(const FiniteLattice& S, const Json& j) {
  if (!j.is_object()) throw LatticeError(ErrorKind::Malformed, "\"blocks\" must be an object keyed by skeleton element");
  std::vector<FiniteLattice> blocks(S.size());
  for (const auto& [key, val] : j.items()) {
    auto x = S.find(key);
    if (!x) throw LatticeError(ErrorKind::UnknownElement, "block for unknown skeleton element '" + key + "'");
    blocks[*x] = lattice_from_json(val);
  }
  for (Elem x = 0; x < S.size(); ++x)
    if (blocks[x].empty()) throw LatticeError(ErrorKind::Malformed, "missing block for '" + S.name(x) + "'");
  return blocks;
}

inline Json blocks_to_json(const FiniteLattice& S, const std::vector<FiniteLattice>& blocks) {
  Json j = Json::object();
  for (Elem x = 0; x < S.size(); ++x) j[S.name(x)] = to_json(blocks[x]);
  return j;
}
}  // namespace detail

inline Json to_json(const GluedSystem& sys) {
  return {{"skeleton", to_json(sys.skeleton)}, {"blocks", detail::blocks_to_json(sys.skeleton, sys.blocks)}};
}

inline GluedSystem glued_from_json(const Json& j) {
  return detail::malformed_guard([&] {
    GluedSystem sys;
    sys.skeleton = lattice_from_json(j.at("skeleton"));
    sys.blocks = detail::blocks_from_json(sys.skeleton, j.at("blocks"));
    return sys;
  });
}

inline Json to_json(const MappedFamily& f, bool local) {
  Json j{{"skeleton", to_json(f.skeleton)}, {"blocks", detail::blocks_to_json(f.skeleton, f.blocks)}};
  if (local) j["local"] = true;
  Json maps = Json::array();
  for (const auto& [key, p] : f.maps) {
    Json pairs = Json::array();
    for (Elem a = 0; a < p.fwd.size(); ++a)
      if (p.in_domain(a)) pairs.push_back({f.blocks[key.first].name(a), f.blocks[key.second].name(p.apply(a))});
    maps.push_back({{"from", f.skeleton.name(key.first)}, {"to", f.skeleton.name(key.second)}, {"pairs", pairs}});
  }
  j["maps"] = std::move(maps);
  return j;
}

inline Json to_json(const ConnectedSystem& cs) { return to_json(static_cast<const MappedFamily&>(cs), false); }
inline Json to_json(const LocalConnectedSystem& lcs) { return to_json(static_cast<const MappedFamily&>(lcs), true); }

inline bool is_local_json(const Json& j) { return j.is_object() && j.value("local", false); }

namespace detail {
inline void family_from_json(MappedFamily& f, const Json& j) {
  f.skeleton = lattice_from_json(j.at("skeleton"));
  f.blocks = blocks_from_json(f.skeleton, j.at("blocks"));
  if (!j.contains("maps")) return;
  for (const auto& m : j.at("maps")) {
    const Elem x = f.skeleton.at(m.at("from").get<std::string>());
    const Elem y = f.skeleton.at(m.at("to").get<std::string>());
    if (!f.skeleton.leq(x, y))
      throw LatticeError(ErrorKind::InvalidSystem, "map from '" + f.skeleton.name(x) + "' to '" + f.skeleton.name(y) +
                                                       "' goes downwards");
    std::vector<std::pair<Elem, Elem>> pairs;
    for (const auto& p : m.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw LatticeError(ErrorKind::Malformed, "map pair must have two names");
      pairs.emplace_back(f.blocks[x].at(p[0].get<std::string>()), f.blocks[y].at(p[1].get<std::string>()));
    }
    if (x == y) continue;
    if (f.maps.count({x, y})) throw LatticeError(ErrorKind::Malformed, "map listed twice");
    f.set(PartialIso::from_pairs(x, y, f.blocks[x].size(), f.blocks[y].size(), pairs));
  }
}
}  // namespace detail

inline ConnectedSystem connected_from_json(const Json& j) {
  return detail::malformed_guard([&] {
    ConnectedSystem cs;
    detail::family_from_json(cs, j);
    return cs;
  });
}

inline LocalConnectedSystem local_from_json(const Json& j) {
  return detail::malformed_guard([&] {
    LocalConnectedSystem lcs;
    detail::family_from_json(lcs, j);
    return lcs;
  });
}

inline Json to_json(const GlueViolation& v) {
  return {{"axiom", std::string(to_string(v.axiom))}, {"x", v.x}, {"y", v.y}, {"witness", v.witness}, {"detail", v.detail}};
}

inline Json to_json(const ConnectViolation& v) {
  return {{"condition", v.condition}, {"x", v.x}, {"y", v.y}, {"witness", v.witness}, {"detail", v.detail}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LatticeError(ErrorKind::Malformed, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw LatticeError(ErrorKind::Malformed, path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

/// Hasse diagram in DOT, bottom to top; highlighted elements are filled.
inline std::string to_dot(const FiniteLattice& L, const Bits* highlight = nullptr) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem a = 0; a < L.size(); ++a) {
    os << "  " << quote(L.name(a));
    if (highlight && highlight->test(a)) os << " [style=filled, fillcolor=lightgray]";
    os << ";\n";
  }
  for (auto [a, b] : L.covers()) os << "  " << quote(L.name(a)) << " -> " << quote(L.name(b)) << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sglue
