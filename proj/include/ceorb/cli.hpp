// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Request parsing and report rendering for the command-line front end.
// Kept in the library so that reports can be produced and tested in-process.

#pragma once

#include "ceorb/conegeom.hpp"
#include "ceorb/dynkin.hpp"
#include "ceorb/orbits.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/rootsys.hpp"
#include "ceorb/tangent.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace ceorb::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kPresetsEnv = "CEORB_PRESETS";

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"orbits", "modality", "finite", "smooth",
                                              "tangent", "general", "rootinfo"};
  return names;
}

struct Request {
  std::string command;
  std::string group;
  std::string levi = "empty";
  std::string gens;
  std::string format = "json";
  bool crosscheck = false;
};

struct Response {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Parsing -------------------------------------------------------------------

inline int parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("malformed " + what + ": '" + s + "'");
  }
  if (s.size() > 6) throw InputError(what + " out of range: " + s);
  return std::stoi(s);
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

/// "A3xA1" -> [(A,3), (A,1)].
inline std::vector<ComponentSpec> parse_group(const std::string& text) {
  if (text.empty()) throw InputError("missing group specification");
  std::vector<ComponentSpec> out;
  for (const auto& part : split(text, 'x')) {
    if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0]))) {
      throw InputError("malformed group component '" + part + "' (expected e.g. A3, E8)");
    }
    ComponentSpec c{part[0], parse_positive(part.substr(1), "rank")};
    check_admissible(c);
    out.push_back(c);
  }
  return out;
}

/// "empty", "full", or 1-based nodes and ranges such as "1,2,5-7".
inline NodeSet parse_levi(const RootSystem& sys, const std::string& text) {
  const std::string t = trim(text);
  if (t == "empty" || t.empty()) return {};
  if (t == "full") return sys.all_nodes();
  NodeSet out;
  for (const auto& item : split(t, ',')) {
    int lo = 0;
    int hi = 0;
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      lo = hi = parse_positive(item, "levi node");
    } else {
      lo = parse_positive(item.substr(0, dash), "levi node");
      hi = parse_positive(item.substr(dash + 1), "levi node");
    }
    if (lo < 1 || hi > sys.rank() || lo > hi) {
      throw InputError("levi node '" + item + "' outside 1.." + std::to_string(sys.rank()));
    }
    for (int v = lo; v <= hi; ++v) {
      if (out.contains(v - 1)) throw InputError("levi node " + std::to_string(v) + " repeated");
      out.insert(v - 1);
    }
  }
  return out;
}

/// "1,0;0,1" -> generator weights in fundamental coordinates.
inline std::vector<Weight> parse_gens(const RootSystem& sys, const std::string& text) {
  if (trim(text).empty()) return fundamental_generators(sys);
  std::vector<Weight> out;
  for (const auto& row : split(text, ';')) {
    const auto cells = split(row, ',');
    if (cells.size() != sys.dim()) {
      throw InputError("generator '" + row + "' needs " + std::to_string(sys.rank()) + " coordinates");
    }
    IntVec v;
    for (const auto& c : cells) {
      if (!c.empty() && c[0] == '-') {
        throw InputError("generator coordinates must be non-negative (dominant weights)");
      }
      v.push_back(parse_positive(c, "generator coordinate"));
    }
    out.push_back(Weight::from_ints(v));
  }
  return out;
}

inline Request request_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("preset must be a JSON object");
  Request r;
  auto str = [&](const char* key, std::string& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_string()) throw InputError(std::string("preset field '") + key + "' must be a string");
    slot = j[key].get<std::string>();
  };
  str("command", r.command);
  str("group", r.group);
  str("levi", r.levi);
  str("gens", r.gens);
  str("format", r.format);
  if (j.contains("crosscheck")) {
    if (!j["crosscheck"].is_boolean()) throw InputError("preset field 'crosscheck' must be a boolean");
    r.crosscheck = j["crosscheck"].get<bool>();
  }
  return r;
}

/// Named request from the presets file given by $CEORB_PRESETS.
inline Request load_preset(const std::string& name) {
  const char* path = std::getenv(kPresetsEnv);
  if (path == nullptr || *path == '\0') {
    throw InputError(std::string("preset requested but ") + kPresetsEnv + " is not set");
  }
  std::ifstream in(path);
  if (!in) throw InputError(std::string("cannot open presets file ") + path);
  nlohmann::json all;
  try {
    in >> all;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("presets file is not valid JSON: ") + e.what());
  }
  if (!all.is_object() || !all.contains(name)) throw InputError("unknown preset '" + name + "'");
  return request_from_json(all[name]);
}

// Rendering -----------------------------------------------------------------

using nlohmann::json;

inline json nodes_json(NodeSet s) {
  json a = json::array();
  for (int v : s.nodes()) a.push_back(v + 1);
  return a;
}

inline json big_json(const BigInt& n) {
  if (n <= BigInt(INT64_MAX) && n >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(n);
  return n.str();
}

inline json orbit_json(const OrbitDatum& o) {
  return {{"pi_y", nodes_json(o.pi_y)},
          {"boundary", nodes_json(o.boundary)},
          {"d_g", o.d_g},
          {"dim_orbit", o.dim_orbit},
          {"dim_y", o.dim_y},
          {"stab",
           {{"unipotent_dim", o.stab_unipotent_dim},
            {"levi_nodes", nodes_json(o.stab_levi_nodes)},
            {"torus_dim", o.stab_torus_dim}}}};
}

/// Cover relations of the closure order, as index pairs into `orbits`.
template <class Contains>
json covers_json(const std::vector<OrbitDatum>& orbits, Contains contains) {
  json out = json::array();
  const std::size_t n = orbits.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !contains(orbits[a], orbits[b])) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (c != a && c != b && contains(orbits[a], orbits[c]) && contains(orbits[c], orbits[b])) {
          cover = false;
        }
      }
      if (cover) out.push_back({a, b});
    }
  }
  return out;
}

inline std::string set_text(NodeSet s) { return "{" + (s.empty() ? std::string() : s.to_string()) + "}"; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string str() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::ostringstream os;
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(width[i])) << r[i];
        if (i + 1 < r.size()) os << "  ";
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string orbit_table(const std::vector<OrbitDatum>& orbits) {
  Table t({"#", "pi_y", "boundary", "d_g", "dim_orbit", "dim_y", "stab_unip", "stab_levi", "stab_torus"});
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    t.add({std::to_string(i), set_text(o.pi_y), set_text(o.boundary), std::to_string(o.d_g),
           std::to_string(o.dim_orbit), std::to_string(o.dim_y), std::to_string(o.stab_unipotent_dim),
           set_text(o.stab_levi_nodes), std::to_string(o.stab_torus_dim)});
  }
  return t.str();
}

struct Output {
  json result = json::object();
  std::string table;
  std::string warnings;
};

inline Output do_rootinfo(const RootSystem& sys) {
  Output o;
  json comps = json::array();
  std::ostringstream text;
  text << "group " << sys.name() << ", rank " << sys.rank() << ", |positive roots| "
       << sys.positive_roots().size() << ", dim " << sys.dim_group() << '\n';
  for (std::size_t k = 0; k < sys.components().size(); ++k) {
    const auto& c = sys.components()[k];
    const RootSystem simple({{c.type, c.rank}});
    const auto sing = singularity(simple);
    json rays_json = json::array();
    if (sing) {
      for (const auto& r : rays(simple)) {
        json ray = json::array();
        for (int v : r) ray.push_back(v + 1 + c.offset);
        rays_json.push_back(ray);
      }
    }
    json ext = json::array();
    for (int v : extreme_nodes(simple).nodes()) ext.push_back(v + 1 + c.offset);
    json longs = json::array();
    for (int v = 0; v < c.rank; ++v) {
      if (simple.is_long(v) && !simple.simply_laced()) longs.push_back(v + 1 + c.offset);
    }
    comps.push_back({{"type", std::string(1, c.type)},
                     {"rank", c.rank},
                     {"first_node", c.offset + 1},
                     {"singularity", sing ? json(*sing + 1 + c.offset) : json(nullptr)},
                     {"extreme_nodes", ext},
                     {"long_nodes", longs},
                     {"rays", rays_json}});
    text << "  " << c.name() << ": nodes " << c.offset + 1 << ".." << c.offset + c.rank
         << ", singularity " << (sing ? std::to_string(*sing + 1 + c.offset) : std::string("none"))
         << ", extreme " << ext.dump() << '\n';
  }
  o.result = {{"group", sys.name()},
              {"rank", sys.rank()},
              {"components", comps},
              {"cartan", sys.cartan()},
              {"positive_root_count", sys.positive_roots().size()},
              {"dim_group", sys.dim_group()}};
  text << "cartan:\n";
  for (const auto& row : sys.cartan()) {
    text << " ";
    for (int x : row) text << ' ' << std::setw(2) << x;
    text << '\n';
  }
  o.table = text.str();
  return o;
}

inline Output do_orbits(const RootSystem& sys, NodeSet levi, bool crosscheck) {
  Output o;
  const auto orbits = enumerate_canonical_orbits(sys, levi);
  json list = json::array();
  for (const auto& orb : orbits) list.push_back(orbit_json(orb));
  const auto modality = modality_canonical(sys, levi);
  o.result = {{"orbits", list},
              {"orbit_count", orbits.size()},
              {"modality", modality},
              {"finite_orbits", has_finitely_many_orbits(sys, levi)},
              {"covers", covers_json(orbits, canonical_closure_contains)},
              {"poset_note", "closure order of G x L orbits; equal to the orbit poset of the associated monoid"}};
  o.table = orbit_table(orbits) + "modality " + std::to_string(modality) + '\n';
  if (crosscheck) {
    const auto cc = crosscheck_orbits(sys, levi);
    o.result["crosscheck"] = {{"ok", cc.ok}, {"detail", cc.detail}};
    o.table += std::string("crosscheck ") + (cc.ok ? "ok" : "FAILED: " + cc.detail) + '\n';
    if (!cc.ok) throw InvariantError("crosscheck failed: " + cc.detail);
  }
  return o;
}

inline Output do_general(const RootSystem& sys, NodeSet levi, const std::vector<Weight>& gens,
                         bool crosscheck) {
  Output o;
  const auto g = enumerate_general_orbits(sys, levi, gens);
  if (!g.generators_full_rank) o.warnings += "warning: generators do not span the weight space\n";
  json list = json::array();
  Table t({"#", "face_dim", "tight", "pi_y", "d_g", "dim_orbit", "dim_y", "stab_torus", "saturated"});
  for (std::size_t i = 0; i < g.orbits.size(); ++i) {
    const auto& orb = g.orbits[i];
    const Face& f = g.faces[*orb.face];
    json rec = orbit_json(orb);
    rec["face"] = {{"dim", f.dim}, {"tight_halfspaces", f.tight}};
    rec["torus_lattice_saturated"] = orb.torus_lattice_saturated;
    list.push_back(rec);
    std::string tight;
    for (auto x : f.tight) tight += (tight.empty() ? "" : ",") + std::to_string(x);
    t.add({std::to_string(i), std::to_string(f.dim), "{" + tight + "}", set_text(orb.pi_y),
           std::to_string(orb.d_g), std::to_string(orb.dim_orbit), std::to_string(orb.dim_y),
           std::to_string(orb.stab_torus_dim), orb.torus_lattice_saturated ? "yes" : "no"});
    if (!orb.torus_lattice_saturated) {
      o.warnings += "note: orbit " + std::to_string(i) +
                    " has a non-saturated lattice; its stabilizer torus is disconnected\n";
    }
  }
  json halfspaces = json::array();
  for (const auto& h : g.cone.halfspaces) {
    json row = json::array();
    for (const auto& x : h) row.push_back(big_json(x));
    halfspaces.push_back(row);
  }
  json gen_list = json::array();
  for (const auto& w : gens) {
    json row = json::array();
    for (const auto& x : sys.to_fundamental(w).coords) row.push_back(big_json(numerator_of(x)));
    gen_list.push_back(row);
  }
  std::int64_t modality = 0;
  for (const auto& orb : g.orbits) modality = std::max(modality, orb.d_g);
  o.result = {{"generators", gen_list},
              {"generators_full_rank", g.generators_full_rank},
              {"cone",
               {{"dim", g.cone.dim},
                {"lineality_dim", g.cone.lineality_dim},
                {"halfspaces", halfspaces},
                {"hull_generator_count", g.cone.generators.size()},
                {"face_count", g.faces.size()}}},
              {"orbits", list},
              {"orbit_count", g.orbits.size()},
              {"modality", modality},
              {"covers", covers_json(g.orbits, [&](const OrbitDatum& a, const OrbitDatum& b) {
                 return general_closure_contains(g, a, b);
               })}};
  o.table = t.str() + "modality " + std::to_string(modality) + '\n';
  if (crosscheck) {
    const auto cc = crosscheck_orbits(sys, levi);
    o.result["crosscheck"] = {{"ok", cc.ok}, {"detail", cc.detail}};
    o.table += std::string("crosscheck ") + (cc.ok ? "ok" : "FAILED: " + cc.detail) + '\n';
    if (!cc.ok) throw InvariantError("crosscheck failed: " + cc.detail);
  }
  return o;
}

inline Output do_smooth(const RootSystem& sys, NodeSet levi) {
  Output o;
  const auto rep = is_smooth_canonical(sys, levi);
  json comps = json::array();
  Table t({"component", "nodes", "levi", "role"});
  for (std::size_t k = 0; k < rep.roles.size(); ++k) {
    const NodeSet nodes = sys.component_nodes(static_cast<int>(k));
    comps.push_back({{"component", sys.components()[k].name()},
                     {"nodes", nodes_json(nodes)},
                     {"levi", nodes_json(levi & nodes)},
                     {"role", to_string(rep.roles[k])}});
    t.add({sys.components()[k].name(), set_text(nodes), set_text(levi & nodes), to_string(rep.roles[k])});
  }
  o.result = {{"smooth", rep.smooth}, {"components", comps}};
  o.table = t.str() + "smooth " + (rep.smooth ? "true" : "false") + '\n';
  return o;
}

inline Output do_tangent(const RootSystem& sys, NodeSet levi) {
  Output o;
  json comps = json::array();
  BigInt total = 0;
  std::int64_t dim_ce = 0;
  Table t({"component", "node", "retained", "g_dim", "l_dim", "contribution"});
  for (std::size_t k = 0; k < sys.components().size(); ++k) {
    const auto& c = sys.components()[k];
    const RootSystem simple({{c.type, c.rank}});
    NodeSet local;
    for (int v = 0; v < c.rank; ++v) {
      if (levi.contains(c.offset + v)) local.insert(v);
    }
    if (local == simple.all_nodes()) {
      throw InputError("component " + c.name() + " lies entirely in the levi; the embedding has no fixed point");
    }
    const auto rep = tangent_report(simple, local);
    json summands = json::array();
    NodeSet removed;
    for (const auto& s : rep.summands) {
      const int node = s.node + c.offset;
      if (!s.retained) removed.insert(node);
      summands.push_back({{"node", node + 1},
                          {"retained", s.retained},
                          {"g_dim", big_json(s.g_dim)},
                          {"l_dim", big_json(s.l_dim)},
                          {"contribution", big_json(s.contribution)}});
      t.add({c.name(), std::to_string(node + 1), s.retained ? "yes" : "no", s.g_dim.str(), s.l_dim.str(),
             s.contribution.str()});
    }
    comps.push_back({{"component", c.name()},
                     {"removed", nodes_json(removed)},
                     {"summands", summands},
                     {"total_dim", big_json(rep.total)},
                     {"dim_ce", rep.dim_ce}});
    total += rep.total;
    dim_ce += rep.dim_ce;
  }
  o.result = {{"components", comps}, {"total_dim", big_json(total)}, {"dim_ce", dim_ce}};
  o.table = t.str() + "total_dim " + total.str() + "\ndim_ce " + std::to_string(dim_ce) + '\n';
  return o;
}

inline json echo(const Request& r, const RootSystem& sys, NodeSet levi) {
  json e = {{"command", r.command},
            {"group", sys.name()},
            {"levi", nodes_json(levi)},
            {"format", r.format},
            {"crosscheck", r.crosscheck}};
  if (r.command == "general") e["gens"] = r.gens.empty() ? json("fundamental") : json(r.gens);
  return e;
}

/// Executes one request; never throws.
inline Response run(const Request& r) {
  Response resp;
  try {
    if (std::find(commands().begin(), commands().end(), r.command) == commands().end()) {
      throw InputError("unknown command '" + r.command + "'");
    }
    if (r.format != "json" && r.format != "table") throw InputError("unknown format '" + r.format + "'");
    const RootSystem sys(parse_group(r.group));
    const NodeSet levi = parse_levi(sys, r.levi);
    Output o;
    if (r.command == "rootinfo") {
      o = do_rootinfo(sys);
    } else if (r.command == "orbits") {
      o = do_orbits(sys, levi, r.crosscheck);
    } else if (r.command == "modality") {
      const auto m = modality_canonical(sys, levi);
      o.result = {{"modality", m}};
      o.table = "modality " + std::to_string(m) + '\n';
    } else if (r.command == "finite") {
      const bool fin = has_finitely_many_orbits(sys, levi);
      const auto m = modality_canonical(sys, levi);
      o.result = {{"finite_orbits", fin}, {"modality", m}};
      o.table = std::string("finite_orbits ") + (fin ? "true" : "false") + "\nmodality " + std::to_string(m) + '\n';
    } else if (r.command == "smooth") {
      o = do_smooth(sys, levi);
    } else if (r.command == "tangent") {
      o = do_tangent(sys, levi);
    } else {
      o = do_general(sys, levi, parse_gens(sys, r.gens), r.crosscheck);
    }
    resp.err = o.warnings;
    if (r.format == "json") {
      const json doc = {{"schema_version", kSchemaVersion}, {"request_echo", echo(r, sys, levi)}, {"result", o.result}};
      resp.out = doc.dump(2) + "\n";
    } else {
      resp.out = o.table;
    }
  } catch (const InputError& e) {
    resp.exit_code = 2;
    resp.err += std::string("error: ") + e.what() + "\n";
    resp.out.clear();
  } catch (const std::out_of_range& e) {
    resp.exit_code = 2;
    resp.err += std::string("error: ") + e.what() + "\n";
    resp.out.clear();
  } catch (const InvariantError& e) {
    resp.exit_code = 1;
    resp.err += std::string("internal invariant violated: ") + e.what() + "\n";
    resp.out.clear();
  } catch (const std::exception& e) {
    resp.exit_code = 1;
    resp.err += std::string("internal error: ") + e.what() + "\n";
    resp.out.clear();
  }
  return resp;
}

}  // namespace ceorb::cli
