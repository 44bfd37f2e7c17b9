// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Orbits of G x L on affine embeddings of G/Ru(P): the canonical embedding
// through Dynkin subdiagrams, and general embeddings through cone faces.

#pragma once

#include "ceorb/conegeom.hpp"
#include "ceorb/dynkin.hpp"
#include "ceorb/linalg.hpp"
#include "ceorb/nodeset.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ceorb {

struct OrbitDatum {
  /// Canonical case: Pi_Y. General case: simple roots orthogonal to <Gamma>.
  NodeSet pi_y;
  NodeSet boundary;
  /// General case only: index into the face list of the classification.
  std::optional<std::size_t> face;

  std::int64_t d_g = 0;
  std::int64_t dim_stab_g = 0;
  std::int64_t dim_orbit = 0;
  std::int64_t dim_y = 0;

  std::int64_t stab_unipotent_dim = 0;
  NodeSet stab_levi_nodes;
  std::int64_t stab_torus_dim = 0;
  /// False when the lattice <Gamma>_Z is not saturated; the torus part of
  /// the stabilizer is then disconnected and only its dimension is reported.
  bool torus_lattice_saturated = true;
};

namespace detail {

constexpr int kMaxSubsetRank = 22;

inline std::int64_t count(const RootSystem& sys, NodeSet s) {
  return static_cast<std::int64_t>(sys.count_positive_roots(s));
}

inline void check_subset_rank(const RootSystem& sys) {
  if (sys.rank() > kMaxSubsetRank) {
    throw InputError("subset enumeration is limited to total rank " +
                     std::to_string(kMaxSubsetRank));
  }
}

inline void sort_orbits(std::vector<OrbitDatum>& orbits) {
  std::stable_sort(orbits.begin(), orbits.end(), [](const OrbitDatum& a, const OrbitDatum& b) {
    if (a.dim_y != b.dim_y) return a.dim_y > b.dim_y;
    if (a.face && b.face) return *a.face < *b.face;
    return canonical_less(a.pi_y, b.pi_y);
  });
}

}  // namespace detail

/// No connected component of pi_y lies inside levi.
inline bool is_admissible(const RootSystem& sys, NodeSet levi, NodeSet pi_y) {
  for (const auto& c : components(sys, pi_y)) {
    if (c.subset_of(levi)) return false;
  }
  return true;
}

inline OrbitDatum canonical_orbit(const RootSystem& sys, NodeSet levi, NodeSet pi_y) {
  OrbitDatum o;
  o.pi_y = pi_y;
  o.boundary = boundary(sys, pi_y);
  const NodeSet stab = pi_y | (levi - o.boundary);
  const std::int64_t pos = detail::count(sys, sys.all_nodes());
  o.stab_unipotent_dim = pos - detail::count(sys, stab);
  o.stab_levi_nodes = pi_y;
  o.stab_torus_dim = pi_y.size();
  o.dim_stab_g = o.stab_unipotent_dim + 2 * detail::count(sys, pi_y) + o.stab_torus_dim;
  o.d_g = detail::count(sys, levi) - detail::count(sys, levi - o.boundary);
  o.dim_orbit = static_cast<std::int64_t>(sys.dim_group()) - o.dim_stab_g;
  o.dim_y = o.dim_orbit + o.d_g;
  return o;
}

inline std::vector<OrbitDatum> enumerate_canonical_orbits(const RootSystem& sys, NodeSet levi) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  detail::check_subset_rank(sys);
  std::vector<OrbitDatum> out;
  const std::uint64_t full = sys.all_nodes().bits();
  for (std::uint64_t b = 0;; b = (b - full) & full) {
    const NodeSet pi_y(b);
    if (is_admissible(sys, levi, pi_y)) out.push_back(canonical_orbit(sys, levi, pi_y));
    if (b == full) break;
  }
  detail::sort_orbits(out);
  return out;
}

/// Closure of the orbit of `a` contains the orbit of `b` (canonical case).
inline bool canonical_closure_contains(const OrbitDatum& a, const OrbitDatum& b) {
  return a.pi_y.subset_of(b.pi_y);
}

inline std::int64_t modality_canonical(const RootSystem& sys, NodeSet levi) {
  std::int64_t best = 0;
  for (const auto& o : enumerate_canonical_orbits(sys, levi)) best = std::max(best, o.d_g);
  return best;
}

/// Same maximum, taken only over Pi_Y containing every node outside levi.
inline std::int64_t modality_canonical_restricted(const RootSystem& sys, NodeSet levi) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  detail::check_subset_rank(sys);
  const NodeSet outer = sys.all_nodes() - levi;
  std::int64_t best = 0;
  const std::uint64_t lbits = levi.bits();
  for (std::uint64_t b = 0;; b = (b - lbits) & lbits) {
    const NodeSet pi_y = outer | NodeSet(b);
    if (is_admissible(sys, levi, pi_y)) best = std::max(best, canonical_orbit(sys, levi, pi_y).d_g);
    if (b == lbits) break;
  }
  return best;
}

/// Every component of the diagram lies inside levi or is disjoint from it.
inline bool has_finitely_many_orbits(const RootSystem& sys, NodeSet levi) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  for (std::size_t k = 0; k < sys.components().size(); ++k) {
    const NodeSet c = sys.component_nodes(static_cast<int>(k));
    if (!c.subset_of(levi) && c.intersects(levi)) return false;
  }
  return true;
}

enum class ComponentRole { levi_factor, line_stabilizer, obstructed };

inline const char* to_string(ComponentRole r) {
  switch (r) {
    case ComponentRole::levi_factor: return "levi_factor";
    case ComponentRole::line_stabilizer: return "line_or_hyperplane_stabilizer";
    case ComponentRole::obstructed: return "obstructed";
  }
  return "obstructed";
}

struct SmoothnessReport {
  bool smooth = true;
  std::vector<ComponentRole> roles;  // one per diagram component
};

inline SmoothnessReport is_smooth_canonical(const RootSystem& sys, NodeSet levi) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  SmoothnessReport rep;
  for (std::size_t k = 0; k < sys.components().size(); ++k) {
    const auto& comp = sys.components()[k];
    const NodeSet nodes = sys.component_nodes(static_cast<int>(k));
    const NodeSet inside = levi & nodes;
    ComponentRole role = ComponentRole::obstructed;
    if (inside == nodes) {
      role = ComponentRole::levi_factor;
    } else if (comp.type == 'A') {
      const NodeSet missing = nodes - inside;
      const int first = comp.offset;
      const int last = comp.offset + comp.rank - 1;
      if (missing.size() == 1 && (missing.contains(first) || missing.contains(last))) {
        role = ComponentRole::line_stabilizer;
      }
    }
    rep.smooth = rep.smooth && role != ComponentRole::obstructed;
    rep.roles.push_back(role);
  }
  return rep;
}

struct GeneralClassification {
  Cone cone;
  std::vector<Face> faces;        // every face of the cone, canonical order
  std::vector<OrbitDatum> orbits; // faces meeting the dominant chamber
  bool generators_full_rank = true;
};

inline GeneralClassification enumerate_general_orbits(const RootSystem& sys, NodeSet levi,
                                                      const std::vector<Weight>& generators) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  if (generators.empty()) throw InputError("enumerate_general_orbits: empty generator list");
  const std::size_t n = sys.dim();
  std::vector<RatVec> lambdas;
  for (const auto& g : generators) {
    if (g.size() != n) throw InputError("generator rank does not match the root system");
    const RatVec f = sys.to_fundamental(g).coords;
    if (!is_integral(f) || !is_dominant(sys, g)) {
      throw InputError("generators must be dominant integral weights");
    }
    lambdas.push_back(f);
  }
  std::vector<RatVec> points;
  for (const auto& l : lambdas) {
    for (const auto& w : weyl_orbit(sys, {l, Basis::fundamental}, levi)) points.push_back(w.coords);
  }

  GeneralClassification out;
  out.generators_full_rank = linalg::rank(lambdas, n) == n;
  out.cone = cone_hull(points, n);
  out.faces = faces(out.cone);

  const RatMatrix levi_span = root_span(sys, levi);
  const auto& roots = sys.positive_roots();
  const std::int64_t pos = detail::count(sys, sys.all_nodes());
  const std::int64_t pos_levi = detail::count(sys, levi);

  for (std::size_t fi = 0; fi < out.faces.size(); ++fi) {
    const Face& f = out.faces[fi];
    if (!face_meets_dominant_interior(sys, out.cone, f)) continue;
    const FaceSpans spans = face_spans(sys, levi, f);
    OrbitDatum o;
    o.face = fi;
    for (int i = 0; i < sys.rank(); ++i) {
      if (linalg::in_span(spans.orth, sys.simple_root(i).coords, n)) o.pi_y.insert(i);
    }
    o.boundary = boundary(sys, o.pi_y);

    std::int64_t in_norm_levi = 0;
    for (std::size_t k : spans.positive_roots) {
      if (sys.root_supports()[k].subset_of(levi)) ++in_norm_levi;
    }
    std::int64_t in_orth = 0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (linalg::in_span(spans.orth, root_in_fundamental(sys, roots[k]), n)) ++in_orth;
    }
    o.stab_unipotent_dim = pos - static_cast<std::int64_t>(spans.positive_roots.size());
    o.stab_levi_nodes = o.pi_y;
    o.stab_torus_dim = static_cast<std::int64_t>(n) - f.dim;
    o.dim_stab_g = o.stab_unipotent_dim + 2 * in_orth + o.stab_torus_dim;
    o.d_g = pos_levi - in_norm_levi;
    o.dim_orbit = static_cast<std::int64_t>(sys.dim_group()) - o.dim_stab_g;
    o.dim_y = o.dim_orbit + o.d_g;

    // <Gamma>_Z = sum of Z lambda_i over lambda_i in Gamma, plus Z Delta_L intersected with <Gamma>.
    std::vector<BigVec> lattice;
    for (const auto& l : lambdas) {
      BigVec v;
      for (const auto& x : l) v.push_back(numerator_of(x));
      bool on_face = true;
      for (std::size_t t : f.tight) on_face = on_face && linalg::dot(out.cone.halfspaces[t], v) == 0;
      if (on_face) lattice.push_back(std::move(v));
    }
    if (!spans.abs_span.empty()) {
      // Integer combinations c of levi roots whose image lies in <Gamma>.
      std::vector<BigVec> levi_rows;
      for (int i : levi.nodes()) {
        BigVec r;
        for (auto x : sys.cartan()[static_cast<std::size_t>(i)]) r.emplace_back(x);
        levi_rows.push_back(std::move(r));
      }
      std::vector<BigVec> conditions;  // annihilator of <Gamma> applied to each levi root
      for (const auto& a : linalg::annihilator(f.span_basis, n)) {
        const BigVec ap = primitive(a);
        BigVec cond;
        for (const auto& r : levi_rows) cond.push_back(linalg::dot(ap, r));
        conditions.push_back(std::move(cond));
      }
      std::vector<BigVec> kernel;
      if (conditions.empty()) {
        for (std::size_t i = 0; i < levi_rows.size(); ++i) {
          BigVec e(levi_rows.size(), BigInt(0));
          e[i] = 1;
          kernel.push_back(std::move(e));
        }
      } else {
        kernel = linalg::integer_kernel(conditions, levi_rows.size());
      }
      for (const auto& c : kernel) {
        BigVec v(n, BigInt(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
          for (std::size_t k = 0; k < n; ++k) v[k] += c[i] * levi_rows[i][k];
        }
        lattice.push_back(std::move(v));
      }
    }
    o.torus_lattice_saturated = lattice.empty() || linalg::is_saturated(lattice, n);
    out.orbits.push_back(o);
  }
  detail::sort_orbits(out.orbits);
  return out;
}

/// Closure of the orbit of `a` contains the orbit of `b` (general case).
inline bool general_closure_contains(const GeneralClassification& g, const OrbitDatum& a,
                                     const OrbitDatum& b) {
  return face_subset(g.faces[*b.face], g.faces[*a.face]);
}

/// Fundamental weights of `sys` as generators.
inline std::vector<Weight> fundamental_generators(const RootSystem& sys) {
  std::vector<Weight> out;
  for (int i = 0; i < sys.rank(); ++i) out.push_back(sys.fundamental_weight(i));
  return out;
}

struct CrossCheck {
  bool ok = true;
  std::string detail;
};

/// Compares the face classification with fundamental-weight generators to
/// the diagram classification: same keys, same numbers, same order relation.
inline CrossCheck crosscheck_orbits(const RootSystem& sys, NodeSet levi) {
  const auto canon = enumerate_canonical_orbits(sys, levi);
  const auto general = enumerate_general_orbits(sys, levi, fundamental_generators(sys));
  CrossCheck res;
  auto fail = [&](const std::string& why) {
    res.ok = false;
    res.detail = why;
    return res;
  };
  if (canon.size() != general.orbits.size()) {
    return fail("orbit counts differ: " + std::to_string(canon.size()) + " vs " +
                std::to_string(general.orbits.size()));
  }
  std::vector<std::size_t> match(general.orbits.size());
  for (std::size_t g = 0; g < general.orbits.size(); ++g) {
    const auto& go = general.orbits[g];
    auto it = std::find_if(canon.begin(), canon.end(),
                           [&](const OrbitDatum& c) { return c.pi_y == go.pi_y; });
    if (it == canon.end()) return fail("face with Pi_Y = {" + go.pi_y.to_string() + "} unmatched");
    const auto& co = *it;
    if (co.d_g != go.d_g || co.dim_stab_g != go.dim_stab_g || co.dim_orbit != go.dim_orbit ||
        co.dim_y != go.dim_y || co.stab_torus_dim != go.stab_torus_dim ||
        co.stab_unipotent_dim != go.stab_unipotent_dim) {
      return fail("numbers differ for Pi_Y = {" + go.pi_y.to_string() + "}");
    }
    match[g] = static_cast<std::size_t>(it - canon.begin());
  }
  for (std::size_t a = 0; a < match.size(); ++a) {
    for (std::size_t b = a + 1; b < match.size(); ++b) {
      if (match[a] == match[b]) return fail("two faces map to the same Pi_Y");
    }
  }
  for (std::size_t a = 0; a < match.size(); ++a) {
    for (std::size_t b = 0; b < match.size(); ++b) {
      const bool gen = general_closure_contains(general, general.orbits[a], general.orbits[b]);
      const bool can = canonical_closure_contains(canon[match[a]], canon[match[b]]);
      if (gen != can) return fail("orbit closure relations differ");
    }
  }
  return res;
}

}  // namespace ceorb
