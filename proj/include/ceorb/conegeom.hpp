// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Exact polyhedral cones: double description, face lattices, and the
// geometric data attached to a face of a weight cone.

#pragma once

#include "ceorb/linalg.hpp"
#include "ceorb/nodeset.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/rootsys.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace ceorb {

/// V-description of {y : a.y >= 0 for every constraint a}.
struct DoubleDescription {
  std::vector<BigVec> rays;       // extreme rays modulo the lineality space
  std::vector<BigVec> lineality;  // basis of the lineality space
};

namespace detail {

using Bits = boost::dynamic_bitset<>;

inline bool is_zero(const BigVec& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

/// a*p - b*q, made primitive.
inline BigVec combine(const BigInt& a, const BigVec& p, const BigInt& b, const BigVec& q) {
  BigVec out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = a * p[i] - b * q[i];
  make_primitive(out);
  return out;
}

}  // namespace detail

inline DoubleDescription double_description(const std::vector<BigVec>& constraints, std::size_t n) {
  using detail::Bits;
  const std::size_t m = constraints.size();
  std::vector<BigVec> lineality;
  for (std::size_t i = 0; i < n; ++i) {
    BigVec e(n, BigInt(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<BigVec> rays;
  std::vector<Bits> zeros;  // tight processed constraints per ray

  for (std::size_t j = 0; j < m; ++j) {
    const BigVec& a = constraints[j];
    std::size_t pick = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      if (linalg::dot(a, lineality[i]) != 0) {
        pick = i;
        break;
      }
    }
    if (pick < lineality.size()) {
      BigVec l0 = lineality[pick];
      BigInt al0 = linalg::dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      std::vector<BigVec> next_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == pick) continue;
        const BigInt al = linalg::dot(a, lineality[i]);
        next_lin.push_back(al == 0 ? lineality[i] : detail::combine(al0, lineality[i], al, l0));
      }
      for (std::size_t r = 0; r < rays.size(); ++r) {
        const BigInt ar = linalg::dot(a, rays[r]);
        if (ar != 0) rays[r] = detail::combine(al0, rays[r], ar, l0);
        zeros[r].resize(m);
        zeros[r].set(j);
      }
      Bits z(m);
      for (std::size_t k = 0; k < j; ++k) z.set(k);
      rays.push_back(std::move(l0));
      zeros.push_back(std::move(z));
      lineality = std::move(next_lin);
      continue;
    }

    std::vector<BigInt> val(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = linalg::dot(a, rays[r]);
      zeros[r].resize(m);
      if (val[r] > 0) pos.push_back(r);
      if (val[r] < 0) neg.push_back(r);
      if (val[r] == 0) zeros[r].set(j);
    }
    if (neg.empty()) continue;
    std::vector<BigVec> next_rays;
    std::vector<Bits> next_zeros;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] >= 0) {
        next_rays.push_back(rays[r]);
        next_zeros.push_back(zeros[r]);
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const Bits common = zeros[p] & zeros[q];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(zeros[r])) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] * q - val[q] * p vanishes on a.
        next_rays.push_back(detail::combine(val[p], rays[q], val[q], rays[p]));
        Bits z = common;
        z.set(j);
        next_zeros.push_back(std::move(z));
      }
    }
    rays = std::move(next_rays);
    zeros = std::move(next_zeros);
  }
  return {std::move(rays), std::move(lineality)};
}

/// Polyhedral cone generated by finitely many integral vectors.
struct Cone {
  std::size_t ambient = 0;
  std::vector<BigVec> generators;  // primitive, deduplicated, nonzero
  std::vector<BigVec> halfspaces;  // facet normals h with h.x >= 0, inside span(cone)
  std::vector<BigVec> equations;   // basis of the orthogonal complement of span(cone)
  int dim = 0;
  int lineality_dim = 0;
  /// incidence[f][g]: generator g lies on facet f.
  std::vector<detail::Bits> incidence;

  bool contains(const RatVec& x) const {
    const BigVec p = primitive(x);
    for (const auto& e : equations) {
      if (linalg::dot(e, p) != 0) return false;
    }
    for (const auto& h : halfspaces) {
      if (linalg::dot(h, p) < 0) return false;
    }
    return true;
  }
};

inline Cone cone_hull(const std::vector<RatVec>& vectors, std::size_t ambient) {
  Cone c;
  c.ambient = ambient;
  std::set<BigVec> seen;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw InputError("cone_hull: vectors of mixed dimension");
    BigVec p = primitive(v);
    if (detail::is_zero(p)) continue;
    if (seen.insert(p).second) c.generators.push_back(std::move(p));
  }
  RatMatrix rat;
  for (const auto& g : c.generators) rat.push_back(to_rational(g));
  const RatMatrix span = linalg::span_basis(rat, ambient);
  c.dim = static_cast<int>(span.size());
  for (const auto& e : linalg::annihilator(span, ambient)) c.equations.push_back(primitive(e));

  const DoubleDescription polar = double_description(c.generators, ambient);
  std::set<BigVec> facets;
  for (const auto& y : polar.rays) {
    BigVec h = primitive(linalg::project(span, to_rational(y), ambient));
    if (!detail::is_zero(h)) facets.insert(std::move(h));
  }
  c.halfspaces.assign(facets.begin(), facets.end());

  const std::size_t ng = c.generators.size();
  detail::Bits on_all(ng);
  on_all.set();
  for (const auto& h : c.halfspaces) {
    detail::Bits row(ng);
    for (std::size_t g = 0; g < ng; ++g) {
      if (linalg::dot(h, c.generators[g]) == 0) row.set(g);
    }
    on_all &= row;
    c.incidence.push_back(std::move(row));
  }
  RatMatrix lin;
  for (std::size_t g = 0; g < ng; ++g) {
    if (on_all.test(g)) lin.push_back(rat[g]);
  }
  c.lineality_dim = static_cast<int>(linalg::rank(lin, ambient));
  return c;
}

inline Cone cone_hull(const std::vector<RatVec>& vectors) {
  if (vectors.empty()) throw InputError("cone_hull: empty generator list");
  return cone_hull(vectors, vectors.front().size());
}

struct Face {
  std::vector<std::size_t> tight;       // facet indices vanishing on the face
  std::vector<std::size_t> generators;  // generator indices lying in the face
  RatMatrix span_basis;                 // RREF basis of the linear span
  int dim = 0;
};

/// a is contained in b.
inline bool face_subset(const Face& a, const Face& b) {
  return std::includes(a.tight.begin(), a.tight.end(), b.tight.begin(), b.tight.end());
}

inline std::vector<Face> faces(const Cone& c) {
  const std::size_t ng = c.generators.size();
  const std::size_t nf = c.halfspaces.size();
  auto closure = [&](const detail::Bits& gens) {
    detail::Bits tight(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      if (gens.is_subset_of(c.incidence[f])) tight.set(f);
    }
    return tight;
  };
  auto generators_of = [&](const detail::Bits& tight) {
    detail::Bits gens(ng);
    gens.set();
    for (std::size_t f = 0; f < nf; ++f) {
      if (tight.test(f)) gens &= c.incidence[f];
    }
    return gens;
  };

  std::set<detail::Bits> seen;
  std::vector<detail::Bits> stack{closure(generators_of(detail::Bits(nf)))};
  seen.insert(stack.back());
  while (!stack.empty()) {
    const detail::Bits tight = stack.back();
    stack.pop_back();
    const detail::Bits gens = generators_of(tight);
    for (std::size_t f = 0; f < nf; ++f) {
      if (tight.test(f)) continue;
      detail::Bits next = closure(gens & c.incidence[f]);
      if (seen.insert(next).second) stack.push_back(std::move(next));
    }
  }

  std::vector<Face> out;
  for (const auto& tight : seen) {
    Face face;
    for (std::size_t f = 0; f < nf; ++f) {
      if (tight.test(f)) face.tight.push_back(f);
    }
    const detail::Bits gens = generators_of(tight);
    RatMatrix rows;
    for (std::size_t g = 0; g < ng; ++g) {
      if (gens.test(g)) {
        face.generators.push_back(g);
        rows.push_back(to_rational(c.generators[g]));
      }
    }
    face.span_basis = linalg::span_basis(rows, c.ambient);
    face.dim = static_cast<int>(face.span_basis.size());
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.tight < b.tight;
  });
  return out;
}

/// Sum of the generators of a face; a point of its relative interior.
inline BigVec relative_interior_point(const Cone& c, const Face& f) {
  BigVec s(c.ambient, BigInt(0));
  for (std::size_t g : f.generators) {
    for (std::size_t k = 0; k < c.ambient; ++k) s[k] += c.generators[g][k];
  }
  return s;
}

/// Whether the relative interior of `f` meets the dominant chamber.
/// Weights are in fundamental coordinates, so the chamber is the positive orthant.
inline bool face_meets_dominant_interior(const RootSystem& sys, const Cone& c, const Face& f) {
  if (c.ambient != sys.dim()) throw InputError("cone and root system dimensions differ");
  if (f.dim == 0) return true;
  const std::size_t n = c.ambient;
  std::vector<BigVec> rows;
  auto add_equality = [&](const BigVec& e) {
    rows.push_back(e);
    BigVec neg = e;
    for (auto& x : neg) x = -x;
    rows.push_back(std::move(neg));
  };
  for (const auto& e : c.equations) add_equality(e);
  std::vector<bool> tight(c.halfspaces.size(), false);
  for (std::size_t t : f.tight) tight[t] = true;
  for (std::size_t h = 0; h < c.halfspaces.size(); ++h) {
    if (tight[h]) {
      add_equality(c.halfspaces[h]);
    } else {
      rows.push_back(c.halfspaces[h]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    BigVec e(n, BigInt(0));
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  const DoubleDescription q = double_description(rows, n);
  BigVec s(n, BigInt(0));
  for (const auto& r : q.rays) {
    for (std::size_t k = 0; k < n; ++k) s[k] += r[k];
  }
  for (std::size_t h = 0; h < c.halfspaces.size(); ++h) {
    if (!tight[h] && linalg::dot(c.halfspaces[h], s) <= 0) return false;
  }
  return true;
}

/// Linear data attached to a face Gamma of a weight cone.
struct FaceSpans {
  RatMatrix span;        // <Gamma>
  RatMatrix abs_span;    // |Gamma| = span(Delta_L) intersected with <Gamma>
  RatMatrix orth;        // <Gamma>^perp under the invariant form
  RatMatrix norm_span;   // ||Gamma|| = |Gamma| + <Gamma>^perp
  std::vector<std::size_t> positive_roots;  // indices of Delta^+ lying in ||Gamma||
  std::vector<IntVec> phi;                  // simple roots of Delta intersected with ||Gamma||
};

/// Span of the simple roots in `nodes`, in fundamental coordinates.
inline RatMatrix root_span(const RootSystem& sys, NodeSet nodes) {
  RatMatrix rows;
  for (int i : nodes.nodes()) rows.push_back(sys.simple_root(i).coords);
  return linalg::span_basis(rows, sys.dim());
}

/// A positive root (simple-root coordinates) in fundamental coordinates.
inline RatVec root_in_fundamental(const RootSystem& sys, const IntVec& beta) {
  return sys.to_fundamental(Weight::from_ints(beta, Basis::simple_root)).coords;
}

/// Orthogonal complement of span(basis) under the invariant form.
inline RatMatrix form_complement(const RootSystem& sys, const RatMatrix& basis) {
  const std::size_t n = sys.dim();
  RatMatrix rows;
  for (const auto& b : basis) rows.push_back(linalg::mat_vec(sys.form(), b));
  return linalg::span_basis(linalg::nullspace(rows, n), n);
}

inline FaceSpans face_spans(const RootSystem& sys, NodeSet levi, const Face& f) {
  const std::size_t n = sys.dim();
  FaceSpans s;
  s.span = f.span_basis;
  s.abs_span = linalg::intersect(root_span(sys, levi), s.span, n);
  s.orth = form_complement(sys, s.span);
  s.norm_span = linalg::subspace_sum(s.abs_span, s.orth, n);
  const auto& roots = sys.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (linalg::in_span(s.norm_span, root_in_fundamental(sys, roots[k]), n)) {
      s.positive_roots.push_back(k);
    }
  }
  std::set<IntVec> members;
  for (std::size_t k : s.positive_roots) members.insert(roots[k]);
  for (std::size_t k : s.positive_roots) {
    bool decomposable = false;
    for (std::size_t j : s.positive_roots) {
      IntVec rest = roots[k];
      for (std::size_t i = 0; i < n; ++i) rest[i] -= roots[j][i];
      if (members.count(rest) != 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.phi.push_back(roots[k]);
  }
  return s;
}

}  // namespace ceorb
