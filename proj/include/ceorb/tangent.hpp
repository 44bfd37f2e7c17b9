// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Tangent space at the fixed point of the canonical embedding of G/Ru(P):
// which summands Hom(V(w_i)^{Ru P}, V(w_i)) survive, and the generic
// L-generation oracle that decides the same question by search.

#pragma once

#include "ceorb/dynkin.hpp"
#include "ceorb/nodeset.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/repcalc.hpp"
#include "ceorb/rootsys.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ceorb {

struct SummandReport {
  int node = 0;
  bool retained = true;
  BigInt g_dim;
  BigInt l_dim;
  BigInt contribution;  // g_dim * l_dim when retained, else 0
};

struct TangentReport {
  std::vector<SummandReport> summands;
  BigInt total;
  std::int64_t dim_ce = 0;
};

namespace detail {

inline void check_tangent_input(const RootSystem& sys, NodeSet levi) {
  require_simple(sys, "tangent space computation");
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  if (levi == sys.all_nodes()) throw InputError("levi must be a proper subset (P != G)");
}

inline int next_node(const RootSystem& sys, int cur, int prev) {
  for (const auto& e : sys.neighbors(cur)) {
    if (e.to != prev) return e.to;
  }
  return -1;
}

/// Nodes removed by the walk starting at the extreme node k.
inline NodeSet walk_from(const RootSystem& sys, NodeSet levi, int k, std::optional<int> sing) {
  NodeSet removed;
  if (sing && *sing == k) return removed;
  int prev = k;
  int cur = next_node(sys, k, -1);
  // Step (2): stop after removing a node outside levi, or the singularity.
  while (cur >= 0) {
    removed.insert(cur);
    if (!levi.contains(cur)) return removed;
    if (sing && cur == *sing) break;
    const int nxt = next_node(sys, cur, prev);
    prev = cur;
    cur = nxt;
  }
  if (cur < 0) return removed;

  // The walk stopped at the singularity, which lies in levi.
  const int s = cur;
  if (sys.simply_laced()) {
    // Step (3): the incoming ray and one more ray inside levi.
    const auto all_rays = rays(sys);
    std::vector<int> third;
    std::size_t other_len = 0;
    int inside = 0;
    for (const auto& ray : all_rays) {
      const bool incoming = std::find(ray.begin(), ray.end(), prev) != ray.end();
      const bool in_levi = std::all_of(ray.begin(), ray.end(), [&](int v) { return levi.contains(v); });
      if (incoming || in_levi) {
        ++inside;
        other_len = std::max(other_len, ray.size());
      } else {
        third = ray;
      }
    }
    if (inside < 2 || third.empty()) return removed;
    const bool type_e = sys.components().front().type == 'E';
    std::size_t segment = 1;  // the singularity itself
    for (int v : third) {
      if (type_e && segment > other_len) break;
      removed.insert(v);
      ++segment;
      if (!levi.contains(v)) break;
    }
    return removed;
  }

  // Step (4): continue only when the walk crossed the multiple edge from short to long.
  if (!(sys.half_length2(prev) < sys.half_length2(s))) return removed;
  int p = s;
  int c = next_node(sys, s, prev);
  while (c >= 0) {
    removed.insert(c);
    if (!levi.contains(c)) break;
    const int nxt = next_node(sys, c, p);
    p = c;
    c = nxt;
  }
  return removed;
}

}  // namespace detail

/// Summands removed from the sum of Hom(V(w_i)^{Ru P}, V(w_i)), by diagram walks.
inline NodeSet removal_set(const RootSystem& sys, NodeSet levi) {
  detail::check_tangent_input(sys, levi);
  const auto sing = singularity(sys);
  NodeSet removed;
  for (int k : (extreme_nodes(sys) & levi).nodes()) {
    removed = removed | detail::walk_from(sys, levi, k, sing);
  }
  return removed;
}

constexpr int kDefaultOracleRank = 4;

/// Nodes i with w_i L-generated by the other fundamental weights, by exhaustive search.
inline NodeSet removal_set_oracle(const RootSystem& sys, NodeSet levi,
                                  int max_rank = kDefaultOracleRank) {
  detail::check_tangent_input(sys, levi);
  if (sys.rank() > max_rank) {
    throw InputError("oracle search is limited to rank " + std::to_string(max_rank));
  }
  NodeSet removed;
  for (int i = 0; i < sys.rank(); ++i) {
    std::vector<Weight> pool;
    for (int j = 0; j < sys.rank(); ++j) {
      if (j != i) pool.push_back(sys.fundamental_weight(j));
    }
    if (is_L_generated(sys, levi, sys.fundamental_weight(i), pool)) removed.insert(i);
  }
  return removed;
}

/// dim G/Ru(P) = |Delta^+| + |Delta^+_L| + rank.
inline std::int64_t dim_CE(const RootSystem& sys, NodeSet levi) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
  return static_cast<std::int64_t>(sys.count_positive_roots(sys.all_nodes()) +
                                   sys.count_positive_roots(levi)) +
         sys.rank();
}

inline TangentReport tangent_report(const RootSystem& sys, NodeSet levi) {
  const NodeSet removed = removal_set(sys, levi);
  TangentReport rep;
  rep.total = 0;
  for (int i = 0; i < sys.rank(); ++i) {
    SummandReport s;
    s.node = i;
    s.retained = !removed.contains(i);
    s.g_dim = weyl_dim(sys, sys.all_nodes(), sys.fundamental_weight(i));
    s.l_dim = weyl_dim(sys, levi, sys.fundamental_weight(i));
    s.contribution = s.retained ? BigInt(s.g_dim * s.l_dim) : BigInt(0);
    rep.total += s.contribution;
    rep.summands.push_back(std::move(s));
  }
  rep.dim_ce = dim_CE(sys, levi);
  return rep;
}

}  // namespace ceorb
