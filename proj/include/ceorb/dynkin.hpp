// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Combinatorics of Dynkin diagrams: components, boundaries, extreme nodes,
// the singular node and the rays leaving it.

#pragma once

#include "ceorb/nodeset.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/rootsys.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ceorb {

/// Connected components of the subdiagram induced on `s`, ordered by smallest node.
inline std::vector<NodeSet> components(const RootSystem& sys, NodeSet s) {
  std::vector<NodeSet> out;
  NodeSet rest = s;
  while (!rest.empty()) {
    NodeSet comp;
    std::vector<int> stack{rest.min_node()};
    comp.insert(stack.back());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& e : sys.neighbors(v)) {
        if (s.contains(e.to) && !comp.contains(e.to)) {
          comp.insert(e.to);
          stack.push_back(e.to);
        }
      }
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

/// Nodes outside `s` adjacent to some node of `s`.
inline NodeSet boundary(const RootSystem& sys, NodeSet s) {
  NodeSet out;
  for (int v : s.nodes()) {
    for (const auto& e : sys.neighbors(v)) {
      if (!s.contains(e.to)) out.insert(e.to);
    }
  }
  return out;
}

inline void require_simple(const RootSystem& sys, const char* what) {
  if (!sys.is_simple()) {
    throw InputError(std::string(what) + " requires a simple root system, got " + sys.name());
  }
}

/// Branch node, or the long end of the multiple edge; absent in type A.
inline std::optional<int> singularity(const RootSystem& sys) {
  require_simple(sys, "singularity");
  for (int v = 0; v < sys.rank(); ++v) {
    if (sys.degree(v) >= 3) return v;
  }
  for (int v = 0; v < sys.rank(); ++v) {
    for (const auto& e : sys.neighbors(v)) {
      if (e.multiplicity > 1 && sys.half_length2(v) > sys.half_length2(e.to)) return v;
    }
  }
  return std::nullopt;
}

/// Nodes of degree at most one.
inline NodeSet extreme_nodes(const RootSystem& sys) {
  require_simple(sys, "extreme_nodes");
  NodeSet out;
  for (int v = 0; v < sys.rank(); ++v) {
    if (sys.degree(v) <= 1) out.insert(v);
  }
  return out;
}

/// Simple path in the diagram from `from` (inclusive) to `to` (inclusive).
inline std::vector<int> diagram_path(const RootSystem& sys, int from, int to) {
  std::vector<int> parent(sys.dim(), -1);
  std::vector<int> stack{from};
  parent[static_cast<std::size_t>(from)] = from;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& e : sys.neighbors(v)) {
      if (parent[static_cast<std::size_t>(e.to)] == -1) {
        parent[static_cast<std::size_t>(e.to)] = v;
        stack.push_back(e.to);
      }
    }
  }
  if (parent[static_cast<std::size_t>(to)] == -1) throw InputError("nodes are not connected");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Maximal paths leaving the singularity, each listed outward and excluding
/// the singularity itself; ordered by smallest node.
inline std::vector<std::vector<int>> rays(const RootSystem& sys) {
  const auto sing = singularity(sys);
  if (!sing) throw InputError("rays: " + sys.name() + " has no singular node");
  std::vector<std::vector<int>> out;
  for (const auto& first : sys.neighbors(*sing)) {
    std::vector<int> ray{first.to};
    int prev = *sing;
    while (true) {
      const int cur = ray.back();
      int next = -1;
      for (const auto& e : sys.neighbors(cur)) {
        if (e.to != prev) next = e.to;
      }
      if (next < 0) break;
      prev = cur;
      ray.push_back(next);
    }
    out.push_back(std::move(ray));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return out;
}

}  // namespace ceorb
