// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace ceorb {
namespace {

using testing::simple_types;

TEST(Components, Examples) {
  const RootSystem a3({{'A', 3}});
  EXPECT_EQ(components(a3, NodeSet{0, 2}), (std::vector<NodeSet>{NodeSet{0}, NodeSet{2}}));
  EXPECT_EQ(components(a3, NodeSet{0, 1, 2}), (std::vector<NodeSet>{NodeSet{0, 1, 2}}));
  const RootSystem d4({{'D', 4}});
  EXPECT_EQ(components(d4, NodeSet{0, 2, 3}), (std::vector<NodeSet>{NodeSet{0}, NodeSet{2}, NodeSet{3}}));
}

TEST(Components, PartitionWithoutCrossEdges) {
  for (const auto& c : simple_types(1, 6)) {
    const RootSystem sys({c});
    for (const NodeSet s : testing::all_subsets(sys)) {
      const auto parts = components(sys, s);
      NodeSet uni;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        EXPECT_FALSE(parts[i].empty());
        EXPECT_FALSE(uni.intersects(parts[i]));
        uni = uni | parts[i];
        if (i > 0) EXPECT_LT(parts[i - 1].min_node(), parts[i].min_node());
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          for (int u : parts[i].nodes()) {
            for (int v : parts[j].nodes()) EXPECT_FALSE(sys.adjacent(u, v));
          }
        }
      }
      EXPECT_EQ(uni, s);
    }
  }
}

TEST(Boundary, Examples) {
  const RootSystem a3({{'A', 3}});
  EXPECT_EQ(boundary(a3, NodeSet{1, 2}), NodeSet{0});
  EXPECT_EQ(boundary(a3, NodeSet{}), NodeSet{});
  EXPECT_EQ(boundary(a3, a3.all_nodes()), NodeSet{});
}

TEST(Boundary, DisjointFromSetExhaustive) {
  for (const auto& c : simple_types(1, 6)) {
    const RootSystem sys({c});
    for (const NodeSet s : testing::all_subsets(sys)) {
      const NodeSet b = boundary(sys, s);
      EXPECT_FALSE(b.intersects(s));
      for (int v : b.nodes()) {
        bool touches = false;
        for (int u : s.nodes()) touches = touches || sys.adjacent(u, v);
        EXPECT_TRUE(touches);
      }
    }
  }
}

TEST(Singularity, Examples) {
  for (int n = 1; n <= 8; ++n) EXPECT_FALSE(singularity(RootSystem({{'A', n}})).has_value());
  EXPECT_EQ(singularity(RootSystem({{'D', 4}})), 1);
  const RootSystem f4({{'F', 4}});
  const int s = *singularity(f4);
  EXPECT_TRUE(f4.is_long(s));
  EXPECT_TRUE(std::any_of(f4.neighbors(s).begin(), f4.neighbors(s).end(),
                          [](const Edge& e) { return e.multiplicity == 2; }));
  EXPECT_THROW(singularity(RootSystem({{'A', 1}, {'A', 1}})), InputError);
}

TEST(Singularity, LongEndOfMultipleEdge) {
  EXPECT_EQ(singularity(RootSystem({{'B', 2}})), 0);
  EXPECT_EQ(singularity(RootSystem({{'C', 2}})), 1);
  EXPECT_EQ(singularity(RootSystem({{'B', 5}})), 3);
  EXPECT_EQ(singularity(RootSystem({{'C', 5}})), 4);
  EXPECT_EQ(singularity(RootSystem({{'G', 2}})), 1);
  EXPECT_EQ(singularity(RootSystem({{'F', 4}})), 1);
  EXPECT_EQ(singularity(RootSystem({{'E', 6}})), 3);
  EXPECT_EQ(singularity(RootSystem({{'D', 6}})), 3);
  EXPECT_FALSE(singularity(RootSystem({{'D', 3}})).has_value());
}

TEST(ExtremeNodes, Examples) {
  EXPECT_EQ(extreme_nodes(RootSystem({{'A', 4}})), (NodeSet{0, 3}));
  EXPECT_EQ(extreme_nodes(RootSystem({{'D', 4}})), (NodeSet{0, 2, 3}));
  EXPECT_EQ(extreme_nodes(RootSystem({{'A', 1}})), NodeSet{0});
}

TEST(ExtremeNodes, CountByType) {
  for (const auto& c : simple_types(1, 8)) {
    const int n = extreme_nodes(RootSystem({c})).size();
    EXPECT_GE(n, 1);
    EXPECT_LE(n, 3);
    if (n == 3) EXPECT_TRUE(c.type == 'D' || c.type == 'E') << testing::label(c);
  }
}

std::vector<std::size_t> ray_lengths(const RootSystem& sys) {
  std::vector<std::size_t> out;
  for (const auto& r : rays(sys)) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Rays, Examples) {
  EXPECT_EQ(ray_lengths(RootSystem({{'D', 4}})), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(ray_lengths(RootSystem({{'E', 8}})), (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_EQ(ray_lengths(RootSystem({{'F', 4}})), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(rays(RootSystem({{'A', 3}})), InputError);
}

TEST(Rays, ListedOutwardAndCoverDiagram) {
  for (const auto& c : simple_types(2, 8)) {
    const RootSystem sys({c});
    const auto sing = singularity(sys);
    if (!sing) continue;
    NodeSet covered{*sing};
    for (const auto& r : rays(sys)) {
      EXPECT_TRUE(sys.adjacent(*sing, r.front()));
      EXPECT_LE(sys.degree(r.back()), 1);
      for (std::size_t k = 1; k < r.size(); ++k) EXPECT_TRUE(sys.adjacent(r[k - 1], r[k]));
      for (int v : r) {
        EXPECT_FALSE(covered.contains(v));
        covered.insert(v);
      }
    }
    EXPECT_EQ(covered, sys.all_nodes()) << testing::label(c);
  }
}

}  // namespace
}  // namespace ceorb
