// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <utility>
#include <vector>

namespace ceorb {
namespace {

using testing::simple_types;

using DimPair = std::pair<BigInt, BigInt>;

std::vector<DimPair> retained_pairs(const TangentReport& r) {
  std::vector<DimPair> out;
  for (const auto& s : r.summands) {
    if (s.retained) out.emplace_back(s.g_dim, s.l_dim);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeSet> proper_levis(const RootSystem& sys) {
  std::vector<NodeSet> out;
  for (const NodeSet l : testing::all_subsets(sys)) {
    if (l != sys.all_nodes()) out.push_back(l);
  }
  return out;
}

TEST(Tangent, E8Example) {
  const RootSystem e8({{'E', 8}});
  const NodeSet levi{0, 1, 2, 3, 4, 5, 6};
  const TangentReport r = tangent_report(e8, levi);
  std::vector<DimPair> want{{248, 1}, {30380, 56}, {3875, 133}, {147250, 912}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(retained_pairs(r), want);
  EXPECT_EQ(r.total, BigInt(136508903));
  EXPECT_EQ(r.dim_ce, 191);
  EXPECT_EQ(removal_set(e8, levi), (NodeSet{2, 3, 4, 5}));
}

TEST(Tangent, F4Example) {
  const RootSystem f4({{'F', 4}});
  const NodeSet levi{0, 1, 2};
  const TangentReport r = tangent_report(f4, levi);
  std::vector<DimPair> want{{26, 1}, {273, 8}, {52, 7}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(retained_pairs(r), want);
  EXPECT_EQ(r.total, BigInt(2574));
  EXPECT_EQ(r.dim_ce, 37);
  EXPECT_EQ(removal_set(f4, levi).size(), 1);
}

TEST(Tangent, MatrixSpaceIsItsOwnTangentSpace) {
  for (int n = 2; n <= 9; ++n) {
    const RootSystem sys({{'A', n - 1}});
    NodeSet levi;
    for (int i = 0; i + 1 < n - 1; ++i) levi.insert(i);
    const TangentReport r = tangent_report(sys, levi);
    const auto kept = std::count_if(r.summands.begin(), r.summands.end(),
                                    [](const SummandReport& s) { return s.retained; });
    EXPECT_EQ(kept, 1);
    EXPECT_TRUE(r.summands[0].retained);
    EXPECT_EQ(r.total, BigInt(n * (n - 1)));
    EXPECT_EQ(r.total, BigInt(r.dim_ce));
  }
  const RootSystem a2({{'A', 2}});
  const TangentReport r = tangent_report(a2, NodeSet{0});
  EXPECT_EQ(r.total, 6);
  EXPECT_EQ(r.dim_ce, 6);
}

TEST(Tangent, RejectsFullLeviAndSemisimple) {
  const RootSystem a2({{'A', 2}});
  EXPECT_THROW(removal_set(a2, a2.all_nodes()), InputError);
  EXPECT_THROW(tangent_report(a2, a2.all_nodes()), InputError);
  EXPECT_THROW(removal_set(RootSystem({{'A', 1}, {'A', 1}}), NodeSet{0}), InputError);
  EXPECT_THROW(removal_set_oracle(RootSystem({{'A', 5}}), NodeSet{0}), InputError);
}

TEST(DimCE, Examples) {
  EXPECT_EQ(dim_CE(RootSystem({{'E', 8}}), NodeSet{0, 1, 2, 3, 4, 5, 6}), 191);
  EXPECT_EQ(dim_CE(RootSystem({{'F', 4}}), NodeSet{0, 1, 2}), 37);
  for (const auto& c : simple_types(1, 8)) {
    const RootSystem sys({c});
    EXPECT_EQ(dim_CE(sys, sys.all_nodes()), static_cast<std::int64_t>(sys.dim_group()));
  }
}

TEST(Oracle, Examples) {
  const RootSystem a3({{'A', 3}});
  EXPECT_EQ(removal_set_oracle(a3, NodeSet{0}), NodeSet{1});
  EXPECT_EQ(removal_set(a3, NodeSet{0}), NodeSet{1});
  for (const auto& c : simple_types(1, 4)) {
    const RootSystem sys({c});
    EXPECT_EQ(removal_set_oracle(sys, NodeSet{}), NodeSet{});
    EXPECT_EQ(removal_set(sys, NodeSet{}), NodeSet{});
  }
  for (char t : {'B', 'G'}) {
    const RootSystem sys({{t, 2}});
    for (int i = 0; i < 2; ++i) EXPECT_EQ(removal_set(sys, NodeSet{i}), removal_set_oracle(sys, NodeSet{i}));
  }
}

TEST(Oracle, DiagramWalksMatchSearchThroughRankFour) {
  for (const auto& c : simple_types(1, 4)) {
    const RootSystem sys({c});
    for (const NodeSet levi : proper_levis(sys)) {
      EXPECT_EQ(removal_set(sys, levi), removal_set_oracle(sys, levi))
          << testing::label(c) << " levi " << levi.to_string();
    }
  }
}

TEST(Tangent, SummandInvariants) {
  for (const auto& c : simple_types(1, 8)) {
    const RootSystem sys({c});
    for (const NodeSet levi : proper_levis(sys)) {
      const NodeSet removed = removal_set(sys, levi);
      EXPECT_TRUE(removed.subset_of(levi | boundary(sys, levi))) << testing::label(c) << " " << levi.to_string();
      if (sys.rank() > 6) continue;
      const TangentReport r = tangent_report(sys, levi);
      BigInt total = 0;
      for (const auto& s : r.summands) {
        if (!levi.contains(s.node)) EXPECT_EQ(s.l_dim, 1);
        EXPECT_EQ(s.contribution, s.retained ? BigInt(s.g_dim * s.l_dim) : BigInt(0));
        total += s.contribution;
      }
      EXPECT_EQ(total, r.total);
      EXPECT_GE(r.total, BigInt(r.dim_ce));
      if (is_smooth_canonical(sys, levi).smooth) EXPECT_EQ(r.total, BigInt(r.dim_ce)) << testing::label(c);
    }
  }
}

}  // namespace
}  // namespace ceorb
