// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <string>
#include <vector>

namespace ceorb {
namespace {

using testing::simple_types;

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Fundamental representation dimensions from classical closed forms and tables.
BigInt fundamental_dim(const ComponentSpec& c, int k) {
  const int n = c.rank;
  switch (c.type) {
    case 'A': return binom(n + 1, k);
    case 'B': return k < n ? binom(2 * n + 1, k) : BigInt(1) << n;
    case 'C': return binom(2 * n, k) - binom(2 * n, k - 2);
    case 'D': return k <= n - 2 ? binom(2 * n, k) : BigInt(1) << (n - 1);
    case 'E': {
      static const std::map<int, std::vector<std::string>> dims{
          {6, {"27", "78", "351", "2925", "351", "27"}},
          {7, {"133", "912", "8645", "365750", "27664", "1539", "56"}},
          {8, {"3875", "147250", "6696000", "6899079264", "146325270", "2450240", "30380", "248"}}};
      return BigInt(dims.at(n)[static_cast<std::size_t>(k - 1)]);
    }
    case 'F': return std::vector<int>{52, 1274, 273, 26}[static_cast<std::size_t>(k - 1)];
    case 'G': return std::vector<int>{7, 14}[static_cast<std::size_t>(k - 1)];
  }
  return 0;
}

TEST(WeylDim, FundamentalRepresentationsMatchTables) {
  for (const auto& c : simple_types(1, 8)) {
    const RootSystem sys({c});
    for (int k = 1; k <= c.rank; ++k) {
      EXPECT_EQ(weyl_dim(sys, sys.all_nodes(), sys.fundamental_weight(k - 1)), fundamental_dim(c, k))
          << testing::label(c) << " omega_" << k;
    }
  }
}

TEST(WeylDim, Examples) {
  const RootSystem e8({{'E', 8}});
  EXPECT_EQ(weyl_dim(e8, e8.all_nodes(), Weight::zero(8)), 1);
  EXPECT_EQ(weyl_dim(e8, e8.all_nodes(), e8.fundamental_weight(7)), 248);
  const RootSystem f4({{'F', 4}});
  const NodeSet b3{0, 1, 2};
  EXPECT_EQ(weyl_dim(f4, b3, f4.fundamental_weight(2)), 8);   // spin representation of B3
  EXPECT_EQ(weyl_dim(f4, b3, f4.fundamental_weight(0)), 7);   // vector representation of B3
  EXPECT_EQ(weyl_dim(f4, b3, f4.fundamental_weight(3)), 1);
}

TEST(WeylDim, RejectsNonDominant) {
  const RootSystem a2({{'A', 2}});
  EXPECT_THROW(weyl_dim(a2, a2.all_nodes(), -a2.fundamental_weight(0)), InputError);
  // Dominance is only required on the levi nodes.
  EXPECT_EQ(weyl_dim(a2, NodeSet{0}, a2.fundamental_weight(0) - Rational(3) * a2.fundamental_weight(1)), 2);
}

TEST(Multiplicities, Examples) {
  const RootSystem a1({{'A', 1}});
  const auto m = weight_multiplicities(a1, a1.all_nodes(), Weight::from_ints({2}));
  EXPECT_EQ(m, (Multiplicities{{{-2}, 1}, {{0}, 1}, {{2}, 1}}));

  const RootSystem a2({{'A', 2}});
  const auto adj = weight_multiplicities(a2, a2.all_nodes(), Weight::from_ints({1, 1}));
  EXPECT_EQ(adj.at({0, 0}), 2);
  std::int64_t total = 0;
  for (const auto& [w, k] : adj) total += k;
  EXPECT_EQ(total, 8);
}

TEST(Multiplicities, KnownZeroWeightMultiplicities) {
  // The zero weight of the adjoint representation has multiplicity equal to the rank.
  for (const auto& c : simple_types(2, 6)) {
    const RootSystem sys({c});
    IntVec highest(sys.dim(), 0);
    const auto& top = sys.positive_roots().back();
    const RatVec f = root_in_fundamental(sys, top);
    for (std::size_t i = 0; i < sys.dim(); ++i) highest[i] = to_int64(f[i]);
    const auto m = weight_multiplicities(sys, sys.all_nodes(), Weight::from_ints(highest));
    EXPECT_EQ(m.at(IntVec(sys.dim(), 0)), c.rank) << testing::label(c);
    EXPECT_EQ(m.size(), 2 * sys.positive_roots().size() + 1);
  }
}

TEST(Multiplicities, SumIsWeylDimensionForEveryLevi) {
  for (const auto& c : simple_types(1, 4)) {
    const RootSystem sys({c});
    for (const NodeSet levi : testing::all_subsets(sys)) {
      for (int i = 0; i < sys.rank(); ++i) {
        const Weight w = sys.fundamental_weight(i);
        std::int64_t total = 0;
        for (const auto& [mu, k] : weight_multiplicities(sys, levi, w)) total += k;
        EXPECT_EQ(BigInt(total), weyl_dim(sys, levi, w));
      }
    }
  }
}

TEST(Multiplicities, InvariantUnderLeviWeylGroup) {
  for (const auto& c : simple_types(2, 4)) {
    const RootSystem sys({c});
    for (const NodeSet levi : testing::all_subsets(sys)) {
      const Weight hw = Weight::from_ints(IntVec(sys.dim(), 1));
      const auto m = weight_multiplicities(sys, levi, hw);
      for (const auto& [mu, k] : m) {
        for (int i : levi.nodes()) {
          const IntVec image = to_integral(reflect(sys, to_rational(mu), i));
          ASSERT_EQ(m.count(image), 1U);
          EXPECT_EQ(m.at(image), k);
        }
      }
    }
  }
}

// Independent decomposition: multiply characters, then peel off highest weights.
std::map<IntVec, std::int64_t> decompose_by_characters(const RootSystem& sys, NodeSet levi, const IntVec& a,
                                                      const IntVec& b) {
  const auto ca = weight_multiplicities(sys, levi, Weight::from_ints(a));
  const auto cb = weight_multiplicities(sys, levi, Weight::from_ints(b));
  std::map<IntVec, std::int64_t> product;
  for (const auto& [x, m] : ca) {
    for (const auto& [y, k] : cb) {
      IntVec z(x.size());
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] + y[i];
      product[z] += m * k;
    }
  }
  auto height = [&](const IntVec& w) {
    Rational h = 0;
    for (const auto& x : sys.to_simple_root(Weight::from_ints(w)).coords) h += x;
    return h;
  };
  std::map<IntVec, std::int64_t> out;
  while (!product.empty()) {
    auto best = product.begin();
    for (auto it = product.begin(); it != product.end(); ++it) {
      if (height(it->first) > height(best->first)) best = it;
    }
    const IntVec top = best->first;
    const std::int64_t mult = best->second;
    out[top] += mult;
    for (const auto& [w, k] : weight_multiplicities(sys, levi, Weight::from_ints(top))) {
      auto& slot = product[w];
      slot -= mult * k;
      if (slot == 0) product.erase(w);
    }
  }
  return out;
}

TEST(TensorDecompose, Examples) {
  const RootSystem a1({{'A', 1}});
  const auto d = tensor_decompose(a1, a1.all_nodes(), {a1.fundamental_weight(0), a1.fundamental_weight(0)});
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0].highest_weight, Weight::from_ints({0}));
  EXPECT_EQ(d[1].highest_weight, Weight::from_ints({2}));
  EXPECT_EQ(d[0].multiplicity, 1);
  EXPECT_EQ(d[1].multiplicity, 1);

  const RootSystem b3({{'B', 3}});
  const Weight lam = b3.fundamental_weight(2);
  const auto id = tensor_decompose(b3, NodeSet{1, 2}, {lam, Weight::zero(3)});
  ASSERT_EQ(id.size(), 1U);
  EXPECT_EQ(id[0].highest_weight, lam);

  // A3 with levi {1}: omega_2 = 2 omega_1 - alpha_1 occurs in res(omega_1)^2.
  const RootSystem a3({{'A', 3}});
  const auto sq = tensor_decompose(a3, NodeSet{0}, {a3.fundamental_weight(0), a3.fundamental_weight(0)});
  bool found = false;
  for (const auto& s : sq) found = found || s.highest_weight == a3.fundamental_weight(1);
  EXPECT_TRUE(found);
}

TEST(TensorDecompose, AgreesWithCharacterPeelingOnFundamentalPairs) {
  for (const auto& c : simple_types(1, 3)) {
    const RootSystem sys({c});
    for (const NodeSet levi : testing::all_subsets(sys)) {
      for (int i = 0; i < sys.rank(); ++i) {
        for (int j = i; j < sys.rank(); ++j) {
          const auto ours = tensor_decompose(sys, levi, {sys.fundamental_weight(i), sys.fundamental_weight(j)});
          std::map<IntVec, std::int64_t> got;
          for (const auto& s : ours) got[to_integral(s.highest_weight.coords)] = s.multiplicity;
          IntVec a(sys.dim(), 0);
          IntVec b(sys.dim(), 0);
          a[i] = 1;
          b[j] = 1;
          EXPECT_EQ(got, decompose_by_characters(sys, levi, a, b)) << sys.name() << " levi " << levi.to_string();
        }
      }
    }
  }
}

TEST(TensorDecompose, DimensionsAndHighestWeightShape) {
  for (const auto& c : simple_types(1, 4)) {
    const RootSystem sys({c});
    for (const NodeSet levi : testing::all_subsets(sys)) {
      for (int i = 0; i < sys.rank(); ++i) {
        for (int j = 0; j < sys.rank(); ++j) {
          const Weight a = sys.fundamental_weight(i);
          const Weight b = sys.fundamental_weight(j);
          const auto d = tensor_decompose(sys, levi, {a, b});
          BigInt total = 0;
          int cartan = 0;
          for (const auto& s : d) {
            EXPECT_GE(s.multiplicity, 1);
            total += s.multiplicity * weyl_dim(sys, levi, s.highest_weight);
            const RatVec beta = sys.to_simple_root(a + b - s.highest_weight).coords;
            for (int k = 0; k < sys.rank(); ++k) {
              EXPECT_TRUE(is_integer(beta[k]) && beta[k] >= 0);
              if (!levi.contains(k)) EXPECT_EQ(beta[k], 0);
            }
            if (s.highest_weight == a + b) {
              ++cartan;
              EXPECT_EQ(s.multiplicity, 1);
            }
          }
          EXPECT_EQ(cartan, 1);
          EXPECT_EQ(total, weyl_dim(sys, levi, a) * weyl_dim(sys, levi, b));
        }
      }
    }
  }
}

TEST(TensorDecompose, FoldsLeftToRight) {
  const RootSystem a2({{'A', 2}});
  const Weight w = a2.fundamental_weight(0);
  const auto d = tensor_decompose(a2, a2.all_nodes(), {w, w, w});
  BigInt total = 0;
  for (const auto& s : d) total += s.multiplicity * weyl_dim(a2, a2.all_nodes(), s.highest_weight);
  EXPECT_EQ(total, 27);
  // 3 x 3 x 3 = 10 + 8 + 8 + 1.
  std::map<IntVec, std::int64_t> got;
  for (const auto& s : d) got[to_integral(s.highest_weight.coords)] = s.multiplicity;
  EXPECT_EQ(got, (std::map<IntVec, std::int64_t>{{{0, 0}, 1}, {{1, 1}, 2}, {{3, 0}, 1}}));
}

TEST(LGeneration, Examples) {
  const RootSystem a3({{'A', 3}});
  const NodeSet levi{0};
  EXPECT_TRUE(is_L_generated(a3, levi, a3.fundamental_weight(1), {a3.fundamental_weight(0), a3.fundamental_weight(2)}));
  EXPECT_FALSE(is_L_generated(a3, levi, a3.fundamental_weight(2), {a3.fundamental_weight(0), a3.fundamental_weight(1)}));
  for (int i = 0; i < 3; ++i) {
    std::vector<Weight> pool;
    for (int j = 0; j < 3; ++j) {
      if (j != i) pool.push_back(a3.fundamental_weight(j));
    }
    EXPECT_FALSE(is_L_generated(a3, NodeSet{}, a3.fundamental_weight(i), pool));
  }
}

TEST(LGeneration, RejectsUnboundedSearches) {
  EXPECT_THROW(is_L_generated(RootSystem({{'A', 1}, {'A', 1}}), NodeSet{0}, Weight::zero(2), {}), InputError);
  const RootSystem a2({{'A', 2}});
  EXPECT_THROW(is_L_generated(a2, a2.all_nodes(), a2.fundamental_weight(0), {a2.fundamental_weight(1)}), InputError);
}

TEST(LGeneration, MonotoneInPool) {
  for (const auto& c : simple_types(2, 3)) {
    const RootSystem sys({c});
    for (const NodeSet levi : testing::all_subsets(sys)) {
      if (levi == sys.all_nodes()) continue;
      for (int i = 0; i < sys.rank(); ++i) {
        std::vector<Weight> small;
        std::vector<Weight> large;
        for (int j = 0; j < sys.rank(); ++j) {
          if (j == i) continue;
          if (small.empty()) small.push_back(sys.fundamental_weight(j));
          large.push_back(sys.fundamental_weight(j));
        }
        large.push_back(sys.fundamental_weight(i) + sys.fundamental_weight(i));
        const Weight target = sys.fundamental_weight(i);
        if (is_L_generated(sys, levi, target, small)) EXPECT_TRUE(is_L_generated(sys, levi, target, large));
      }
    }
  }
}

}  // namespace
}  // namespace ceorb
