// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Finite-dimensional representations of a Levi subgroup L (given by a set
// of simple roots) with weights kept in full fundamental coordinates:
// Weyl dimensions, Freudenthal multiplicities, Klimyk decompositions and
// the L-generation test.

#pragma once

#include "ceorb/nodeset.hpp"
#include "ceorb/rational.hpp"
#include "ceorb/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace ceorb {

struct IsotypicSummand {
  Weight highest_weight;
  std::int64_t multiplicity = 0;
};

using Multiplicities = std::map<IntVec, std::int64_t>;

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("multiplicity overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("multiplicity overflow");
  return r;
}

inline std::vector<std::size_t> levi_roots(const RootSystem& sys, NodeSet levi) {
  std::vector<std::size_t> out;
  const auto& supp = sys.root_supports();
  for (std::size_t k = 0; k < supp.size(); ++k) {
    if (supp[k].subset_of(levi)) out.push_back(k);
  }
  return out;
}

inline void check_levi(const RootSystem& sys, NodeSet levi) {
  if (!levi.subset_of(sys.all_nodes())) throw InputError("levi contains nodes outside the diagram");
}

/// Integral fundamental coordinates of `w`, checked L-dominant.
inline IntVec levi_dominant_coords(const RootSystem& sys, NodeSet levi, const Weight& w) {
  const RatVec f = sys.to_fundamental(w).coords;
  if (!is_integral(f)) throw InputError("highest weight is not integral");
  IntVec v = to_integral(f);
  for (int i : levi.nodes()) {
    if (v[static_cast<std::size_t>(i)] < 0) {
      throw InputError("highest weight is not dominant for the chosen subsystem");
    }
  }
  return v;
}

/// A weight together with its depth below the highest weight, in simple-root
/// coordinates (non-zero only on levi nodes).
struct Located {
  IntVec weight;
  IntVec depth;
};

/// Moves `x` into the dominant chamber of W_L, updating its depth.
inline void to_dominant(const RootSystem& sys, NodeSet levi, Located& x) {
  const auto nodes = levi.nodes();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : nodes) {
      const auto ui = static_cast<std::size_t>(i);
      const std::int64_t p = x.weight[ui];
      if (p >= 0) continue;
      const auto& row = sys.cartan()[ui];
      for (std::size_t k = 0; k < x.weight.size(); ++k) x.weight[k] -= p * row[k];
      x.depth[ui] += p;
      changed = true;
    }
  }
}

inline bool nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

inline std::int64_t total(const IntVec& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

/// Weight diagram of V_L(hw): all weights with their depths, plus the
/// multiplicities of the dominant ones via Freudenthal's recursion.
class WeightDiagram {
 public:
  WeightDiagram(const RootSystem& sys, NodeSet levi, IntVec hw)
      : sys_(&sys), levi_(levi), hw_(std::move(hw)), roots_(levi_roots(sys, levi)) {
    enumerate();
    freudenthal();
  }

  /// Multiplicity of an arbitrary weight (zero if it does not occur).
  std::int64_t multiplicity(const IntVec& weight) const {
    auto it = all_.find(weight);
    if (it == all_.end()) return 0;
    Located x{weight, it->second};
    to_dominant(*sys_, levi_, x);
    auto jt = dominant_mult_.find(x.weight);
    return jt == dominant_mult_.end() ? 0 : jt->second;
  }

  Multiplicities all_multiplicities() const {
    Multiplicities out;
    for (const auto& [w, d] : all_) out.emplace(w, multiplicity(w));
    return out;
  }

  const IntVec& highest_weight() const { return hw_; }

 private:
  bool is_weight(Located x) const {
    if (!nonnegative(x.depth)) return false;
    to_dominant(*sys_, levi_, x);
    return nonnegative(x.depth);
  }

  void enumerate() {
    const std::size_t n = sys_->dim();
    const auto nodes = levi_.nodes();
    Located top{hw_, IntVec(n, 0)};
    all_.emplace(top.weight, top.depth);
    std::deque<Located> queue{top};
    while (!queue.empty()) {
      Located x = std::move(queue.front());
      queue.pop_front();
      for (int i : nodes) {
        const auto ui = static_cast<std::size_t>(i);
        Located y = x;
        const auto& row = sys_->cartan()[ui];
        for (std::size_t k = 0; k < n; ++k) y.weight[k] -= row[k];
        y.depth[ui] += 1;
        if (all_.count(y.weight) != 0 || !is_weight(y)) continue;
        all_.emplace(y.weight, y.depth);
        queue.push_back(std::move(y));
      }
    }
  }

  void freudenthal() {
    const std::size_t n = sys_->dim();
    std::vector<Located> dominant;
    for (const auto& [w, d] : all_) {
      bool dom = true;
      for (int i : levi_.nodes()) dom = dom && w[static_cast<std::size_t>(i)] >= 0;
      if (dom) dominant.push_back({w, d});
    }
    std::sort(dominant.begin(), dominant.end(), [](const Located& a, const Located& b) {
      const auto ta = total(a.depth);
      const auto tb = total(b.depth);
      return ta != tb ? ta < tb : a.weight < b.weight;
    });
    for (const auto& mu : dominant) {
      if (total(mu.depth) == 0) {
        dominant_mult_[mu.weight] = 1;
        continue;
      }
      // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho), rho = sum of levi omega_i.
      std::int64_t denom = 0;
      for (int i : levi_.nodes()) {
        const auto ui = static_cast<std::size_t>(i);
        denom += mu.depth[ui] * sys_->half_length2(i) * (hw_[ui] + mu.weight[ui] + 2);
      }
      std::int64_t num = 0;
      for (std::size_t r : roots_) {
        const auto& beta = sys_->positive_roots()[r];
        std::int64_t len2_half = 0;  // (beta, beta) / 2
        {
          // (beta, beta)/2 = d_i / <beta^vee coefficient ratio>; use any support node.
          for (std::size_t i = 0; i < n; ++i) {
            if (beta[i] != 0) {
              len2_half = beta[i] * sys_->half_length2(static_cast<int>(i)) /
                          sys_->positive_coroots()[r][i];
              break;
            }
          }
        }
        Located nu = mu;
        while (true) {
          for (std::size_t i = 0; i < n; ++i) {
            if (beta[i] == 0) continue;
            nu.depth[i] -= beta[i];
            const auto& row = sys_->cartan()[i];
            for (std::size_t k = 0; k < n; ++k) nu.weight[k] += beta[i] * row[k];
          }
          if (!nonnegative(nu.depth)) break;
          const std::int64_t m = multiplicity_of_known(nu);
          if (m == 0) continue;
          const std::int64_t pair = sys_->coroot_pairing(r, nu.weight) * len2_half;
          num = checked_add(num, checked_mul(m, pair));
        }
      }
      num = checked_mul(num, 2);
      if (denom <= 0 || num % denom != 0) throw InvariantError("Freudenthal recursion is not integral");
      dominant_mult_[mu.weight] = num / denom;
    }
  }

  std::int64_t multiplicity_of_known(Located x) const {
    if (all_.count(x.weight) == 0) return 0;
    to_dominant(*sys_, levi_, x);
    auto it = dominant_mult_.find(x.weight);
    if (it == dominant_mult_.end()) throw InvariantError("Freudenthal order violated");
    return it->second;
  }

  const RootSystem* sys_;
  NodeSet levi_;
  IntVec hw_;
  std::vector<std::size_t> roots_;
  std::map<IntVec, IntVec> all_;  // weight -> depth
  std::map<IntVec, std::int64_t> dominant_mult_;
};

/// Klimyk: V(lambda) (x) V(mu) from the weight diagram of V(mu).
inline std::map<IntVec, std::int64_t> klimyk(const RootSystem& sys, NodeSet levi,
                                             const IntVec& lambda, const WeightDiagram& mu) {
  std::map<IntVec, std::int64_t> out;
  const auto nodes = levi.nodes();
  for (const auto& [nu, m] : mu.all_multiplicities()) {
    // y = lambda + nu + rho, rho = sum of levi fundamental weights.
    IntVec y(lambda.size());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = lambda[k] + nu[k];
    for (int i : nodes) y[static_cast<std::size_t>(i)] += 1;
    int sign = 1;
    bool singular = false;
    bool changed = true;
    while (changed && !singular) {
      changed = false;
      for (int i : nodes) {
        const auto ui = static_cast<std::size_t>(i);
        const std::int64_t p = y[ui];
        if (p == 0) {
          singular = true;
          break;
        }
        if (p > 0) continue;
        const auto& row = sys.cartan()[ui];
        for (std::size_t k = 0; k < y.size(); ++k) y[k] -= p * row[k];
        sign = -sign;
        changed = true;
      }
    }
    if (singular) continue;
    for (int i : nodes) y[static_cast<std::size_t>(i)] -= 1;
    auto& slot = out[y];
    slot = checked_add(slot, sign * m);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw InvariantError("negative Klimyk multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace detail

/// Dimension of the irreducible L-module with highest weight `hw`.
inline BigInt weyl_dim(const RootSystem& sys, NodeSet levi, const Weight& hw) {
  detail::check_levi(sys, levi);
  const IntVec v = detail::levi_dominant_coords(sys, levi, hw);
  Rational prod = 1;
  for (std::size_t r : detail::levi_roots(sys, levi)) {
    const auto& co = sys.positive_coroots()[r];
    std::int64_t top = 0;
    std::int64_t bottom = 0;
    for (std::size_t i = 0; i < co.size(); ++i) {
      top += co[i] * (v[i] + 1);
      bottom += co[i];
    }
    prod *= Rational(top, bottom);
  }
  if (!is_integer(prod)) throw InvariantError("Weyl dimension is not an integer");
  return numerator_of(prod);
}

/// Full weight diagram of V_L(hw), weights in fundamental coordinates.
inline Multiplicities weight_multiplicities(const RootSystem& sys, NodeSet levi, const Weight& hw) {
  detail::check_levi(sys, levi);
  return detail::WeightDiagram(sys, levi, detail::levi_dominant_coords(sys, levi, hw))
      .all_multiplicities();
}

/// Decomposition of V_L(hws[0]) (x) ... (x) V_L(hws[k]), folded left to right.
inline std::vector<IsotypicSummand> tensor_decompose(const RootSystem& sys, NodeSet levi,
                                                     const std::vector<Weight>& hws) {
  detail::check_levi(sys, levi);
  if (hws.empty()) throw InputError("tensor_decompose: empty factor list");
  std::map<IntVec, std::int64_t> acc;
  acc[detail::levi_dominant_coords(sys, levi, hws.front())] = 1;
  for (std::size_t f = 1; f < hws.size(); ++f) {
    const detail::WeightDiagram diag(sys, levi, detail::levi_dominant_coords(sys, levi, hws[f]));
    std::map<IntVec, std::int64_t> next;
    for (const auto& [lam, m] : acc) {
      for (const auto& [hw, k] : detail::klimyk(sys, levi, lam, diag)) {
        auto& slot = next[hw];
        slot = detail::checked_add(slot, detail::checked_mul(m, k));
      }
    }
    acc = std::move(next);
  }
  std::vector<IsotypicSummand> out;
  for (const auto& [hw, m] : acc) out.push_back({Weight::from_ints(hw), m});
  return out;
}

/// Whether V_L(target) occurs in a tensor product of V_L(lambda), lambda from
/// a multiset over `pool`, whose weights sum to target modulo span(levi roots).
inline bool is_L_generated(const RootSystem& sys, NodeSet levi, const Weight& target,
                           const std::vector<Weight>& pool) {
  if (!sys.is_simple()) throw InputError("is_L_generated requires a simple root system");
  detail::check_levi(sys, levi);
  if (levi == sys.all_nodes()) throw InputError("is_L_generated: levi must be a proper subset");
  if (!is_dominant(sys, target)) throw InputError("target weight is not dominant");
  const std::size_t n = sys.dim();
  const NodeSet outer = sys.all_nodes() - levi;

  // Degree vectors: simple-root coordinates on nodes outside levi.
  auto degrees = [&](const Weight& w) {
    const RatVec s = sys.to_simple_root(sys.to_fundamental(w)).coords;
    RatVec d;
    for (int j : outer.nodes()) d.push_back(s[static_cast<std::size_t>(j)]);
    return d;
  };
  const RatVec goal = degrees(target);
  const IntVec target_coords = detail::levi_dominant_coords(sys, sys.all_nodes(), target);

  std::vector<IntVec> items;
  std::vector<RatVec> item_deg;
  for (const auto& w : pool) {
    if (!is_dominant(sys, w)) throw InputError("pool weight is not dominant");
    RatVec d = degrees(w);
    if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; })) continue;
    IntVec c = detail::levi_dominant_coords(sys, sys.all_nodes(), w);
    if (std::find(items.begin(), items.end(), c) != items.end()) continue;
    items.push_back(std::move(c));
    item_deg.push_back(std::move(d));
  }

  std::map<IntVec, detail::WeightDiagram> diagrams;
  auto diagram = [&](const IntVec& hw) -> const detail::WeightDiagram& {
    auto it = diagrams.find(hw);
    if (it == diagrams.end()) it = diagrams.emplace(hw, detail::WeightDiagram(sys, levi, hw)).first;
    return it->second;
  };

  // sigma + rest - target must lie in Z_+ (levi simple roots).
  const RatMatrix& inv = sys.cartan_inverse();
  auto reachable = [&](const IntVec& sigma, const IntVec& rest) {
    RatVec diff(n);
    for (std::size_t k = 0; k < n; ++k) diff[k] = Rational(sigma[k] + rest[k] - target_coords[k]);
    const RatVec s = linalg::vec_mat(diff, inv);
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_integer(s[k]) || s[k] < 0) return false;
    }
    return true;
  };

  auto occurs = [&](const std::vector<int>& counts) {
    std::vector<IntVec> factors;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (int c = 0; c < counts[i]; ++c) factors.push_back(items[i]);
    }
    IntVec rest(n, 0);
    for (const auto& f : factors) {
      for (std::size_t k = 0; k < n; ++k) rest[k] += f[k];
    }
    std::map<IntVec, std::int64_t> acc{{IntVec(n, 0), 1}};
    for (const auto& f : factors) {
      for (std::size_t k = 0; k < n; ++k) rest[k] -= f[k];
      const auto& diag = diagram(f);
      std::map<IntVec, std::int64_t> next;
      for (const auto& [lam, m] : acc) {
        for (const auto& [hw, k] : detail::klimyk(sys, levi, lam, diag)) {
          if (!reachable(hw, rest)) continue;
          auto& slot = next[hw];
          slot = detail::checked_add(slot, detail::checked_mul(m, k));
        }
      }
      acc = std::move(next);
      if (acc.empty()) return false;
    }
    return acc.count(target_coords) != 0;
  };

  std::vector<int> counts(items.size(), 0);
  RatVec sum(goal.size(), Rational(0));
  bool found = false;
  // Depth-first over multisets with coordinatewise degree bound.
  auto search = [&](auto&& self, std::size_t idx) -> void {
    if (found) return;
    if (sum == goal) {
      if (occurs(counts)) found = true;
      return;
    }
    if (idx == items.size()) return;
    self(self, idx + 1);
    int added = 0;
    while (!found) {
      bool fits = true;
      for (std::size_t k = 0; k < sum.size(); ++k) {
        sum[k] += item_deg[idx][k];
        fits = fits && sum[k] <= goal[k];
      }
      ++counts[idx];
      ++added;
      if (!fits) break;
      self(self, idx + 1);
    }
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] -= added * item_deg[idx][k];
    counts[idx] -= added;
  };
  search(search, 0);
  return found;
}

}  // namespace ceorb
