// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

// Cartan data of (semi)simple root systems in Bourbaki numbering.
//
// Conventions used throughout the library:
//   cartan()[i][j] = <alpha_j^vee, alpha_i>, so row i holds the fundamental
//   coordinates of alpha_i.
//   Weights are stored in fundamental-weight coordinates unless tagged
//   otherwise; roots in simple-root coordinates.
//   The invariant form is normalized so that short roots of every component
//   have squared length 2.

#pragma once

#include "ceorb/linalg.hpp"
#include "ceorb/nodeset.hpp"
#include "ceorb/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ceorb {

enum class Basis { fundamental, simple_root, fundamental_coweight, simple_coroot };

inline bool is_coweight_basis(Basis b) {
  return b == Basis::fundamental_coweight || b == Basis::simple_coroot;
}

/// Exact rational vector tagged with the basis it is expressed in.
struct Weight {
  RatVec coords;
  Basis basis = Basis::fundamental;

  static Weight zero(std::size_t n, Basis b = Basis::fundamental) {
    return {RatVec(n, Rational(0)), b};
  }
  static Weight from_ints(const IntVec& v, Basis b = Basis::fundamental) {
    return {to_rational(v), b};
  }

  std::size_t size() const { return coords.size(); }

  Weight& operator+=(const Weight& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) {
    for (auto& x : a.coords) x *= c;
    return a;
  }
  friend Weight operator-(Weight a) {
    for (auto& x : a.coords) x = -x;
    return a;
  }

  bool operator==(const Weight& o) const { return basis == o.basis && coords == o.coords; }
  /// Lexicographic on coordinates; used for canonical output order.
  bool operator<(const Weight& o) const { return coords < o.coords; }

 private:
  void check_compatible(const Weight& o) const {
    if (o.basis != basis || o.coords.size() != coords.size()) {
      throw InputError("weight arithmetic on mismatched bases or ranks");
    }
  }
};

struct ComponentSpec {
  char type = 'A';
  int rank = 1;
};

struct Component {
  char type = 'A';
  int rank = 1;
  int offset = 0;  // index of the component's first node
  std::string name() const { return std::string(1, type) + std::to_string(rank); }
};

struct Edge {
  int to = 0;
  int multiplicity = 1;  // 1, 2 or 3
};

inline void check_admissible(const ComponentSpec& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.type) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: break;
  }
  if (!ok) {
    throw InputError("inadmissible root system type " + std::string(1, c.type) +
                     std::to_string(n) +
                     " (allowed: A n>=1, B n>=2, C n>=2, D n>=3, E6-E8, F4, G2)");
  }
}

class RootSystem {
 public:
  explicit RootSystem(const std::vector<ComponentSpec>& spec) {
    if (spec.empty()) throw InputError("empty root system specification");
    int offset = 0;
    for (const auto& c : spec) {
      check_admissible(c);
      components_.push_back({c.type, c.rank, offset});
      offset += c.rank;
    }
    rank_ = offset;
    if (rank_ > NodeSet::kMaxNodes) throw InputError("total rank exceeds 64 nodes");
    build_diagram();
    build_cartan();
    build_roots();
  }

  int rank() const { return rank_; }
  std::size_t dim() const { return static_cast<std::size_t>(rank_); }
  const std::vector<Component>& components() const { return components_; }
  bool is_simple() const { return components_.size() == 1; }
  std::string name() const {
    std::string s;
    for (const auto& c : components_) {
      if (!s.empty()) s += 'x';
      s += c.name();
    }
    return s;
  }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const RatMatrix& cartan_inverse() const { return cartan_inv_; }
  /// Gram matrix of the invariant form on fundamental weights.
  const RatMatrix& form() const { return form_; }

  /// Half the squared length of alpha_i (1 for short roots).
  int half_length2(int i) const { return half_len2_[static_cast<std::size_t>(i)]; }
  bool is_long(int i) const {
    const auto& c = components_[static_cast<std::size_t>(component_of(i))];
    int mx = 0;
    for (int k = 0; k < c.rank; ++k) mx = std::max(mx, half_length2(c.offset + k));
    return half_length2(i) == mx;
  }
  bool simply_laced() const {
    return std::all_of(half_len2_.begin(), half_len2_.end(), [](int d) { return d == 1; });
  }

  const std::vector<Edge>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
  bool adjacent(int i, int j) const {
    for (const auto& e : neighbors(i)) {
      if (e.to == j) return true;
    }
    return false;
  }
  int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
  int component_of(int node) const {
    for (std::size_t k = 0; k < components_.size(); ++k) {
      const auto& c = components_[k];
      if (node >= c.offset && node < c.offset + c.rank) return static_cast<int>(k);
    }
    throw InputError("node " + std::to_string(node + 1) + " out of range");
  }
  NodeSet component_nodes(int k) const {
    const auto& c = components_[static_cast<std::size_t>(k)];
    return NodeSet::range(c.offset, c.rank);
  }
  NodeSet all_nodes() const { return NodeSet::all(rank_); }

  /// Positive roots in simple-root coordinates, ordered by height then lexicographically.
  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  /// Matching coroots in simple-coroot coordinates.
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  /// Node support of each positive root.
  const std::vector<NodeSet>& root_supports() const { return supports_; }

  /// Number of positive roots supported inside `nodes`, i.e. |Delta^+_nodes|.
  std::size_t count_positive_roots(NodeSet nodes) const {
    std::size_t n = 0;
    for (const auto& s : supports_) {
      if (s.subset_of(nodes)) ++n;
    }
    return n;
  }
  std::size_t dim_group() const { return 2 * pos_roots_.size() + dim(); }

  /// <beta^vee, lambda> for the k-th positive root and an integral weight.
  std::int64_t coroot_pairing(std::size_t k, const IntVec& lambda) const {
    std::int64_t s = 0;
    const auto& c = pos_coroots_[k];
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * lambda[i];
    return s;
  }
  Rational coroot_pairing(std::size_t k, const RatVec& lambda) const {
    Rational s = 0;
    const auto& c = pos_coroots_[k];
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) s += c[i] * lambda[i];
    }
    return s;
  }

  // Basis changes -----------------------------------------------------------

  Weight to_fundamental(const Weight& w) const {
    check_size(w);
    switch (w.basis) {
      case Basis::fundamental:
      case Basis::simple_coroot:
        return w;
      case Basis::simple_root:
        // alpha_k = sum_i cartan[k][i] omega_i
        return {linalg::vec_mat(w.coords, cartan_rat_), Basis::fundamental};
      case Basis::fundamental_coweight:
        // alpha_i^vee = sum_j cartan[j][i] omega_j^vee
        return {linalg::mat_vec(cartan_inv_, w.coords), Basis::simple_coroot};
    }
    return w;
  }
  Weight to_simple_root(const Weight& w) const {
    check_size(w);
    switch (w.basis) {
      case Basis::simple_root:
      case Basis::fundamental_coweight:
        return w;
      case Basis::fundamental:
        return {linalg::vec_mat(w.coords, cartan_inv_), Basis::simple_root};
      case Basis::simple_coroot:
        return {linalg::mat_vec(cartan_rat_, w.coords), Basis::fundamental_coweight};
    }
    return w;
  }

  Weight fundamental_weight(int i) const {
    Weight w = Weight::zero(dim());
    w.coords[static_cast<std::size_t>(i)] = 1;
    return w;
  }
  /// alpha_i in fundamental coordinates.
  Weight simple_root(int i) const {
    return {cartan_rat_[static_cast<std::size_t>(i)], Basis::fundamental};
  }
  Weight simple_coroot(int i) const {
    Weight w = Weight::zero(dim(), Basis::simple_coroot);
    w.coords[static_cast<std::size_t>(i)] = 1;
    return w;
  }
  Weight fundamental_coweight(int i) const {
    Weight w = Weight::zero(dim(), Basis::fundamental_coweight);
    w.coords[static_cast<std::size_t>(i)] = 1;
    return w;
  }

  /// Invariant form of two weights given in fundamental coordinates.
  Rational inner(const RatVec& a, const RatVec& b) const {
    return linalg::dot(a, linalg::mat_vec(form_, b));
  }

 private:
  void check_size(const Weight& w) const {
    if (w.coords.size() != dim()) throw InputError("weight rank does not match root system");
  }

  void add_edge(int i, int j) {
    edges_.emplace_back(i, j);
  }

  void build_diagram() {
    half_len2_.assign(dim(), 1);
    for (const auto& c : components_) {
      const int o = c.offset;
      const int n = c.rank;
      auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) add_edge(o + i, o + i + 1);
      };
      switch (c.type) {
        case 'A':
          chain(0, n - 1);
          break;
        case 'B':
          chain(0, n - 1);
          for (int i = 0; i < n - 1; ++i) half_len2_[static_cast<std::size_t>(o + i)] = 2;
          break;
        case 'C':
          chain(0, n - 1);
          half_len2_[static_cast<std::size_t>(o + n - 1)] = 2;
          break;
        case 'D':
          chain(0, n - 2);
          add_edge(o + n - 3, o + n - 1);
          break;
        case 'E':
          add_edge(o + 0, o + 2);
          add_edge(o + 1, o + 3);
          chain(2, n - 1);
          break;
        case 'F':
          chain(0, 3);
          half_len2_[static_cast<std::size_t>(o + 0)] = 2;
          half_len2_[static_cast<std::size_t>(o + 1)] = 2;
          break;
        case 'G':
          chain(0, 1);
          half_len2_[static_cast<std::size_t>(o + 1)] = 3;
          break;
        default:
          break;
      }
    }
    adj_.assign(dim(), {});
    for (auto [i, j] : edges_) {
      const int di = half_len2_[static_cast<std::size_t>(i)];
      const int dj = half_len2_[static_cast<std::size_t>(j)];
      const int mult = std::max(di, dj) / std::min(di, dj);
      adj_[static_cast<std::size_t>(i)].push_back({j, mult});
      adj_[static_cast<std::size_t>(j)].push_back({i, mult});
    }
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end(), [](const Edge& x, const Edge& y) { return x.to < y.to; });
    }
  }

  void build_cartan() {
    const std::size_t n = dim();
    // (alpha_i, alpha_j) for adjacent nodes is -max(|alpha_i|^2, |alpha_j|^2)/2.
    std::vector<std::vector<int>> sym(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) sym[i][i] = 2 * half_len2_[i];
    for (auto [i, j] : edges_) {
      const int v = -std::max(half_len2_[static_cast<std::size_t>(i)],
                              half_len2_[static_cast<std::size_t>(j)]);
      sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      sym[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
    sym_ = sym;
    cartan_.assign(n, std::vector<int>(n, 0));
    cartan_rat_.assign(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cartan_[i][j] = 2 * sym[i][j] / sym[j][j];
        cartan_rat_[i][j] = cartan_[i][j];
      }
    }
    cartan_inv_ = linalg::inverse(cartan_rat_);
    // omega_i = sum_k cartan_inv[i][k] alpha_k, (alpha_k, omega_j) = d_k delta_kj.
    form_.assign(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) form_[i][j] = cartan_inv_[i][j] * half_len2_[j];
    }
  }

  void build_roots() {
    const std::size_t n = dim();
    // Closure of the simple roots under simple reflections (simple-root coordinates).
    std::set<IntVec> seen;
    std::deque<IntVec> queue;
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      IntVec r = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t p = 0;  // <alpha_i^vee, r>
        for (std::size_t k = 0; k < n; ++k) p += r[k] * cartan_[k][i];
        if (p == 0) continue;
        IntVec s = r;
        s[i] -= p;
        if (seen.insert(s).second) queue.push_back(s);
      }
    }
    for (const auto& r : seen) {
      if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; })) {
        pos_roots_.push_back(r);
      }
    }
    auto height = [](const IntVec& v) {
      std::int64_t h = 0;
      for (auto x : v) h += x;
      return h;
    };
    std::sort(pos_roots_.begin(), pos_roots_.end(), [&](const IntVec& a, const IntVec& b) {
      const auto ha = height(a);
      const auto hb = height(b);
      return ha != hb ? ha < hb : a < b;
    });
    for (const auto& r : pos_roots_) {
      std::int64_t len2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) len2 += r[i] * r[j] * sym_[i][j];
      }
      IntVec co(n, 0);
      NodeSet support;
      for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t num = 2 * r[i] * half_len2_[i];
        if (num % len2 != 0) throw InvariantError("non-integral coroot");
        co[i] = num / len2;
        if (r[i] != 0) support.insert(static_cast<int>(i));
      }
      pos_coroots_.push_back(std::move(co));
      supports_.push_back(support);
    }
  }

  std::vector<Component> components_;
  int rank_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> half_len2_;
  std::vector<std::vector<Edge>> adj_;
  std::vector<std::vector<int>> sym_;
  std::vector<std::vector<int>> cartan_;
  RatMatrix cartan_rat_;
  RatMatrix cartan_inv_;
  RatMatrix form_;
  std::vector<IntVec> pos_roots_;
  std::vector<IntVec> pos_coroots_;
  std::vector<NodeSet> supports_;
};

inline RootSystem build_root_system(const std::vector<ComponentSpec>& spec) {
  return RootSystem(spec);
}

/// Canonical pairing X_*(T) x X(T) -> Q.
inline Rational pairing(const RootSystem& sys, const Weight& coweight, const Weight& weight) {
  if (!is_coweight_basis(coweight.basis) || is_coweight_basis(weight.basis)) {
    throw InputError("pairing expects a coweight and a weight");
  }
  if (coweight.size() != sys.dim() || weight.size() != sys.dim()) {
    throw InputError("pairing: dimension mismatch");
  }
  const Weight a = sys.to_fundamental(coweight);  // simple-coroot coordinates
  const Weight b = sys.to_fundamental(weight);
  return linalg::dot(a.coords, b.coords);
}

inline bool is_dominant(const RootSystem& sys, const Weight& w) {
  const Weight f = sys.to_fundamental(w);
  return std::all_of(f.coords.begin(), f.coords.end(), [](const Rational& x) { return x >= 0; });
}

/// s_i(w) = w - <alpha_i^vee, w> alpha_i, in fundamental coordinates.
inline RatVec reflect(const RootSystem& sys, const RatVec& w, int i) {
  const Rational p = w[static_cast<std::size_t>(i)];
  if (p == 0) return w;
  RatVec out = w;
  const auto& row = sys.cartan()[static_cast<std::size_t>(i)];
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= p * row[k];
  return out;
}

/// Orbit of `w` under the group generated by the simple reflections in
/// `generators`, in fundamental coordinates, sorted lexicographically.
inline std::vector<Weight> weyl_orbit(const RootSystem& sys, const Weight& w, NodeSet generators) {
  if (!generators.subset_of(sys.all_nodes())) throw InputError("generators outside the diagram");
  const RatVec start = sys.to_fundamental(w).coords;
  std::set<RatVec> seen{start};
  std::deque<RatVec> queue{start};
  const auto gens = generators.nodes();
  while (!queue.empty()) {
    RatVec x = std::move(queue.front());
    queue.pop_front();
    for (int i : gens) {
      RatVec y = reflect(sys, x, i);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back({v, Basis::fundamental});
  return out;
}

/// Row i of the inverse transposed Cartan matrix: the degrees of
/// omega_1..omega_l with respect to the fundamental coweight omega_i^vee.
inline RatVec degree_labels(const RootSystem& sys, int i) {
  if (!sys.is_simple()) throw InputError("degree labels require a simple root system");
  if (i < 0 || i >= sys.rank()) throw InputError("node out of range");
  RatVec row(sys.dim());
  for (std::size_t j = 0; j < sys.dim(); ++j) {
    row[j] = sys.cartan_inverse()[j][static_cast<std::size_t>(i)];
  }
  return row;
}

}  // namespace ceorb
