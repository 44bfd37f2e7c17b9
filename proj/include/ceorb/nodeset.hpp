// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ceorb {

/// Subset of Dynkin diagram nodes, stored as a bitmask. Nodes are 0-based.
class NodeSet {
 public:
  static constexpr int kMaxNodes = 64;

  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int n : nodes) insert(n);
  }

  static NodeSet range(int first, int count) {
    NodeSet s;
    for (int i = 0; i < count; ++i) s.insert(first + i);
    return s;
  }
  static NodeSet all(int n) { return range(0, n); }
  static NodeSet from(const std::vector<int>& nodes) {
    NodeSet s;
    for (int n : nodes) s.insert(n);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int n) const { return ((bits_ >> n) & 1U) != 0; }
  void insert(int n) {
    if (n < 0 || n >= kMaxNodes) throw std::out_of_range("node index out of range");
    bits_ |= std::uint64_t{1} << n;
  }
  void erase(int n) { bits_ &= ~(std::uint64_t{1} << n); }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  std::vector<int> nodes() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  int min_node() const { return empty() ? -1 : std::countr_zero(bits_); }

  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(NodeSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const NodeSet&) const = default;

  /// 1-based, comma separated ("1,3"); "{}" for the empty set.
  std::string to_string() const {
    if (empty()) return "{}";
    std::string s;
    for (int n : nodes()) {
      if (!s.empty()) s += ',';
      s += std::to_string(n + 1);
    }
    return s;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order: lexicographic on the sorted member list.
inline bool canonical_less(NodeSet a, NodeSet b) {
  const auto x = a.nodes();
  const auto y = b.nodes();
  return x < y;
}

}  // namespace ceorb
