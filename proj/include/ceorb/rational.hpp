// Copyright 2026 The ceorb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ceorb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<std::int64_t>;
using BigVec = std::vector<BigInt>;

/// Thrown for malformed or inadmissible caller input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt numerator_of(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline BigInt denominator_of(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::int64_t to_int64(const BigInt& n) {
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN)) {
    throw InvariantError("integer does not fit in 64 bits: " + n.str());
  }
  return static_cast<std::int64_t>(n);
}

inline std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw InvariantError("expected an integer, got " + r.str());
  return to_int64(numerator_of(r));
}

inline RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

inline IntVec to_integral(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

inline bool is_integral(const RatVec& v) {
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
  }
  return true;
}

/// Smallest positive integer multiple of `v` with coprime entries.
/// The zero vector maps to the zero vector.
inline BigVec primitive(const RatVec& v) {
  BigInt l = 1;
  for (const auto& x : v) {
    BigInt d = denominator_of(x);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  BigVec out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt n = numerator_of(x) * (l / denominator_of(x));
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(n));
    out.push_back(std::move(n));
  }
  if (g > 1) {
    for (auto& n : out) n /= g;
  }
  return out;
}

inline void make_primitive(BigVec& v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

inline RatVec to_rational(const BigVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace ceorb
