#pragma once
// Brute-force reference implementations used as test oracles. They work
// directly on Rational values, enumerate every subset from scratch and share
// no code with the library's enumeration or scaling machinery.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "polyspace/combinatorics.hpp"
#include "polyspace/lengths.hpp"
#include "polyspace/pairings.hpp"
#include "polyspace/triangular.hpp"

namespace oracle {

using polyspace::ExponentVector;
using polyspace::Integer;
using polyspace::LengthVector;
using polyspace::Rational;

inline LengthVector lengths(const std::string& csv) { return LengthVector::parse(csv); }
inline ExponentVector exps(const std::string& csv) { return ExponentVector::parse(csv); }

inline LengthVector ones_then(std::size_t ones, const Rational& last) {
  std::vector<Rational> v(ones, Rational(1));
  v.push_back(last);
  return LengthVector(std::move(v));
}

inline LengthVector uniform(std::size_t m, const Rational& value = 1) {
  return LengthVector(std::vector<Rational>(m, value));
}

/// sum_{i in R} a_i - sum_{i not in R} a_i, bit i of `r` for edge i + 1.
inline Rational subset_sum(const LengthVector& a, std::uint64_t r) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += ((r >> i) & 1U) ? a[i] : Rational(-a[i]);
  return s;
}

inline bool generic(const LengthVector& a) {
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << a.size()); ++r) {
    if (subset_sum(a, r) == 0) return false;
  }
  return true;
}

inline Rational radius(const LengthVector& a) {
  Rational best = -1;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << a.size()); ++r) {
    Rational s = subset_sum(a, r);
    if (s < 0) s = -s;
    if (best < 0 || s < best) best = s;
  }
  return best;
}

/// l_J over edges 3..m; bit j of `mask` for edge j + 3.
inline Rational l_of(const LengthVector& a, std::uint64_t mask) {
  Rational s = 0;
  for (std::size_t i = 2; i < a.size(); ++i) s += ((mask >> (i - 2)) & 1U) ? a[i] : Rational(-a[i]);
  return s;
}

inline bool triangular(const LengthVector& a, std::uint64_t mask) {
  const Rational l = l_of(a, mask);
  return l > 0 && a[0] <= a[1] + l && a[1] <= a[0] + l && l <= a[0] + a[1];
}

inline std::vector<std::uint64_t> triangular_family(const LengthVector& a) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (a.size() - 2)); ++mask) {
    if (triangular(a, mask)) out.push_back(mask);
  }
  return out;
}

/// Sum over triangular J of (-1)^{sum_{I \ J} k_i + m - |J|} after moving
/// zero exponents to the front, evaluated from the definition.
inline Integer explicit_pairing(const LengthVector& a, const ExponentVector& k) {
  const std::size_t m = a.size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < m; ++i) {
    if (k[i] == 0) order.push_back(i);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (k[i] != 0) order.push_back(i);
  }
  const LengthVector b = a.permuted(order);
  const ExponentVector q = k.permuted(order);
  if (m == 3) return polyspace::is_empty(b) ? 0 : 1;
  Integer total = 0;
  for (std::uint64_t mask : triangular_family(b)) {
    long exponent = static_cast<long>(m);
    for (std::size_t i = 2; i < m; ++i) {
      if ((mask >> (i - 2)) & 1U) {
        --exponent;
      } else {
        exponent += q[i];
      }
    }
    total += (exponent % 2 == 0) ? 1 : -1;
  }
  return total;
}

/// Exact volume from the signed power sum over subsets, in Rational
/// arithmetic.
inline Rational volume(const LengthVector& a) {
  const std::size_t m = a.size();
  Rational sum = 0;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << m); ++r) {
    const int size = __builtin_popcountll(r);
    if (m % 2 == 1 && size % 2 == 0) continue;
    const Rational s = subset_sum(a, r);
    Rational power = 1;
    for (std::size_t i = 3; i < m; ++i) power *= s;
    Rational term = s > 0 ? power : Rational(-power);
    if (m % 2 == 0 && size % 2 == 1) term = -term;
    sum += term;
  }
  Integer fact = 1;
  for (std::size_t i = 2; i + 3 <= m; ++i) fact *= static_cast<long>(i);
  return -sum / Rational(Integer(m % 2 == 0 ? 4 : 2) * fact);
}

/// Compositions of `total` into `parts` nonnegative parts.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == parts - 1) {
      current[static_cast<std::size_t>(slot)] = left;
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      current[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, left - v);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

}  // namespace oracle
