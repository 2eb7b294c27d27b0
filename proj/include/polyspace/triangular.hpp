#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyspace/lengths.hpp"

namespace polyspace {

/// Subset J of I = {3, ..., m}: bit (i - 3) set iff i is in J.
struct SubsetMask {
  std::uint64_t bits = 0;

  bool contains(std::size_t index) const noexcept {
    return index >= 3 && ((bits >> (index - 3)) & 1U);
  }
  int size() const noexcept { return std::popcount(bits); }

  friend bool operator==(SubsetMask, SubsetMask) = default;
  friend auto operator<=>(SubsetMask, SubsetMask) = default;
};

/// Braced, sorted, 1-based index list, e.g. "{3,5}"; the empty set is "{}".
/// `first_index` is the 1-based index of bit 0.
std::string format_subset(std::uint64_t bits, std::size_t first_index);
inline std::string format_subset(SubsetMask mask) {
  return format_subset(mask.bits, 3);
}

struct TriangularMember {
  SubsetMask mask;
  /// l_J = sum_{i >= 3} +-alpha_i, + on J.
  Rational signed_sum;
};

/// The triangular sets of a length vector, in strictly increasing mask order.
struct TriangularFamily {
  std::size_t m = 0;
  std::vector<TriangularMember> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(SubsetMask mask) const;
  std::string to_string() const;
};

Rational signed_sum(const LengthVector& lengths, SubsetMask subset);

/// l_J > 0 and (alpha_1, alpha_2, l_J) satisfy the non-strict triangle
/// inequalities.
bool is_triangular(const LengthVector& lengths, SubsetMask subset);

/// Throws Error{Capacity} when m - 2 exceeds the mask width. Output is
/// identical for every thread count.
TriangularFamily enumerate_triangular(const LengthVector& lengths,
                                      unsigned threads = 1);

/// Subset R of {1, ..., m}: bit (i - 1) set iff i is in R.
struct EdgeSubset {
  std::uint64_t bits = 0;

  int size() const noexcept { return std::popcount(bits); }
  std::string to_string() const { return format_subset(bits, 1); }
};

/// Streams every R with S_R = sum_{R} alpha_i - sum_{not R} alpha_i < 0 in
/// increasing mask order. Throws Error{NonGeneric} as soon as some S_R = 0.
void enumerate_negative_subsets(const LengthVector& lengths,
                                const std::function<void(EdgeSubset)>& visit);

/// |S(alpha)|, computed in parallel chunks.
std::uint64_t count_negative_subsets(const LengthVector& lengths,
                                     unsigned threads = 1);

}  // namespace polyspace
