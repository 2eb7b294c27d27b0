#pragma once

// Subset enumeration machinery shared by the genericity test, the triangular
// family and the 2^m subset sums. Values are walked in Gray-code order so
// each step costs one add or subtract.

#include <bit>
#include <cstdint>
#include <exception>
#include <algorithm>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "polyspace/errors.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

/// Largest subset width representable by a machine-word mask.
inline constexpr unsigned kMaxMaskBits = 62;

/// Lengths rescaled by the lcm of their denominators, so every signed sum
/// is an exact integer multiple of 1/scale.
struct ScaledLengths {
  std::vector<Integer> weights;
  Integer scale;

  static ScaledLengths from(std::span<const Rational> lengths);

  /// True when every signed sum (and twice any weight) fits in int64 with
  /// headroom for comparisons like a + l.
  bool fits_machine_word() const;
  std::vector<std::int64_t> machine_weights() const;

  Rational unscale(const Integer& value) const;
  Rational unscale(std::int64_t value) const;
};

inline std::uint64_t gray_code(std::uint64_t index) noexcept {
  return index ^ (index >> 1);
}

/// Signed sum of `weights` with + on set bits of `mask` and - elsewhere,
/// plus `offset`.
template <class Int>
Int signed_sum_of_mask(std::span<const Int> weights, std::uint64_t mask,
                       const Int& offset) {
  Int acc = offset;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if ((mask >> i) & 1U) {
      acc += weights[i];
    } else {
      acc -= weights[i];
    }
  }
  return acc;
}

/// Visits gray_code(g) for g in [begin, end) together with the signed sum of
/// that mask. The first value is computed from scratch; each later one
/// differs by +-2 w_b where b is the single flipped bit.
template <class Int, class Visitor>
void gray_walk(std::span<const Int> weights, const Int& offset,
               std::uint64_t begin, std::uint64_t end, Visitor&& visit) {
  if (begin >= end) return;
  std::vector<Int> doubled(weights.begin(), weights.end());
  for (auto& w : doubled) w += w;

  std::uint64_t mask = gray_code(begin);
  Int value = signed_sum_of_mask(weights, mask, offset);
  visit(mask, value);
  for (std::uint64_t g = begin + 1; g < end; ++g) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(g));
    mask ^= std::uint64_t{1} << bit;
    if ((mask >> bit) & 1U) {
      value += doubled[bit];
    } else {
      value -= doubled[bit];
    }
    visit(mask, value);
  }
}

/// Splits [0, total) into `threads` contiguous ranges and runs
/// fn(chunk, begin, end) for each, one thread per range. The first exception
/// thrown by any chunk (lowest chunk index) is rethrown after all join.
/// Ranges shorter than `min_parallel` run inline as chunk 0.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned threads, Fn&& fn,
                     std::uint64_t min_parallel = std::uint64_t{1} << 12) {
  if (threads <= 1 || total < min_parallel) {
    fn(0U, std::uint64_t{0}, total);
    return;
  }
  if (threads > total) threads = static_cast<unsigned>(total);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned c = 0; c < threads; ++c) {
    const std::uint64_t lo = total / threads * c + std::min<std::uint64_t>(c, total % threads);
    const std::uint64_t hi = lo + total / threads + (c < total % threads ? 1 : 0);
    pool.emplace_back([&, c, lo, hi] {
      try {
        fn(c, lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline void require_mask_capacity(std::size_t bits, const char* what) {
  if (bits > kMaxMaskBits) {
    throw Error(ErrorKind::Capacity,
                std::string(what) + ": " + std::to_string(bits) +
                    " subset bits exceed the machine-word limit of " +
                    std::to_string(kMaxMaskBits));
  }
}

}  // namespace polyspace
