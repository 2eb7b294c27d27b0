#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyspace/rational.hpp"

namespace polyspace {

/// Side lengths (alpha_1, ..., alpha_m) of a closed polygon in R^3.
/// Invariants: m >= 3 and every entry strictly positive.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> entries);

  /// Comma-separated rational literals, e.g. "4,3,4,3,4" or "1/2,1/2,1,1,1".
  static LengthVector parse(std::string_view csv);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  Rational total() const;
  LengthVector scaled(const Rational& lambda) const;
  /// Entry i of the result is entry order[i] of this vector.
  LengthVector permuted(std::span<const std::size_t> order) const;

  std::string to_string() const;

  friend bool operator==(const LengthVector&, const LengthVector&) = default;

 private:
  std::vector<Rational> entries_;
};

/// Multidegree (k_1, ..., k_m) of a monomial c_1^{k_1} ... c_m^{k_m}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries);

  static ExponentVector parse(std::string_view csv);

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }
  int degree() const noexcept;

  ExponentVector permuted(std::span<const std::size_t> order) const;
  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Signs epsilon_i = +1 or -1, one per edge.
struct SignVector {
  std::vector<int> entries;

  std::string to_string() const;
};

struct ChamberData {
  /// min over all sign vectors of |sum_i epsilon_i alpha_i|.
  Rational radius;
  bool empty = false;
  /// A sign vector attaining the radius (smallest mask in canonical order).
  SignVector witness;
};

/// Worker count used when a caller passes 0 for threads: the
/// POLYSPACE_THREADS environment variable if set, else hardware concurrency.
unsigned default_threads();

ChamberData chamber_data(const LengthVector& lengths, unsigned threads = 1);
bool is_generic(const LengthVector& lengths, unsigned threads = 1);

/// Throws Error{NonGeneric} naming a vanishing sign vector.
void require_generic(const LengthVector& lengths, unsigned threads = 1);

/// The polygon cannot close: some alpha_i exceeds the sum of the others.
bool is_empty(const LengthVector& lengths);

bool triple_ok(const Rational& a, const Rational& b, const Rational& c);

}  // namespace polyspace
