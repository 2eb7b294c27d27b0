#include "polyspace/volume.hpp"

#include <cmath>
#include <numbers>

#include "polyspace/combinatorics.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/pairings.hpp"
#include "polyspace/triangular.hpp"

namespace polyspace {

namespace {

// sum of sgn(S_R) S_R^{m-3} in scaled units, over all R (with (-1)^{|R|})
// for even m, over |R| odd for odd m.
template <class Int>
Integer signed_power_sum(std::span<const Int> weights, const LengthVector& lengths,
                         unsigned threads) {
  const std::size_t m = weights.size();
  const unsigned long power = m - 3;
  const bool even_m = m % 2 == 0;
  const std::uint64_t total = std::uint64_t{1} << m;

  std::vector<Integer> partial(std::max(1U, threads), 0);
  std::vector<std::uint64_t> zero_mask(std::max(1U, threads), total);
  parallel_ranges(total, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    Integer acc = 0;
    Integer term;
    std::uint64_t zero = total;
    gray_walk<Int>(weights, Int(0), lo, hi, [&](std::uint64_t mask, const Int& s) {
      if (s == 0) {
        zero = std::min(zero, mask);
        return;
      }
      const int size = std::popcount(mask);
      if (!even_m && size % 2 == 0) return;
      term = s;
      mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), power);
      bool negate = s < 0;  // sgn(S) S^{m-3}
      if (even_m && size % 2 != 0) negate = !negate;
      if (negate) {
        acc -= term;
      } else {
        acc += term;
      }
    });
    partial[chunk] = std::move(acc);
    zero_mask[chunk] = zero;
  });
  const auto zero = *std::min_element(zero_mask.begin(), zero_mask.end());
  if (zero != total) {
    throw Error(ErrorKind::NonGeneric, "length vector (" + lengths.to_string() +
                                           ") is not generic: S_R = 0 for R = " +
                                           format_subset(zero, 1));
  }
  Integer sum = 0;
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

Rational volume_exact(const LengthVector& lengths, unsigned threads) {
  const std::size_t m = lengths.size();
  require_mask_capacity(m, "volume_exact");
  const auto scaled = ScaledLengths::from(lengths.entries());
  Integer sum;
  if (scaled.fits_machine_word()) {
    const auto w = scaled.machine_weights();
    sum = signed_power_sum<std::int64_t>(std::span<const std::int64_t>(w), lengths, threads);
  } else {
    sum = signed_power_sum<Integer>(std::span<const Integer>(scaled.weights), lengths, threads);
  }
  Integer scale_power;
  mpz_pow_ui(scale_power.get_mpz_t(), scaled.scale.get_mpz_t(), m - 3);
  const Integer denominator = Integer(m % 2 == 0 ? 4 : 2) * factorial(m - 3) * scale_power;
  return make_rational(-sum, denominator);
}

SeriesValue volume_witten_numeric(const LengthVector& lengths, long terms) {
  const std::size_t m = lengths.size();
  if (m < 4) throw Error(ErrorKind::Range, "the sine series needs m >= 4");
  if (terms < 1) throw Error(ErrorKind::Range, "the sine series needs at least one term");
  std::vector<double> alpha;
  for (const auto& a : lengths.entries()) {
    if (a >= 1) {
      throw Error(ErrorKind::Range,
                  "the sine series needs every length in (0, 1), got " + format_rational(a));
    }
    alpha.push_back(a.get_d());
  }

  const double s = static_cast<double>(m - 2);
  const double pi = std::numbers::pi;
  // Neumaier compensated summation.
  double sum = 0.0;
  double compensation = 0.0;
  for (long k = 1; k <= terms; ++k) {
    double term = 1.0 / std::pow(static_cast<double>(k), s);
    for (double a : alpha) term *= std::sin(static_cast<double>(k) * pi * a);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  const double prefactor = 4.0 / std::pow(pi, s);
  SeriesValue out;
  out.value = prefactor * (sum + compensation);
  out.tail_bound = prefactor * std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
  return out;
}

Rational volume_mixed_partial(const LengthVector& lengths, const ExponentVector& exponents,
                              unsigned threads) {
  validate_query(PairingQuery{lengths, exponents}, threads);
  const std::size_t m = lengths.size();
  const Rational radius = chamber_data(lengths, threads).radius;
  const Rational step = radius / Rational(static_cast<long>(2 * m * (m - 3) + 2));

  // Stencil points j with 0 <= j_i <= k_i, enumerated as a mixed-radix index.
  std::uint64_t points = 1;
  for (int k : exponents.entries()) points *= static_cast<std::uint64_t>(k + 1);

  std::vector<Rational> partial(std::max(1U, threads), 0);
  parallel_ranges(points, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    Rational acc = 0;
    for (std::uint64_t index = lo; index < hi; ++index) {
      std::uint64_t rest = index;
      Integer coefficient = 1;
      std::vector<Rational> shifted(lengths.entries().begin(), lengths.entries().end());
      for (std::size_t i = 0; i < m; ++i) {
        const int k = exponents[i];
        const int j = static_cast<int>(rest % static_cast<std::uint64_t>(k + 1));
        rest /= static_cast<std::uint64_t>(k + 1);
        coefficient *= binomial(k, j);
        if ((k - j) % 2 != 0) coefficient = -coefficient;
        shifted[i] += step * j;
      }
      acc += Rational(coefficient) * volume_exact(LengthVector(std::move(shifted)), 1);
    }
    partial[chunk] = acc;
  }, 2);

  Rational difference = 0;
  for (const auto& p : partial) difference += p;
  Rational step_power = 1;
  for (std::size_t i = 3; i < m; ++i) step_power *= step;
  return difference / step_power;
}

}  // namespace polyspace
