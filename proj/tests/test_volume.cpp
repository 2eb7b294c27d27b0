#include <gtest/gtest.h>

#include <cmath>

#include "polyspace/errors.hpp"
#include "polyspace/verify.hpp"
#include "polyspace/volume.hpp"
#include "support.hpp"

using namespace polyspace;
using oracle::exps;
using oracle::lengths;

TEST(VolumeExact, Examples) {
  EXPECT_EQ(volume_exact(lengths("1,1,1")), Rational(1));
  EXPECT_EQ(volume_exact(lengths("1,1,1,2")), Rational(1));
  EXPECT_EQ(volume_exact(lengths("4,3,11")), Rational(0));
  EXPECT_THROW(volume_exact(lengths("1,1,1,1")), Error);
}

TEST(VolumeExact, MatchesSubsetSumAndIsNonNegative) {
  CaseSampler sampler(51);
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(3, 10));
    const auto a = i % 4 == 0 ? sampler.empty_lengths(m) : sampler.generic_lengths(m);
    if (!is_generic(a)) continue;
    const Rational v = volume_exact(a);
    EXPECT_EQ(v, oracle::volume(a)) << a.to_string();
    EXPECT_GE(v, 0);
    EXPECT_EQ(v == 0, is_empty(a)) << a.to_string();
  }
}

TEST(VolumeExact, ScalesWithDegree) {
  CaseSampler sampler(52);
  for (int i = 0; i < 100; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(3, 9));
    const auto a = sampler.generic_lengths(m);
    const Rational lambda = sampler.small_rational();
    Rational factor = 1;
    for (std::size_t j = 3; j < m; ++j) factor *= lambda;
    EXPECT_EQ(volume_exact(a.scaled(lambda)), factor * volume_exact(a));
  }
}

TEST(VolumeExact, IndependentOfThreadCount) {
  CaseSampler sampler(53);
  for (int i = 0; i < 5; ++i) {
    const auto a = sampler.generic_lengths(static_cast<std::size_t>(sampler.uniform(14, 17)));
    const Rational one = volume_exact(a, 1);
    EXPECT_EQ(volume_exact(a, 3), one);
    EXPECT_EQ(volume_exact(a, 8), one);
  }
}

TEST(VolumeMixedPartial, Examples) {
  EXPECT_EQ(volume_mixed_partial(lengths("4,3,4,3,4"), exps("0,0,0,0,2")), Rational(-3));
  EXPECT_EQ(volume_mixed_partial(lengths("1,1,1,2"), exps("0,0,0,1")), Rational(-1));
  for (std::size_t m = 4; m <= 8; ++m) {
    std::vector<Rational> v(m - 3, make_rational(1, static_cast<long>(m - 2)));
    v.insert(v.end(), {1, 1, 1});
    std::vector<int> k(m - 3, 1);
    k.insert(k.end(), {0, 0, 0});
    EXPECT_EQ(volume_mixed_partial(LengthVector(v), ExponentVector(k)),
              Rational(Integer(1) << static_cast<unsigned>(m - 3)));
  }
}

TEST(VolumeMixedPartial, EqualsPairingOnRandomQueries) {
  CaseSampler sampler(54);
  for (int i = 0; i < 60; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(3, 8));
    const PairingQuery q{sampler.generic_lengths(m), sampler.multidegree(m)};
    EXPECT_EQ(volume_mixed_partial(q.lengths, q.exponents),
              Rational(oracle::explicit_pairing(q.lengths, q.exponents)))
        << reproducer(q);
  }
}

TEST(VolumeMixedPartial, ValidatesQuery) {
  EXPECT_THROW(volume_mixed_partial(lengths("1,1,1,2"), exps("0,0,1,1")), Error);
  EXPECT_THROW(volume_mixed_partial(lengths("1,1,1,1"), exps("0,0,0,1")), Error);
}

TEST(WittenSeries, Contract) {
  EXPECT_THROW(volume_witten_numeric(lengths("1/10,1/10,1/10"), 10), Error);
  EXPECT_THROW(volume_witten_numeric(lengths("1/10,1/10,1/10,1"), 10), Error);
  EXPECT_THROW(volume_witten_numeric(lengths("1/10,1/10,1/10,2/10"), 0), Error);

  const auto a = lengths("1/10,2/10,3/10,1/7,1/9");
  const auto one = volume_witten_numeric(a, 1);
  const auto two = volume_witten_numeric(a, 2);
  const double pi = std::acos(-1.0);
  double second = 4.0 / std::pow(pi, 3) / 8.0;
  for (const auto& x : a.entries()) second *= std::sin(2.0 * pi * x.get_d());
  EXPECT_NEAR(two.value - one.value, second, 1e-15);
  EXPECT_LE(std::abs(two.value - one.value), std::abs(second) + 1e-15);
  EXPECT_LT(two.tail_bound, one.tail_bound);
}

TEST(WittenSeries, EmptySpaceIsNearZero) {
  const auto series = volume_witten_numeric(lengths("1/20,1/20,1/20,1/2"), 100000);
  EXPECT_LE(std::abs(series.value), series.tail_bound + 1e-12);
}

// The series as implemented equals 2^{-(m-3)} times the exact volume for
// small lengths; the factor is the normalization gap between the two
// formulas.
TEST(WittenSeries, EqualsExactVolumeTimesPowerOfHalf) {
  CaseSampler sampler(55);
  for (std::size_t m = 4; m <= 7; ++m) {
    for (int i = 0; i < 4; ++i) {
      auto a = sampler.generic_lengths(m);
      a = a.scaled(make_rational(1, 2) / a.total());
      const auto series = volume_witten_numeric(a, 20000);
      const double expected = std::ldexp(volume_exact(a).get_d(), -static_cast<int>(m - 3));
      EXPECT_NEAR(series.value, expected, series.tail_bound + 1e-9) << a.to_string();
    }
  }
}
