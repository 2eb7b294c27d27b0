#include <gtest/gtest.h>

#include "polyspace/combinatorics.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/oracles.hpp"
#include "polyspace/verify.hpp"
#include "support.hpp"

using namespace polyspace;
using oracle::exps;
using oracle::lengths;

namespace {

// Pascal's triangle, independent of the library's multiplicative formula.
Integer pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Integer value_of(Engine engine, const char* a, const char* k) {
  return compute_pairing({lengths(a), exps(k)}, engine).value;
}

}  // namespace

TEST(Recursion, Examples) {
  EXPECT_EQ(value_of(Engine::Recursion, "4,3,4,3,4", "0,0,0,0,2"), -3);
  EXPECT_EQ(value_of(Engine::Recursion, "4,3,4,3,4", "0,0,0,1,1"), 1);
  EXPECT_EQ(value_of(Engine::Recursion, "1,1,1,2", "0,0,0,1"), -1);
}

TEST(KonnoTakakura, Examples) {
  EXPECT_EQ(value_of(Engine::KonnoTakakura, "4,3,4,3,4", "0,0,0,0,2"), -3);
  EXPECT_EQ(value_of(Engine::KonnoTakakura, "1,1,1,2", "0,0,0,1"), -1);
  for (const auto& k : multidegrees(5)) {
    EXPECT_EQ(compute_pairing({lengths("1,9,1,1,1"), k}, Engine::KonnoTakakura).value, 0);
  }
}

TEST(Yoshida, Examples) {
  EXPECT_EQ(value_of(Engine::Yoshida, "4,3,4,3,4", "0,0,0,0,2"), -3);
  EXPECT_EQ(value_of(Engine::Yoshida, "1,1,1,2", "0,0,0,1"), -1);
  for (std::size_t m = 4; m <= 8; ++m) {
    const auto a = oracle::ones_then(m - 1, Rational(static_cast<long>(m - 2)));
    for (const auto& k : multidegrees(m)) {
      EXPECT_EQ(compute_pairing({a, k}, Engine::Yoshida).value, k[m - 1] % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(Engines, AgreeWithDefinitionOnRandomQueries) {
  CaseSampler sampler(41);
  for (int i = 0; i < 300; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(3, 9));
    const PairingQuery q{sampler.generic_lengths(m), sampler.multidegree(m)};
    const Integer expected = oracle::explicit_pairing(q.lengths, q.exponents);
    for (auto engine : kAllEngines) {
      EXPECT_EQ(compute_pairing(q, engine).value, expected)
          << engine_name(engine) << ": " << reproducer(q);
    }
  }
}

TEST(Engines, EmptySpacesGiveZero) {
  CaseSampler sampler(42);
  for (int i = 0; i < 100; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(3, 9));
    const PairingQuery q{sampler.empty_lengths(m), sampler.multidegree(m)};
    for (auto engine : kAllEngines) EXPECT_EQ(compute_pairing(q, engine).value, 0);
  }
}

TEST(Engines, RejectNonGeneric) {
  for (auto engine : kAllEngines) {
    try {
      compute_pairing({lengths("1,1,1,1"), exps("0,0,0,1")}, engine);
      ADD_FAILURE() << engine_name(engine);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonGeneric);
    }
  }
}

TEST(Engines, IndependentOfThreadCount) {
  CaseSampler sampler(43);
  for (int i = 0; i < 6; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(13, 15));
    const PairingQuery q{sampler.generic_lengths(m), sampler.multidegree(m)};
    for (auto engine : {Engine::KonnoTakakura, Engine::Yoshida}) {
      EXPECT_EQ(compute_pairing(q, engine, 5).value, compute_pairing(q, engine, 1).value);
    }
  }
}

TEST(Recursion, PerturbationSizeDoesNotMatter) {
  // Equilateral and near-equilateral vectors force the equal-length
  // perturbation at every level.
  CaseSampler sampler(44);
  for (int m : {5, 7, 9}) {
    const auto a = oracle::uniform(static_cast<std::size_t>(m));
    for (const auto& k : multidegrees(static_cast<std::size_t>(m))) {
      const PairingQuery q{a, k};
      const Integer base = pairing_recursive(q).value;
      for (auto fraction : {make_rational(1, 1000), make_rational(1, 3), make_rational(99, 100)}) {
        EXPECT_EQ(pairing_recursive(q, 1, RecursionOptions{fraction}).value, base);
      }
      EXPECT_EQ(base, oracle::explicit_pairing(a, k));
    }
  }
  EXPECT_THROW(pairing_recursive({lengths("1,1,1,1,1"), exps("0,0,0,1,1")}, 1,
                                 RecursionOptions{Rational(1)}),
               Error);
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(5, 0), Rational(1));
  EXPECT_EQ(rho(5, 1), Rational(-3));
  EXPECT_EQ(rho(7, 2), Rational(10));
  EXPECT_EQ(rho(3, 0), Rational(1));
}

TEST(Rho, RangeErrors) {
  EXPECT_THROW(rho(5, 2), Error);
  EXPECT_THROW(rho(5, -1), Error);
  EXPECT_THROW(rho(6, 0), Error);
  EXPECT_THROW(rho(1, 0), Error);
}

TEST(EquilateralPairing, Examples) {
  EXPECT_EQ(equilateral_pairing(5, exps("0,0,0,0,2")), -3);
  EXPECT_EQ(equilateral_pairing(5, exps("0,0,0,1,1")), 1);
  EXPECT_EQ(equilateral_pairing(7, exps("0,0,0,0,0,0,4")), 10);
}

TEST(EquilateralPairing, Errors) {
  auto kind_of = [](int m, const char* d) {
    try {
      equilateral_pairing(m, exps(d));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  EXPECT_EQ(kind_of(4, "0,0,0,1"), ErrorKind::EvenM);
  EXPECT_EQ(kind_of(5, "0,0,0,0,1"), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kind_of(5, "0,0,0,2"), ErrorKind::InvalidArgument);
}

TEST(EquilateralPairing, MatchesDefinitionAndDependsOnlyOnHalvesAndOdds) {
  for (int m : {3, 5, 7, 9}) {
    const auto a = oracle::uniform(static_cast<std::size_t>(m));
    std::map<std::pair<int, int>, Integer> by_shape;
    for (const auto& d : multidegrees(static_cast<std::size_t>(m))) {
      const Integer value = equilateral_pairing(m, d);
      EXPECT_EQ(value, oracle::explicit_pairing(a, d)) << d.to_string();
      int odd = 0;
      int halves = 0;
      for (int x : d.entries()) {
        odd += x % 2;
        halves += x / 2;
      }
      const auto [it, fresh] = by_shape.emplace(std::make_pair(odd, halves), value);
      if (!fresh) EXPECT_EQ(it->second, value);
    }
  }
}

TEST(Sigma1, Examples) {
  EXPECT_EQ(sigma1_pairing(5, 0), -3);
  EXPECT_EQ(sigma1_pairing(5, 2), 5);
  EXPECT_EQ(sigma1_pairing(7, 0), 10);
  EXPECT_THROW(sigma1_pairing(5, 1), Error);
  EXPECT_THROW(sigma1_pairing(5, 4), Error);
  EXPECT_THROW(sigma1_pairing(6, 0), Error);
}

TEST(Sigma1, MatchesMultinomialExpansion) {
  for (int m : {3, 5, 7, 9}) {
    const auto a = oracle::uniform(static_cast<std::size_t>(m));
    for (int k = 0; k <= m - 3; k += 2) {
      Integer expected = 0;
      for (auto parts : oracle::compositions(k, m)) {
        Integer coefficient = 1;
        for (int i = 2; i <= k; ++i) coefficient *= i;
        for (int p : parts) {
          for (int i = 2; i <= p; ++i) coefficient /= i;
        }
        parts.back() += m - 3 - k;
        expected += coefficient * oracle::explicit_pairing(a, ExponentVector(parts));
      }
      EXPECT_EQ(sigma1_pairing(m, k), expected) << "m=" << m << " k=" << k;
    }
  }
}

TEST(WeightedCompositions, MatchesEnumeration) {
  for (int total = 0; total <= 6; ++total) {
    for (int parts = 1; parts <= 5; ++parts) {
      std::vector<Integer> expected(static_cast<std::size_t>(parts + 1), 0);
      for (const auto& c : oracle::compositions(total, parts)) {
        int odd = 0;
        for (int v : c) odd += v % 2;
        expected[static_cast<std::size_t>(odd)] += multinomial(c);
      }
      for (int odd = 0; odd <= parts; ++odd) {
        EXPECT_EQ(weighted_compositions_with_odd_parts(total, parts, odd),
                  expected[static_cast<std::size_t>(odd)]);
      }
    }
  }
}

TEST(AlternatingBinomialIdentity, Examples) {
  EXPECT_EQ(alternating_binomial_identity(1, 1), std::make_pair(Integer(1), Integer(1)));
  EXPECT_EQ(alternating_binomial_identity(0, 1), std::make_pair(Integer(1), Integer(1)));
  EXPECT_EQ(alternating_binomial_identity(3, 3), std::make_pair(Integer(-3), Integer(-3)));
  EXPECT_THROW(alternating_binomial_identity(3, 2), Error);
}

TEST(AlternatingBinomialIdentity, BothSidesFromPascal) {
  for (int a = 0; a <= 20; ++a) {
    for (int b = 1; b <= 2 * a + 1; b += 2) {
      Integer lhs = 0;
      for (int j = 0; j <= b; ++j) lhs += (j % 2 ? -1 : 1) * pascal(a, j) * pascal(a + 1, b - j);
      const auto [got_lhs, got_rhs] = alternating_binomial_identity(a, b);
      EXPECT_EQ(got_lhs, lhs);
      EXPECT_EQ(got_rhs, (((b - 1) / 2) % 2 ? -1 : 1) * pascal(a, (b - 1) / 2));
      EXPECT_EQ(got_lhs, got_rhs) << "a=" << a << " b=" << b;
    }
  }
}

TEST(RhoBinomialIdentity, Examples) {
  EXPECT_EQ(rho_binomial_identity(5, 0), std::make_pair(Rational(1), Rational(1)));
  EXPECT_EQ(rho_binomial_identity(5, 1), std::make_pair(Rational(1), Rational(1)));
  EXPECT_EQ(rho_binomial_identity(7, 1), std::make_pair(Rational(2), Rational(2)));
}

TEST(RhoBinomialIdentity, HoldsForOddM) {
  for (int m = 5; m <= 21; m += 2) {
    for (int k = 0; 2 * k <= m - 3; ++k) {
      const auto [lhs, rhs] = rho_binomial_identity(m, k);
      EXPECT_EQ(lhs, rhs) << "m=" << m << " k=" << k;
      EXPECT_EQ(rhs, Rational(pascal((m - 3) / 2, k)));
    }
  }
}

TEST(Combinatorics, BinomialAgainstPascal) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -2; k <= n + 2; ++k) EXPECT_EQ(binomial(n, k), pascal(n, k)) << n << " " << k;
  }
  EXPECT_EQ(binomial(-1, 0), 0);
}

TEST(Combinatorics, FactorialAndMultinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  const std::vector<int> parts{2, 1, 1};
  EXPECT_EQ(multinomial(parts), 12);
  const std::vector<int> none;
  EXPECT_EQ(multinomial(none), 1);
}
