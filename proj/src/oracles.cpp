#include "polyspace/oracles.hpp"

#include <algorithm>
#include <bit>

#include "polyspace/combinatorics.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/triangular.hpp"

namespace polyspace {

// ------------------------------------------------------------------ recursion

namespace {

struct Recursion {
  const RecursionOptions& options;
  unsigned threads;

  long operator()(std::vector<Rational> lengths, std::vector<int> k) const {
    const std::size_t m = lengths.size();
    if (m == 3) return is_empty(LengthVector(lengths)) ? 0 : 1;

    // Reorder so the last exponent is positive; sum k = m - 3 >= 1 here.
    std::size_t j = m;
    while (k[j - 1] == 0) --j;
    std::rotate(lengths.begin() + static_cast<long>(j) - 1,
                lengths.begin() + static_cast<long>(j), lengths.end());
    std::rotate(k.begin() + static_cast<long>(j) - 1, k.begin() + static_cast<long>(j), k.end());

    if (lengths[m - 2] == lengths[m - 1]) {
      const Rational radius = chamber_data(LengthVector(lengths), threads).radius;
      lengths[m - 1] += options.epsilon_fraction * radius / static_cast<long>(m);
    }

    const int k_prev = k[m - 2];
    const int k_last = k[m - 1];
    const int direction = sgn(lengths[m - 2] - lengths[m - 1]);

    std::vector<int> merged_k(k.begin(), k.end() - 1);
    merged_k[m - 2] = k_prev + k_last - 1;

    std::vector<Rational> plus(lengths.begin(), lengths.end() - 1);
    plus[m - 2] = lengths[m - 2] + lengths[m - 1];
    std::vector<Rational> minus(lengths.begin(), lengths.end() - 1);
    minus[m - 2] = abs(lengths[m - 2] - lengths[m - 1]);

    int weight = (k_last - 1) % 2 == 0 ? 1 : -1;
    if (direction < 0 && (k_prev + k_last) % 2 != 0) weight = -weight;

    return (*this)(std::move(plus), merged_k) + weight * (*this)(std::move(minus), merged_k);
  }
};

}  // namespace

PairingResult pairing_recursive(const PairingQuery& query, unsigned threads,
                                const RecursionOptions& options) {
  validate_query(query, threads);
  if (options.epsilon_fraction <= 0 || options.epsilon_fraction >= 1) {
    throw Error(ErrorKind::Range, "epsilon_fraction must lie in (0, 1)");
  }
  std::vector<Rational> lengths(query.lengths.entries().begin(), query.lengths.entries().end());
  std::vector<int> k(query.exponents.entries().begin(), query.exponents.entries().end());
  const long value = Recursion{options, threads}(std::move(lengths), std::move(k));
  return {Integer(value), Engine::Recursion, {}};
}

// --------------------------------------------------------- subset-sign sums

namespace {

/// Sum over all R of term(mask, sgn S_R); S_R = 0 raises NonGeneric.
template <class Int, class Term>
long sum_over_subsets(std::span<const Int> weights, const LengthVector& lengths,
                      unsigned threads, const Term& term) {
  const std::uint64_t total = std::uint64_t{1} << weights.size();
  std::vector<long> partial(std::max(1U, threads), 0);
  std::vector<std::uint64_t> zero_mask(std::max(1U, threads), total);
  parallel_ranges(total, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    long acc = 0;
    std::uint64_t zero = total;
    gray_walk<Int>(weights, Int(0), lo, hi, [&](std::uint64_t mask, const Int& s) {
      if (s == 0) {
        zero = std::min(zero, mask);
        return;
      }
      acc += term(mask, s > 0 ? 1 : -1);
    });
    partial[chunk] = acc;
    zero_mask[chunk] = zero;
  });
  const auto zero = *std::min_element(zero_mask.begin(), zero_mask.end());
  if (zero != total) {
    throw Error(ErrorKind::NonGeneric, "length vector (" + lengths.to_string() +
                                           ") is not generic: S_R = 0 for R = " +
                                           format_subset(zero, 1));
  }
  long sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

template <class Term>
long subset_sign_sum(const LengthVector& lengths, unsigned threads, const Term& term) {
  require_mask_capacity(lengths.size(), "subset enumeration");
  const auto scaled = ScaledLengths::from(lengths.entries());
  if (scaled.fits_machine_word()) {
    const auto w = scaled.machine_weights();
    return sum_over_subsets<std::int64_t>(std::span<const std::int64_t>(w), lengths, threads,
                                          term);
  }
  return sum_over_subsets<Integer>(std::span<const Integer>(scaled.weights), lengths, threads,
                                   term);
}

std::uint64_t odd_exponent_mask(const ExponentVector& k) {
  std::uint64_t odd = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] % 2 != 0) odd |= std::uint64_t{1} << i;
  }
  return odd;
}

long divide_exact(long numerator, long divisor, const char* engine) {
  if (numerator % divisor != 0) {
    throw Error(ErrorKind::ParityViolation,
                std::string(engine) + ": signed sum " + std::to_string(numerator) +
                    " is not divisible by " + std::to_string(divisor));
  }
  return numerator / divisor;
}

}  // namespace

PairingResult pairing_konno_takakura(const PairingQuery& query, unsigned threads) {
  validate_query(query, threads);
  const std::uint64_t odd = odd_exponent_mask(query.exponents);
  const long count = subset_sign_sum(query.lengths, threads, [&](std::uint64_t r, int s) -> long {
    if (s > 0) return 0;
    return (std::popcount(r) + std::popcount(r & odd)) % 2 == 0 ? 1 : -1;
  });
  return {Integer(-divide_exact(count, 2, "konno-takakura")), Engine::KonnoTakakura, {}};
}

PairingResult pairing_yoshida(const PairingQuery& query, unsigned threads) {
  validate_query(query, threads);
  const std::size_t m = query.lengths.size();
  const std::uint64_t odd = odd_exponent_mask(query.exponents);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  const bool even_m = m % 2 == 0;
  const long sum = subset_sign_sum(query.lengths, threads, [&](std::uint64_t r, int s) -> long {
    const int size = std::popcount(r);
    if (!even_m && size % 2 == 0) return 0;
    int exponent = 1 + std::popcount(~r & full & odd);
    if (even_m) exponent += size;
    return exponent % 2 == 0 ? s : -s;
  });
  return {Integer(divide_exact(sum, even_m ? 4 : 2, "yoshida")), Engine::Yoshida, {}};
}

// ------------------------------------------------------- equilateral spaces

namespace {

void require_odd_m(int m, const char* what) {
  if (m < 3 || m % 2 == 0) {
    throw Error(ErrorKind::Range, std::string(what) + ": m must be odd and at least 3, got " +
                                      std::to_string(m));
  }
}

}  // namespace

Rational rho(int m, int k) {
  require_odd_m(m, "rho");
  if (k < 0 || 2 * k > m - 3) {
    throw Error(ErrorKind::Range, "rho: need 0 <= 2k <= m - 3, got m = " + std::to_string(m) +
                                      ", k = " + std::to_string(k));
  }
  Rational value = make_rational(binomial((m - 3) / 2, k) * binomial(m - 2, (m - 1) / 2),
                                 binomial(m - 2, 2 * k + 1));
  if (k % 2 != 0) value = -value;
  to_integer_exact(value, "rho");
  return value;
}

Integer equilateral_pairing(int m, const ExponentVector& degrees) {
  if (m % 2 == 0) {
    throw Error(ErrorKind::EvenM, "the equilateral space with m = " + std::to_string(m) +
                                      " edges is not generic");
  }
  require_odd_m(m, "equilateral_pairing");
  if (degrees.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorKind::InvalidArgument, "degree vector must have m entries");
  }
  if (degrees.degree() != m - 3) {
    throw Error(ErrorKind::DegreeMismatch, "total degree " + std::to_string(degrees.degree()) +
                                               " does not equal m - 3 = " +
                                               std::to_string(m - 3));
  }
  int halves = 0;
  for (int d : degrees.entries()) halves += d / 2;
  return to_integer_exact(rho(m, halves), "equilateral_pairing");
}

Integer weighted_compositions_with_odd_parts(int total, int parts, int odd) {
  if (total < 0 || parts < 1 || odd < 0) return 0;
  // table[s][o]: sum over compositions of s into the parts seen so far with
  // o odd parts of s! / prod k_i!.
  std::vector<std::vector<Integer>> table(total + 1, std::vector<Integer>(parts + 1, 0));
  table[0][0] = 1;
  for (int p = 0; p < parts; ++p) {
    std::vector<std::vector<Integer>> next(total + 1, std::vector<Integer>(parts + 1, 0));
    for (int s = 0; s <= total; ++s) {
      for (int o = 0; o <= p; ++o) {
        if (table[s][o] == 0) continue;
        for (int v = 0; s + v <= total; ++v) {
          next[s + v][o + (v % 2)] += table[s][o] * binomial(s + v, v);
        }
      }
    }
    table = std::move(next);
  }
  return odd <= parts ? table[total][odd] : Integer(0);
}

Integer sigma1_pairing(int m, int k) {
  require_odd_m(m, "sigma1_pairing");
  if (k < 0 || k > m - 3 || k % 2 != 0) {
    throw Error(ErrorKind::Range, "sigma1_pairing: k must be even with 0 <= k <= m - 3, got " +
                                      std::to_string(k));
  }
  const int half = (m - 3) / 2;
  Rational inner = 0;
  for (int j = 0; j <= k / 2; ++j) {
    Rational term = make_rational(binomial(half, j) * weighted_compositions_with_odd_parts(k, m, 2 * j),
                                  binomial(m - 2, 2 * j));
    inner += j % 2 == 0 ? term : Rational(-term);
  }
  Rational value = inner * Rational(binomial(m - 2, (m - 1) / 2));
  if (half % 2 != 0) value = -value;
  return to_integer_exact(value, "sigma1_pairing");
}

// ------------------------------------------------------ binomial identities

std::pair<Integer, Integer> alternating_binomial_identity(int a, int b) {
  if (a < 0 || b < 1 || b % 2 == 0) {
    throw Error(ErrorKind::Range, "alternating_binomial_identity: need a >= 0 and odd b >= 1");
  }
  Integer lhs = 0;
  for (int j = 0; j <= b; ++j) {
    const Integer term = binomial(a, j) * binomial(a + 1, b - j);
    if (j % 2 == 0) {
      lhs += term;
    } else {
      lhs -= term;
    }
  }
  Integer rhs = binomial(a, (b - 1) / 2);
  if (((b - 1) / 2) % 2 != 0) rhs = -rhs;
  return {lhs, rhs};
}

std::pair<Rational, Rational> rho_binomial_identity(int m, int k) {
  require_odd_m(m, "rho_binomial_identity");
  if (k < 0 || 2 * k > m - 3) {
    throw Error(ErrorKind::Range, "rho_binomial_identity: need 0 <= 2k <= m - 3");
  }
  Integer sum = 0;
  for (int j = 0; j <= 2 * k + 1; ++j) {
    const Integer term = binomial(2 * k + 1, j) * binomial(m - 2 * k - 3, (m - 3) / 2 - j);
    if ((j + k) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const Rational lhs =
      make_rational(sum * binomial(m - 2, 2 * k + 1), binomial(m - 2, (m - 1) / 2));
  return {lhs, Rational(binomial((m - 3) / 2, k))};
}

}  // namespace polyspace
