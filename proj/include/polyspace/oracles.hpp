#pragma once

#include <utility>

#include "polyspace/pairings.hpp"

namespace polyspace {

struct RecursionOptions {
  /// When two merged lengths are equal the last one is raised by
  /// epsilon = epsilon_fraction * radius / m; any value in (0, 1) keeps the
  /// perturbed vector in the same chamber.
  Rational epsilon_fraction{1, 2};
};

/// Splits off the last two edges into alpha^+ and alpha^- until m = 3.
PairingResult pairing_recursive(const PairingQuery& query, unsigned threads = 1,
                                const RecursionOptions& options = {});

/// -1/2 times the signed count over R with S_R < 0.
PairingResult pairing_konno_takakura(const PairingQuery& query,
                                     unsigned threads = 1);

/// Sign sum over all R (m even, factor 1/4) or |R| odd (m odd, factor 1/2).
PairingResult pairing_yoshida(const PairingQuery& query, unsigned threads = 1);

/// rho_{m,2k} for odd m >= 5 and 0 <= 2k <= m - 3.
Rational rho(int m, int k);

/// Closed form for the equilateral space M_m (m odd) with multidegree d.
Integer equilateral_pairing(int m, const ExponentVector& degrees);

/// Pairing of sigma_1^k c_m^{m-3-k} over the symmetric quotient of M_m, for
/// odd m and even k, via the double sum over odd-part counts.
Integer sigma1_pairing(int m, int k);

/// Number of compositions of `total` into `parts` nonnegative parts having
/// exactly `odd` odd parts, each weighted by its multinomial coefficient.
Integer weighted_compositions_with_odd_parts(int total, int parts, int odd);

/// Both sides of
///   sum_{j=0}^{b} (-1)^j C(a, j) C(a+1, b-j) = (-1)^{(b-1)/2} C(a, (b-1)/2)
/// for odd b.
std::pair<Integer, Integer> alternating_binomial_identity(int a, int b);

/// Both sides of the binomial identity that turns the triangular-set sum for
/// M_m into rho_{m,2k}: lhs is the normalized alternating sum, rhs is
/// C((m-3)/2, k).
std::pair<Rational, Rational> rho_binomial_identity(int m, int k);

}  // namespace polyspace
