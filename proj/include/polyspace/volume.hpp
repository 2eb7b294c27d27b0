#pragma once

#include "polyspace/lengths.hpp"

namespace polyspace {

/// Exact symplectic volume of M(alpha) from the signed subset-sum formula.
/// Requires generic alpha.
Rational volume_exact(const LengthVector& lengths, unsigned threads = 1);

struct SeriesValue {
  double value = 0.0;
  /// Upper bound on the magnitude of the omitted tail.
  double tail_bound = 0.0;
};

/// Partial sum through k = terms of the sine series for the volume of the
/// moduli of flat SU(2) connections on the m-punctured sphere. Requires
/// m >= 4 and every alpha_i in (0, 1).
SeriesValue volume_witten_numeric(const LengthVector& lengths, long terms);

/// d^{m-3} Vol / d alpha_1^{k_1} ... d alpha_m^{k_m}, exact: the volume is a
/// polynomial of degree m - 3 on the chamber, so an iterated forward
/// difference with a step that keeps the stencil inside the chamber has no
/// truncation error.
Rational volume_mixed_partial(const LengthVector& lengths,
                              const ExponentVector& exponents,
                              unsigned threads = 1);

}  // namespace polyspace
