#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "polyspace/lengths.hpp"

namespace polyspace {

enum class Engine { Explicit, Recursion, KonnoTakakura, Yoshida };

inline constexpr std::array<Engine, 4> kAllEngines = {
    Engine::Explicit, Engine::Recursion, Engine::KonnoTakakura, Engine::Yoshida};

std::string_view engine_name(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

/// Integrand c_1^{k_1} ... c_m^{k_m} over M(alpha).
struct PairingQuery {
  LengthVector lengths;
  ExponentVector exponents;
};

/// Throws DegreeMismatch (or InvalidArgument on a length mismatch) and
/// NonGeneric; every engine calls this first.
void validate_query(const PairingQuery& query, unsigned threads = 1);

struct PairingResult {
  Integer value;
  Engine engine = Engine::Explicit;
  /// Entry i of the normalized query came from entry permutation[i].
  std::vector<std::size_t> permutation;
};

struct NormalizedQuery {
  PairingQuery query;
  std::vector<std::size_t> permutation;
};

/// Stable reorder putting every zero exponent before every positive one.
NormalizedQuery normalize(const PairingQuery& query);

/// Sum over triangular sets of the normalized query.
PairingResult pairing_explicit(const PairingQuery& query, unsigned threads = 1);

PairingResult compute_pairing(const PairingQuery& query, Engine engine,
                              unsigned threads = 1);

/// All compositions of m - 3 into m parts.
std::vector<ExponentVector> multidegrees(std::size_t m);

/// Explicit-engine pairing of every multidegree, keyed in lexicographic
/// order.
std::map<ExponentVector, Integer> pairing_table(const LengthVector& lengths,
                                                unsigned threads = 1);

}  // namespace polyspace
