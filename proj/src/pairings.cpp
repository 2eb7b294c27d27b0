#include "polyspace/pairings.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/oracles.hpp"
#include "polyspace/triangular.hpp"

namespace polyspace {

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::Explicit: return "explicit";
    case Engine::Recursion: return "recursion";
    case Engine::KonnoTakakura: return "kt";
    case Engine::Yoshida: return "yoshida";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  for (auto e : kAllEngines) {
    if (engine_name(e) == name) return e;
  }
  return std::nullopt;
}

void validate_query(const PairingQuery& query, unsigned threads) {
  const std::size_t m = query.lengths.size();
  if (query.exponents.size() != m) {
    throw Error(ErrorKind::InvalidArgument,
                "exponent vector has " + std::to_string(query.exponents.size()) +
                    " entries but there are " + std::to_string(m) + " lengths");
  }
  const int expected = static_cast<int>(m) - 3;
  if (query.exponents.degree() != expected) {
    throw Error(ErrorKind::DegreeMismatch,
                "total degree " + std::to_string(query.exponents.degree()) +
                    " does not equal m - 3 = " + std::to_string(expected));
  }
  require_generic(query.lengths, threads);
}

NormalizedQuery normalize(const PairingQuery& query) {
  std::vector<std::size_t> order(query.exponents.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return query.exponents[i] == 0; });
  return {PairingQuery{query.lengths.permuted(order), query.exponents.permuted(order)},
          std::move(order)};
}

PairingResult pairing_explicit(const PairingQuery& query, unsigned threads) {
  validate_query(query, threads);
  auto [normalized, permutation] = normalize(query);
  const auto& lengths = normalized.lengths;
  const auto& k = normalized.exponents;
  const std::size_t m = lengths.size();

  PairingResult result{Integer(0), Engine::Explicit, std::move(permutation)};
  if (m == 3) {
    result.value = is_empty(lengths) ? 0 : 1;
    return result;
  }

  std::uint64_t odd = 0;
  for (std::size_t i = 2; i < m; ++i) {
    if (k[i] % 2 != 0) odd |= std::uint64_t{1} << (i - 2);
  }
  const std::uint64_t full = (std::uint64_t{1} << (m - 2)) - 1;

  long total = 0;
  for (const auto& member : enumerate_triangular(lengths, threads).members) {
    const std::uint64_t j = member.mask.bits;
    const int exponent = std::popcount(~j & full & odd) + static_cast<int>(m) - std::popcount(j);
    total += exponent % 2 == 0 ? 1 : -1;
  }
  result.value = total;
  return result;
}

PairingResult compute_pairing(const PairingQuery& query, Engine engine, unsigned threads) {
  switch (engine) {
    case Engine::Explicit: return pairing_explicit(query, threads);
    case Engine::Recursion: return pairing_recursive(query, threads);
    case Engine::KonnoTakakura: return pairing_konno_takakura(query, threads);
    case Engine::Yoshida: return pairing_yoshida(query, threads);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown engine");
}

namespace {

void compositions(int remaining, std::size_t slot, std::vector<int>& current,
                  std::vector<ExponentVector>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[slot] = v;
    compositions(remaining - v, slot + 1, current, out);
  }
}

}  // namespace

std::vector<ExponentVector> multidegrees(std::size_t m) {
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "m must be at least 3");
  std::vector<ExponentVector> out;
  std::vector<int> current(m, 0);
  compositions(static_cast<int>(m) - 3, 0, current, out);
  return out;
}

std::map<ExponentVector, Integer> pairing_table(const LengthVector& lengths, unsigned threads) {
  require_generic(lengths, threads);
  const auto degrees = multidegrees(lengths.size());
  std::vector<Integer> values(degrees.size());
  parallel_ranges(degrees.size(), threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
    for (auto i = lo; i < hi; ++i) {
      values[i] = pairing_explicit(PairingQuery{lengths, degrees[i]}, 1).value;
    }
  }, 2);
  std::map<ExponentVector, Integer> table;
  for (std::size_t i = 0; i < degrees.size(); ++i) table.emplace(degrees[i], values[i]);
  return table;
}

}  // namespace polyspace
