#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "polyspace/pairings.hpp"

namespace polyspace {

/// Seeded sampler for random length vectors and multidegrees. Built on
/// mt19937_64 (whose output sequence is fixed by the standard) with its own
/// bounded draws, so a seed reproduces the same cases on every platform.
class CaseSampler {
 public:
  explicit CaseSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// p/q with p in [1, 40], q in [1, 8].
  Rational small_rational();

  /// Rejection-samples small rationals until the vector is generic.
  LengthVector generic_lengths(std::size_t m);

  /// Generic vector with one dominant edge, so M(alpha) is empty.
  LengthVector empty_lengths(std::size_t m);

  /// Distributes m - 3 units over m slots.
  ExponentVector multidegree(std::size_t m);

  std::vector<std::size_t> permutation(std::size_t m);

 private:
  std::mt19937_64 engine_;
};

struct VerifyOptions {
  int min_m = 3;
  int max_m = 8;
  int cases = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct VerifyReport {
  int cases = 0;
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  std::string to_string() const;
};

/// Runs all four engines, the volume derivative identity and the invariant
/// suite (permutation, square exchange, chamber, scaling, empty space) on
/// `cases` random generic queries.
VerifyReport verify_random(const VerifyOptions& options);

struct CorpusEntry {
  LengthVector lengths;
  ExponentVector exponents;
  Integer expected;
  std::string citation;
};

/// Tab-separated lengths, exponents, expected value, citation; '#' starts a
/// comment line.
std::vector<CorpusEntry> load_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus_file(const std::string& path);

VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, unsigned threads = 1);

/// Command line that reproduces a failing query.
std::string reproducer(const PairingQuery& query);

}  // namespace polyspace
