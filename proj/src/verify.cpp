#include "polyspace/verify.hpp"

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "polyspace/errors.hpp"
#include "polyspace/oracles.hpp"
#include "polyspace/volume.hpp"

namespace polyspace {

// ---------------------------------------------------------------- sampler

std::int64_t CaseSampler::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational CaseSampler::small_rational() {
  const long p = static_cast<long>(uniform(1, 40));
  const long q = static_cast<long>(uniform(1, 8));
  return make_rational(p, q);
}

LengthVector CaseSampler::generic_lengths(std::size_t m) {
  while (true) {
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < m; ++i) entries.push_back(small_rational());
    LengthVector lengths(std::move(entries));
    if (is_generic(lengths)) return lengths;
  }
}

LengthVector CaseSampler::empty_lengths(std::size_t m) {
  std::vector<Rational> entries;
  Rational others = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    entries.push_back(small_rational());
    others += entries.back();
  }
  const auto slot = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(m) - 1));
  entries.insert(entries.begin() + static_cast<long>(slot), others + small_rational());
  return LengthVector(std::move(entries));
}

ExponentVector CaseSampler::multidegree(std::size_t m) {
  std::vector<int> k(m, 0);
  for (std::size_t unit = 0; unit + 3 < m; ++unit) {
    ++k[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(m) - 1))];
  }
  return ExponentVector(std::move(k));
}

std::vector<std::size_t> CaseSampler::permutation(std::size_t m) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = m; i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }
  return order;
}

// ----------------------------------------------------------------- report

std::string VerifyReport::to_string() const {
  std::ostringstream out;
  out << cases << " cases, " << checks << " checks, " << failures.size() << " failures";
  for (const auto& f : failures) out << "\n  " << f;
  return out.str();
}

std::string reproducer(const PairingQuery& query) {
  return "polyspace pairing --lengths " + query.lengths.to_string() + " --exponents " +
         query.exponents.to_string() + " --engine all";
}

namespace {

class Checker {
 public:
  Checker(VerifyReport& report, unsigned threads) : report_(report), threads_(threads) {}

  void expect_equal(const std::string& what, const Integer& got, const Integer& want,
                    const PairingQuery& query) {
    ++report_.checks;
    if (got != want) {
      report_.failures.push_back(what + ": got " + format_integer(got) + ", expected " +
                                 format_integer(want) + "; reproduce: " + reproducer(query));
    }
  }

  void expect_equal(const std::string& what, const Rational& got, const Rational& want,
                    const PairingQuery& query) {
    ++report_.checks;
    if (got != want) {
      report_.failures.push_back(what + ": got " + format_rational(got) + ", expected " +
                                 format_rational(want) + "; reproduce: " + reproducer(query));
    }
  }

  /// Four engines on one query; returns the explicit value.
  Integer engines(const std::string& label, const PairingQuery& query) {
    const Integer reference = pairing_explicit(query, threads_).value;
    for (auto engine : kAllEngines) {
      if (engine == Engine::Explicit) continue;
      try {
        expect_equal(label + " " + std::string(engine_name(engine)) + " vs explicit",
                     compute_pairing(query, engine, threads_).value, reference, query);
      } catch (const Error& e) {
        ++report_.checks;
        report_.failures.push_back(label + " " + std::string(engine_name(engine)) +
                                   " raised: " + e.what() + "; reproduce: " + reproducer(query));
      }
    }
    return reference;
  }

  unsigned threads() const { return threads_; }

 private:
  VerifyReport& report_;
  unsigned threads_;
};

void check_case(int index, CaseSampler& sampler, Checker& check, std::size_t m) {
  const std::string label = "case " + std::to_string(index) + " (m=" + std::to_string(m) + ")";
  const PairingQuery query{sampler.generic_lengths(m), sampler.multidegree(m)};
  const Integer value = check.engines(label, query);

  check.expect_equal(label + " volume mixed partial",
                     volume_mixed_partial(query.lengths, query.exponents, check.threads()),
                     Rational(value), query);

  const auto order = sampler.permutation(m);
  const PairingQuery permuted{query.lengths.permuted(order), query.exponents.permuted(order)};
  check.expect_equal(label + " permutation", pairing_explicit(permuted, check.threads()).value,
                     value, permuted);

  std::vector<std::size_t> squares;
  for (std::size_t i = 0; i < m; ++i) {
    if (query.exponents[i] >= 2) squares.push_back(i);
  }
  if (!squares.empty()) {
    const auto from = squares[static_cast<std::size_t>(
        sampler.uniform(0, static_cast<std::int64_t>(squares.size()) - 1))];
    auto to = static_cast<std::size_t>(sampler.uniform(0, static_cast<std::int64_t>(m) - 2));
    if (to >= from) ++to;
    std::vector<int> k(query.exponents.entries().begin(), query.exponents.entries().end());
    k[from] -= 2;
    k[to] += 2;
    const PairingQuery exchanged{query.lengths, ExponentVector(std::move(k))};
    check.expect_equal(label + " square exchange",
                       pairing_explicit(exchanged, check.threads()).value, value, exchanged);
  }

  // Perturbation with max |delta_i| * m < radius stays in the chamber.
  const Rational radius = chamber_data(query.lengths, check.threads()).radius;
  const Rational bound = radius / Rational(static_cast<long>(m + 1));
  std::vector<Rational> moved;
  for (std::size_t i = 0; i < m; ++i) {
    const long u = static_cast<long>(sampler.uniform(-999, 999));
    Rational shifted = query.lengths[i] + bound * make_rational(u, 1000);
    moved.push_back(sgn(shifted) > 0 ? shifted : query.lengths[i]);
  }
  const PairingQuery nearby{LengthVector(std::move(moved)), query.exponents};
  check.expect_equal(label + " chamber", pairing_explicit(nearby, check.threads()).value, value,
                     nearby);

  const Rational lambda = sampler.small_rational();
  const PairingQuery scaled{query.lengths.scaled(lambda), query.exponents};
  check.expect_equal(label + " scaling", pairing_explicit(scaled, check.threads()).value, value,
                     scaled);
  Rational factor = 1;
  for (std::size_t i = 3; i < m; ++i) factor *= lambda;
  check.expect_equal(label + " volume scaling", volume_exact(scaled.lengths, check.threads()),
                     factor * volume_exact(query.lengths, check.threads()), scaled);

  const PairingQuery empty{sampler.empty_lengths(m), sampler.multidegree(m)};
  check.expect_equal(label + " empty space", check.engines(label + " empty", empty), Integer(0),
                     empty);
  check.expect_equal(label + " empty volume", volume_exact(empty.lengths, check.threads()),
                     Rational(0), empty);
}

}  // namespace

VerifyReport verify_random(const VerifyOptions& options) {
  if (options.min_m < 3 || options.max_m < options.min_m || options.max_m > 24) {
    throw Error(ErrorKind::Range, "verify: need 3 <= min_m <= max_m <= 24");
  }
  if (options.cases < 0) throw Error(ErrorKind::Range, "verify: case count is negative");
  VerifyReport report;
  CaseSampler sampler(options.seed);
  Checker check(report, std::max(1U, options.threads));
  for (int i = 0; i < options.cases; ++i) {
    const auto m = static_cast<std::size_t>(sampler.uniform(options.min_m, options.max_m));
    check_case(i, sampler, check, m);
    ++report.cases;
  }
  return report;
}

// ----------------------------------------------------------------- corpus

std::vector<CorpusEntry> load_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream row(line);
    std::string field;
    while (std::getline(row, field, '\t')) fields.push_back(field);
    if (fields.size() != 4) {
      throw Error(ErrorKind::Parse, "corpus line " + std::to_string(number) +
                                        ": expected 4 tab-separated fields");
    }
    const Rational expected = parse_rational(fields[2]);
    out.push_back({LengthVector::parse(fields[0]), ExponentVector::parse(fields[1]),
                   to_integer_exact(expected, "corpus expected value"), fields[3]});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open corpus file '" + path + "'");
  return load_corpus(in);
}

VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, unsigned threads) {
  VerifyReport report;
  Checker check(report, std::max(1U, threads));
  for (const auto& entry : corpus) {
    const PairingQuery query{entry.lengths, entry.exponents};
    const Integer value = check.engines(entry.citation, query);
    check.expect_equal(entry.citation, value, entry.expected, query);
    ++report.cases;
  }
  return report;
}

}  // namespace polyspace
