#include "polyspace/lengths.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

std::vector<std::string_view> split_csv(std::string_view csv) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    parts.push_back(csv.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <class T>
std::string join(const std::vector<T>& items, auto&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += fmt(items[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- LengthVector

LengthVector::LengthVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "a length vector needs at least 3 entries, got " +
                    std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i].canonicalize();
    if (sgn(entries_[i]) <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "length " + std::to_string(i + 1) + " must be positive, got " +
                      format_rational(entries_[i]));
    }
  }
}

LengthVector LengthVector::parse(std::string_view csv) {
  std::vector<Rational> entries;
  for (auto part : split_csv(csv)) entries.push_back(parse_rational(part));
  return LengthVector(std::move(entries));
}

Rational LengthVector::total() const {
  Rational sum = 0;
  for (const auto& a : entries_) sum += a;
  return sum;
}

LengthVector LengthVector::scaled(const Rational& lambda) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& a : entries_) out.emplace_back(a * lambda);
  return LengthVector(std::move(out));
}

LengthVector LengthVector::permuted(std::span<const std::size_t> order) const {
  if (order.size() != entries_.size()) {
    throw Error(ErrorKind::InvalidArgument, "permutation length mismatch");
  }
  std::vector<Rational> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(entries_.at(i));
  return LengthVector(std::move(out));
}

std::string LengthVector::to_string() const {
  return join(entries_, [](const Rational& q) { return format_rational(q); });
}

// -------------------------------------------------------------- ExponentVector

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "exponent " + std::to_string(i + 1) + " is negative");
    }
  }
}

ExponentVector ExponentVector::parse(std::string_view csv) {
  std::vector<int> entries;
  for (auto part : split_csv(csv)) {
    const std::string s(part);
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0' || errno != 0 || v < 0 || v > 1'000'000) {
      throw Error(ErrorKind::Parse, "not a nonnegative exponent: '" + s + "'");
    }
    entries.push_back(static_cast<int>(v));
  }
  return ExponentVector(std::move(entries));
}

int ExponentVector::degree() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

ExponentVector ExponentVector::permuted(std::span<const std::size_t> order) const {
  std::vector<int> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(entries_.at(i));
  return ExponentVector(std::move(out));
}

std::string ExponentVector::to_string() const {
  return join(entries_, [](int k) { return std::to_string(k); });
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i] > 0 ? "+1" : "-1";
  }
  return out + ")";
}

// --------------------------------------------------------------- ScaledLengths

ScaledLengths ScaledLengths::from(std::span<const Rational> lengths) {
  ScaledLengths out;
  out.scale = 1;
  for (const auto& a : lengths) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(),
                                        a.get_den().get_mpz_t());
  out.weights.reserve(lengths.size());
  for (const auto& a : lengths) out.weights.push_back(a.get_num() * (out.scale / a.get_den()));
  return out;
}

bool ScaledLengths::fits_machine_word() const {
  Integer sum = 0;
  for (const auto& w : weights) sum += w;
  return sum < Integer(1) << 60;
}

std::vector<std::int64_t> ScaledLengths::machine_weights() const {
  std::vector<std::int64_t> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(static_cast<std::int64_t>(w.get_si()));
  return out;
}

Rational ScaledLengths::unscale(const Integer& value) const { return make_rational(value, scale); }

Rational ScaledLengths::unscale(std::int64_t value) const {
  return make_rational(Integer(static_cast<long>(value)), scale);
}

// -------------------------------------------------------------------- chamber

unsigned default_threads() {
  if (const char* env = std::getenv("POLYSPACE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

template <class Int>
struct Closest {
  Int magnitude;
  std::uint64_t mask = 0;
  bool set = false;

  void offer(const Int& value, std::uint64_t m) {
    Int mag = value < 0 ? Int(-value) : value;
    if (!set || mag < magnitude || (mag == magnitude && m < mask)) {
      magnitude = mag;
      mask = m;
      set = true;
    }
  }
};

// Edge 0 carries sign +1 (global flip symmetry); mask bit i-1 is edge i.
template <class Int>
Closest<Int> closest_signed_sum(std::span<const Int> weights, unsigned threads) {
  const auto rest = weights.subspan(1);
  const std::uint64_t total = std::uint64_t{1} << rest.size();
  std::vector<Closest<Int>> best(std::max(1U, threads));
  parallel_ranges(total, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    auto& mine = best[chunk];
    gray_walk<Int>(rest, weights[0], lo, hi,
                   [&](std::uint64_t mask, const Int& v) { mine.offer(v, mask); });
  });
  Closest<Int> out = best[0];
  for (const auto& b : best) {
    if (b.set) out.offer(b.magnitude, b.mask);
  }
  return out;
}

}  // namespace

ChamberData chamber_data(const LengthVector& lengths, unsigned threads) {
  const std::size_t m = lengths.size();
  require_mask_capacity(m - 1, "chamber_data");
  const auto scaled = ScaledLengths::from(lengths.entries());

  ChamberData out;
  std::uint64_t mask = 0;
  if (scaled.fits_machine_word()) {
    const auto w = scaled.machine_weights();
    const auto best = closest_signed_sum<std::int64_t>(w, threads);
    out.radius = scaled.unscale(best.magnitude);
    mask = best.mask;
  } else {
    const auto best = closest_signed_sum<Integer>(scaled.weights, threads);
    out.radius = scaled.unscale(best.magnitude);
    mask = best.mask;
  }
  out.witness.entries.assign(m, -1);
  out.witness.entries[0] = 1;
  for (std::size_t i = 1; i < m; ++i) {
    if ((mask >> (i - 1)) & 1U) out.witness.entries[i] = 1;
  }
  out.empty = is_empty(lengths);
  return out;
}

bool is_generic(const LengthVector& lengths, unsigned threads) {
  return sgn(chamber_data(lengths, threads).radius) > 0;
}

void require_generic(const LengthVector& lengths, unsigned threads) {
  const auto data = chamber_data(lengths, threads);
  if (sgn(data.radius) == 0) {
    throw Error(ErrorKind::NonGeneric,
                "length vector (" + lengths.to_string() +
                    ") is not generic: sign vector " + data.witness.to_string() +
                    " gives a vanishing signed sum");
  }
}

bool is_empty(const LengthVector& lengths) {
  const Rational total = lengths.total();
  const auto& largest = *std::max_element(
      lengths.entries().begin(), lengths.entries().end(),
      [](const Rational& a, const Rational& b) { return a < b; });
  return largest > total - largest;
}

bool triple_ok(const Rational& a, const Rational& b, const Rational& c) {
  return a <= b + c && b <= a + c && c <= a + b;
}

}  // namespace polyspace
