#include "polyspace/triangular.hpp"

#include <algorithm>

#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"

namespace polyspace {

std::string format_subset(std::uint64_t bits, std::size_t first_index) {
  std::string out = "{";
  bool first = true;
  for (unsigned b = 0; b < 64; ++b) {
    if ((bits >> b) & 1U) {
      if (!first) out += ',';
      out += std::to_string(first_index + b);
      first = false;
    }
  }
  return out + "}";
}

bool TriangularFamily::contains(SubsetMask mask) const {
  return std::binary_search(
      members.begin(), members.end(), TriangularMember{mask, Rational(0)},
      [](const TriangularMember& a, const TriangularMember& b) { return a.mask < b.mask; });
}

std::string TriangularFamily::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ' ';
    out += format_subset(members[i].mask);
  }
  return out;
}

Rational signed_sum(const LengthVector& lengths, SubsetMask subset) {
  Rational l = 0;
  for (std::size_t i = 2; i < lengths.size(); ++i) {
    if (subset.contains(i + 1)) {
      l += lengths[i];
    } else {
      l -= lengths[i];
    }
  }
  return l;
}

bool is_triangular(const LengthVector& lengths, SubsetMask subset) {
  const Rational l = signed_sum(lengths, subset);
  return sgn(l) > 0 && triple_ok(lengths[0], lengths[1], l);
}

namespace {

template <class Int>
bool triangular_value(const Int& a1, const Int& a2, const Int& l) {
  return l > 0 && a1 <= a2 + l && a2 <= a1 + l && l <= a1 + a2;
}

template <class Int>
std::vector<std::pair<std::uint64_t, Int>> collect_triangular(std::span<const Int> weights,
                                                              unsigned threads) {
  const Int& a1 = weights[0];
  const Int& a2 = weights[1];
  const auto rest = weights.subspan(2);
  const std::uint64_t total = std::uint64_t{1} << rest.size();

  std::vector<std::vector<std::pair<std::uint64_t, Int>>> chunks(std::max(1U, threads));
  parallel_ranges(total, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    auto& out = chunks[chunk];
    gray_walk<Int>(rest, Int(0), lo, hi, [&](std::uint64_t mask, const Int& l) {
      if (triangular_value(a1, a2, l)) out.emplace_back(mask, l);
    });
  });

  std::vector<std::pair<std::uint64_t, Int>> all;
  for (auto& c : chunks) {
    all.insert(all.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return all;
}

}  // namespace

TriangularFamily enumerate_triangular(const LengthVector& lengths, unsigned threads) {
  const std::size_t m = lengths.size();
  require_mask_capacity(m - 2, "enumerate_triangular");
  const auto scaled = ScaledLengths::from(lengths.entries());

  TriangularFamily family;
  family.m = m;
  auto emit = [&](const auto& found) {
    family.members.reserve(found.size());
    for (const auto& [mask, l] : found) {
      family.members.push_back({SubsetMask{mask}, scaled.unscale(l)});
    }
  };
  if (scaled.fits_machine_word()) {
    const auto w = scaled.machine_weights();
    emit(collect_triangular<std::int64_t>(w, threads));
  } else {
    emit(collect_triangular<Integer>(scaled.weights, threads));
  }
  return family;
}

namespace {

// Increasing-mask walk: mask -> mask + 1 clears the trailing ones and sets
// the next bit.
template <class Int>
void walk_negative(std::span<const Int> weights, const LengthVector& lengths,
                   const std::function<void(EdgeSubset)>& visit) {
  const std::size_t m = weights.size();
  std::vector<Int> doubled(weights.begin(), weights.end());
  for (auto& w : doubled) w += w;
  Int value = 0;
  for (const auto& w : weights) value -= w;

  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0;; ++mask) {
    if (value == 0) {
      throw Error(ErrorKind::NonGeneric,
                  "length vector (" + lengths.to_string() + ") is not generic: S_R = 0 for R = " +
                      format_subset(mask, 1));
    }
    if (value < 0) visit(EdgeSubset{mask});
    if (mask + 1 == total) break;
    const unsigned ones = static_cast<unsigned>(std::countr_one(mask));
    for (unsigned b = 0; b < ones; ++b) value -= doubled[b];
    value += doubled[ones];
  }
}

template <class Int>
std::uint64_t count_negative(std::span<const Int> weights, const LengthVector& lengths,
                             unsigned threads) {
  const std::uint64_t total = std::uint64_t{1} << weights.size();
  std::vector<std::uint64_t> counts(std::max(1U, threads), 0);
  std::vector<std::uint64_t> zero_mask(std::max(1U, threads), total);
  parallel_ranges(total, threads, [&](unsigned chunk, std::uint64_t lo, std::uint64_t hi) {
    gray_walk<Int>(weights, Int(0), lo, hi, [&](std::uint64_t mask, const Int& s) {
      if (s < 0) ++counts[chunk];
      if (s == 0) zero_mask[chunk] = std::min(zero_mask[chunk], mask);
    });
  });
  const auto zero = *std::min_element(zero_mask.begin(), zero_mask.end());
  if (zero != total) {
    throw Error(ErrorKind::NonGeneric, "length vector (" + lengths.to_string() +
                                           ") is not generic: S_R = 0 for R = " +
                                           format_subset(zero, 1));
  }
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

}  // namespace

void enumerate_negative_subsets(const LengthVector& lengths,
                                const std::function<void(EdgeSubset)>& visit) {
  require_mask_capacity(lengths.size(), "enumerate_negative_subsets");
  const auto scaled = ScaledLengths::from(lengths.entries());
  if (scaled.fits_machine_word()) {
    const auto w = scaled.machine_weights();
    walk_negative<std::int64_t>(w, lengths, visit);
  } else {
    walk_negative<Integer>(scaled.weights, lengths, visit);
  }
}

std::uint64_t count_negative_subsets(const LengthVector& lengths, unsigned threads) {
  require_mask_capacity(lengths.size(), "count_negative_subsets");
  const auto scaled = ScaledLengths::from(lengths.entries());
  if (scaled.fits_machine_word()) {
    const auto w = scaled.machine_weights();
    return count_negative<std::int64_t>(w, lengths, threads);
  }
  return count_negative<Integer>(scaled.weights, lengths, threads);
}

}  // namespace polyspace
