#include "polyspace/polyspace.h"

#include <cstring>
#include <new>
#include <string>

#include "polyspace/errors.hpp"
#include "polyspace/lengths.hpp"
#include "polyspace/oracles.hpp"
#include "polyspace/pairings.hpp"
#include "polyspace/triangular.hpp"
#include "polyspace/verify.hpp"
#include "polyspace/volume.hpp"

struct ps_lengths {
  polyspace::LengthVector value;
};

struct ps_family {
  polyspace::TriangularFamily value;
};

struct ps_table {
  std::vector<std::pair<polyspace::ExponentVector, polyspace::Integer>> entries;
};

struct ps_report {
  polyspace::VerifyReport value;
};

namespace {

thread_local std::string last_error;

ps_status status_of(polyspace::ErrorKind kind) {
  using polyspace::ErrorKind;
  switch (kind) {
    case ErrorKind::Parse: return PS_E_PARSE;
    case ErrorKind::InvalidArgument: return PS_E_INVALID_ARGUMENT;
    case ErrorKind::NonGeneric: return PS_E_NON_GENERIC;
    case ErrorKind::DegreeMismatch: return PS_E_DEGREE_MISMATCH;
    case ErrorKind::ParityViolation: return PS_E_PARITY_VIOLATION;
    case ErrorKind::Range: return PS_E_RANGE;
    case ErrorKind::Capacity: return PS_E_CAPACITY;
    case ErrorKind::EvenM: return PS_E_EVEN_M;
    case ErrorKind::EngineMismatch: return PS_E_ENGINE_MISMATCH;
  }
  return PS_E_INTERNAL;
}

ps_status fail(ps_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
ps_status guard(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const polyspace::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PS_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PS_E_INTERNAL, e.what());
  } catch (...) {
    return fail(PS_E_INTERNAL, "unknown exception");
  }
}

ps_status write_string(const std::string& text, char* buf, size_t cap, size_t* needed) {
  const size_t size = text.size() + 1;
  if (needed) *needed = size;
  if (buf == nullptr && cap == 0) return PS_OK;
  if (buf == nullptr || cap < size) {
    return fail(PS_E_BUFFER_TOO_SMALL,
                "buffer of " + std::to_string(cap) + " bytes, need " + std::to_string(size));
  }
  std::memcpy(buf, text.c_str(), size);
  return PS_OK;
}

unsigned resolve_threads(unsigned threads) {
  return threads == 0 ? polyspace::default_threads() : threads;
}

polyspace::ExponentVector exponents_from(const int* exponents, size_t count) {
  if (exponents == nullptr && count != 0) {
    throw polyspace::Error(polyspace::ErrorKind::InvalidArgument, "exponents pointer is null");
  }
  return polyspace::ExponentVector(std::vector<int>(exponents, exponents + count));
}

#define PS_REQUIRE(ptr)                                                     \
  do {                                                                      \
    if ((ptr) == nullptr) return fail(PS_E_NULL_POINTER, #ptr " is null"); \
  } while (0)

}  // namespace

extern "C" {

const char* ps_version(void) { return "1.0.0"; }

const char* ps_status_name(ps_status status) {
  switch (status) {
    case PS_OK: return "ok";
    case PS_E_PARSE: return "parse error";
    case PS_E_INVALID_ARGUMENT: return "invalid argument";
    case PS_E_NON_GENERIC: return "non-generic length vector";
    case PS_E_DEGREE_MISMATCH: return "degree mismatch";
    case PS_E_PARITY_VIOLATION: return "parity violation";
    case PS_E_RANGE: return "out of range";
    case PS_E_CAPACITY: return "capacity exceeded";
    case PS_E_EVEN_M: return "even m";
    case PS_E_ENGINE_MISMATCH: return "engine mismatch";
    case PS_E_BUFFER_TOO_SMALL: return "buffer too small";
    case PS_E_NULL_POINTER: return "null pointer";
    case PS_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ps_last_error(void) { return last_error.c_str(); }

const char* ps_engine_name(ps_engine engine) {
  switch (engine) {
    case PS_ENGINE_EXPLICIT: return "explicit";
    case PS_ENGINE_RECURSION: return "recursion";
    case PS_ENGINE_KONNO_TAKAKURA: return "kt";
    case PS_ENGINE_YOSHIDA: return "yoshida";
  }
  return nullptr;
}

ps_status ps_engine_parse(const char* name, ps_engine* out) {
  PS_REQUIRE(name);
  PS_REQUIRE(out);
  const auto engine = polyspace::parse_engine(name);
  if (!engine) return fail(PS_E_INVALID_ARGUMENT, std::string("unknown engine '") + name + "'");
  *out = static_cast<ps_engine>(*engine);
  return PS_OK;
}

unsigned ps_default_threads(void) { return polyspace::default_threads(); }

// ------------------------------------------------------------------ lengths

ps_status ps_lengths_parse(const char* csv, ps_lengths** out) {
  PS_REQUIRE(csv);
  PS_REQUIRE(out);
  return guard([&] {
    *out = new ps_lengths{polyspace::LengthVector::parse(csv)};
    return PS_OK;
  });
}

void ps_lengths_free(ps_lengths* lengths) { delete lengths; }

size_t ps_lengths_size(const ps_lengths* lengths) {
  return lengths ? lengths->value.size() : 0;
}

ps_status ps_lengths_format(const ps_lengths* lengths, char* buf, size_t cap, size_t* needed) {
  PS_REQUIRE(lengths);
  return guard([&] { return write_string(lengths->value.to_string(), buf, cap, needed); });
}

ps_status ps_lengths_is_generic(const ps_lengths* lengths, unsigned threads, int* out) {
  PS_REQUIRE(lengths);
  PS_REQUIRE(out);
  return guard([&] {
    *out = polyspace::is_generic(lengths->value, resolve_threads(threads)) ? 1 : 0;
    return PS_OK;
  });
}

ps_status ps_lengths_is_empty(const ps_lengths* lengths, int* out) {
  PS_REQUIRE(lengths);
  PS_REQUIRE(out);
  return guard([&] {
    *out = polyspace::is_empty(lengths->value) ? 1 : 0;
    return PS_OK;
  });
}

ps_status ps_lengths_chamber_radius(const ps_lengths* lengths, unsigned threads, char* buf,
                                    size_t cap, size_t* needed, int* witness) {
  PS_REQUIRE(lengths);
  return guard([&] {
    const auto data = polyspace::chamber_data(lengths->value, resolve_threads(threads));
    const ps_status status = write_string(polyspace::format_rational(data.radius), buf, cap, needed);
    if (status == PS_OK && witness) {
      for (size_t i = 0; i < data.witness.entries.size(); ++i) witness[i] = data.witness.entries[i];
    }
    return status;
  });
}

// --------------------------------------------------------------- triangular

ps_status ps_family_enumerate(const ps_lengths* lengths, unsigned threads, ps_family** out) {
  PS_REQUIRE(lengths);
  PS_REQUIRE(out);
  return guard([&] {
    *out = new ps_family{polyspace::enumerate_triangular(lengths->value, resolve_threads(threads))};
    return PS_OK;
  });
}

void ps_family_free(ps_family* family) { delete family; }

size_t ps_family_size(const ps_family* family) { return family ? family->value.size() : 0; }

namespace {

ps_status check_index(size_t index, size_t size) {
  if (index >= size) {
    return fail(PS_E_RANGE,
                "index " + std::to_string(index) + " out of range for size " + std::to_string(size));
  }
  return PS_OK;
}

}  // namespace

ps_status ps_family_mask(const ps_family* family, size_t index, uint64_t* mask) {
  PS_REQUIRE(family);
  PS_REQUIRE(mask);
  if (auto s = check_index(index, family->value.size()); s != PS_OK) return s;
  *mask = family->value.members[index].mask.bits;
  return PS_OK;
}

ps_status ps_family_format_member(const ps_family* family, size_t index, char* buf, size_t cap,
                                  size_t* needed) {
  PS_REQUIRE(family);
  if (auto s = check_index(index, family->value.size()); s != PS_OK) return s;
  return guard([&] {
    return write_string(polyspace::format_subset(family->value.members[index].mask), buf, cap,
                        needed);
  });
}

ps_status ps_family_signed_sum(const ps_family* family, size_t index, char* buf, size_t cap,
                               size_t* needed) {
  PS_REQUIRE(family);
  if (auto s = check_index(index, family->value.size()); s != PS_OK) return s;
  return guard([&] {
    return write_string(polyspace::format_rational(family->value.members[index].signed_sum), buf,
                        cap, needed);
  });
}

ps_status ps_negative_subset_count(const ps_lengths* lengths, unsigned threads, uint64_t* out) {
  PS_REQUIRE(lengths);
  PS_REQUIRE(out);
  return guard([&] {
    *out = polyspace::count_negative_subsets(lengths->value, resolve_threads(threads));
    return PS_OK;
  });
}

// ----------------------------------------------------------------- pairings

ps_status ps_pairing(const ps_lengths* lengths, const int* exponents, size_t count,
                     ps_engine engine, unsigned threads, char* buf, size_t cap, size_t* needed) {
  PS_REQUIRE(lengths);
  return guard([&] {
    if (ps_engine_name(engine) == nullptr) {
      return fail(PS_E_INVALID_ARGUMENT, "unknown engine " + std::to_string(engine));
    }
    const polyspace::PairingQuery query{lengths->value, exponents_from(exponents, count)};
    const auto result = polyspace::compute_pairing(query, static_cast<polyspace::Engine>(engine),
                                                   resolve_threads(threads));
    return write_string(polyspace::format_integer(result.value), buf, cap, needed);
  });
}

ps_status ps_normalize(const int* exponents, size_t count, size_t* permutation) {
  PS_REQUIRE(permutation);
  return guard([&] {
    const auto k = exponents_from(exponents, count);
    size_t out = 0;
    for (size_t i = 0; i < count; ++i) {
      if (k[i] == 0) permutation[out++] = i;
    }
    for (size_t i = 0; i < count; ++i) {
      if (k[i] != 0) permutation[out++] = i;
    }
    return PS_OK;
  });
}

ps_status ps_table_compute(const ps_lengths* lengths, unsigned threads, ps_table** out) {
  PS_REQUIRE(lengths);
  PS_REQUIRE(out);
  return guard([&] {
    auto table = polyspace::pairing_table(lengths->value, resolve_threads(threads));
    auto* handle = new ps_table;
    handle->entries.assign(std::make_move_iterator(table.begin()),
                           std::make_move_iterator(table.end()));
    *out = handle;
    return PS_OK;
  });
}

void ps_table_free(ps_table* table) { delete table; }

size_t ps_table_size(const ps_table* table) { return table ? table->entries.size() : 0; }

ps_status ps_table_entry(const ps_table* table, size_t index, int* exponents, char* buf,
                         size_t cap, size_t* needed) {
  PS_REQUIRE(table);
  if (auto s = check_index(index, table->entries.size()); s != PS_OK) return s;
  return guard([&] {
    const auto& [k, value] = table->entries[index];
    if (exponents) {
      for (size_t i = 0; i < k.size(); ++i) exponents[i] = k[i];
    }
    return write_string(polyspace::format_integer(value), buf, cap, needed);
  });
}

// ------------------------------------------------------------------- volume

ps_status ps_volume_exact(const ps_lengths* lengths, unsigned threads, char* buf, size_t cap,
                          size_t* needed) {
  PS_REQUIRE(lengths);
  return guard([&] {
    return write_string(
        polyspace::format_rational(polyspace::volume_exact(lengths->value, resolve_threads(threads))),
        buf, cap, needed);
  });
}

ps_status ps_volume_series(const ps_lengths* lengths, long terms, double* value,
                           double* tail_bound) {
  PS_REQUIRE(lengths);
  PS_REQUIRE(value);
  PS_REQUIRE(tail_bound);
  return guard([&] {
    const auto series = polyspace::volume_witten_numeric(lengths->value, terms);
    *value = series.value;
    *tail_bound = series.tail_bound;
    return PS_OK;
  });
}

ps_status ps_volume_mixed_partial(const ps_lengths* lengths, const int* exponents, size_t count,
                                  unsigned threads, char* buf, size_t cap, size_t* needed) {
  PS_REQUIRE(lengths);
  return guard([&] {
    const auto value = polyspace::volume_mixed_partial(
        lengths->value, exponents_from(exponents, count), resolve_threads(threads));
    return write_string(polyspace::format_rational(value), buf, cap, needed);
  });
}

// -------------------------------------------------------------- equilateral

ps_status ps_rho(int m, int k, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    return write_string(polyspace::format_rational(polyspace::rho(m, k)), buf, cap, needed);
  });
}

ps_status ps_equilateral_pairing(int m, const int* degrees, size_t count, char* buf, size_t cap,
                                 size_t* needed) {
  return guard([&] {
    const auto value = polyspace::equilateral_pairing(m, exponents_from(degrees, count));
    return write_string(polyspace::format_integer(value), buf, cap, needed);
  });
}

ps_status ps_sigma1_pairing(int m, int k, char* buf, size_t cap, size_t* needed) {
  return guard([&] {
    return write_string(polyspace::format_integer(polyspace::sigma1_pairing(m, k)), buf, cap,
                        needed);
  });
}

// ------------------------------------------------------------- verification

ps_status ps_verify_random(const ps_verify_options* options, ps_report** out) {
  PS_REQUIRE(options);
  PS_REQUIRE(out);
  return guard([&] {
    polyspace::VerifyOptions opts;
    opts.min_m = options->min_m;
    opts.max_m = options->max_m;
    opts.cases = options->cases;
    opts.seed = options->seed;
    opts.threads = resolve_threads(options->threads);
    *out = new ps_report{polyspace::verify_random(opts)};
    return PS_OK;
  });
}

ps_status ps_verify_corpus(const char* path, unsigned threads, ps_report** out) {
  PS_REQUIRE(path);
  PS_REQUIRE(out);
  return guard([&] {
    const auto corpus = polyspace::load_corpus_file(path);
    *out = new ps_report{polyspace::verify_corpus(corpus, resolve_threads(threads))};
    return PS_OK;
  });
}

void ps_report_free(ps_report* report) { delete report; }

int ps_report_ok(const ps_report* report) { return report && report->value.ok() ? 1 : 0; }

int ps_report_cases(const ps_report* report) { return report ? report->value.cases : 0; }

int ps_report_checks(const ps_report* report) { return report ? report->value.checks : 0; }

size_t ps_report_failure_count(const ps_report* report) {
  return report ? report->value.failures.size() : 0;
}

const char* ps_report_failure(const ps_report* report, size_t index) {
  if (!report || index >= report->value.failures.size()) return nullptr;
  return report->value.failures[index].c_str();
}

}  // extern "C"
