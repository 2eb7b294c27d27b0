// polyspace: command-line front end over the C API.
//
// Exit codes: 0 success, 1 usage or input error, 2 non-generic lengths or
// degree mismatch, 3 engine disagreement / verification failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyspace/polyspace.h"

#ifndef POLYSPACE_DEFAULT_CORPUS
#define POLYSPACE_DEFAULT_CORPUS "data/corpus.tsv"
#endif

using nlohmann::ordered_json;

namespace {

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(ps_status status) {
  switch (status) {
    case PS_E_NON_GENERIC:
    case PS_E_DEGREE_MISMATCH:
      return 2;
    case PS_E_ENGINE_MISMATCH:
      return 3;
    default:
      return 1;
  }
}

void check(ps_status status) {
  if (status != PS_OK) {
    std::string message = ps_last_error();
    if (message.empty()) message = ps_status_name(status);
    throw Failure{exit_code_for(status), message};
  }
}

template <class Fn>
std::string fetch(Fn&& call) {
  size_t needed = 0;
  check(call(nullptr, 0, &needed));
  std::string out(needed, '\0');
  check(call(out.data(), out.size(), &needed));
  out.resize(needed - 1);
  return out;
}

struct LengthsDeleter {
  void operator()(ps_lengths* p) const { ps_lengths_free(p); }
};
struct FamilyDeleter {
  void operator()(ps_family* p) const { ps_family_free(p); }
};
struct TableDeleter {
  void operator()(ps_table* p) const { ps_table_free(p); }
};
struct ReportDeleter {
  void operator()(ps_report* p) const { ps_report_free(p); }
};
using Lengths = std::unique_ptr<ps_lengths, LengthsDeleter>;

Lengths parse_lengths(const std::string& csv) {
  ps_lengths* raw = nullptr;
  check(ps_lengths_parse(csv.c_str(), &raw));
  return Lengths(raw);
}

std::vector<std::string> split(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> parse_ints(const std::string& csv, const char* what) {
  std::vector<int> out;
  for (const auto& item : split(csv)) {
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw Failure{1, std::string("invalid ") + what + " entry '" + item + "'"};
    }
    out.push_back(value);
  }
  if (out.empty()) throw Failure{1, std::string(what) + " is empty"};
  return out;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string lengths_text(const ps_lengths* lengths) {
  return fetch([&](char* b, size_t c, size_t* n) { return ps_lengths_format(lengths, b, c, n); });
}

ordered_json lengths_json(const ps_lengths* lengths) {
  ordered_json out = ordered_json::array();
  for (const auto& item : split(lengths_text(lengths))) out.push_back(item);
  return out;
}

enum class Format { Plain, Tsv, Json };

struct Common {
  unsigned threads = 0;
  std::string format = "plain";

  Format parsed_format() const {
    if (format == "json") return Format::Json;
    if (format == "tsv") return Format::Tsv;
    return Format::Plain;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--threads", common.threads,
                  "Worker threads (default: POLYSPACE_THREADS or machine count)");
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv", "json"}));
}

// Record shared by every subcommand's JSON output.
struct Record {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json result;
  ordered_json engines = ordered_json::object();
  std::optional<bool> match;
  ordered_json extra = ordered_json::object();
  double timing_ms = 0.0;

  ordered_json to_json() const {
    ordered_json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["result"] = result;
    out["engines"] = engines;
    if (match) out["match"] = *match;
    for (const auto& [key, value] : extra.items()) out[key] = value;
    out["timing_ms"] = timing_ms;
    return out;
  }
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void print_json(const Record& record) { std::cout << record.to_json().dump() << "\n"; }

// ------------------------------------------------------------------ pairing

struct PairingArgs {
  Common common;
  std::string lengths;
  std::string exponents;
  std::string engine = "explicit";
};

int run_pairing(const PairingArgs& args) {
  Stopwatch clock;
  const auto lengths = parse_lengths(args.lengths);
  const auto k = parse_ints(args.exponents, "exponent");

  std::vector<ps_engine> engines;
  if (args.engine == "all") {
    engines = {PS_ENGINE_EXPLICIT, PS_ENGINE_RECURSION, PS_ENGINE_KONNO_TAKAKURA,
               PS_ENGINE_YOSHIDA};
  } else {
    ps_engine e;
    check(ps_engine_parse(args.engine.c_str(), &e));
    engines = {e};
  }

  Record record;
  record.command = "pairing";
  record.inputs["lengths"] = lengths_json(lengths.get());
  record.inputs["exponents"] = k;
  record.inputs["engine"] = args.engine;
  std::vector<std::string> values;
  for (auto e : engines) {
    values.push_back(fetch([&](char* b, size_t c, size_t* n) {
      return ps_pairing(lengths.get(), k.data(), k.size(), e, args.common.threads, b, c, n);
    }));
    record.engines[ps_engine_name(e)] = values.back();
  }
  bool agree = true;
  for (const auto& v : values) agree = agree && v == values.front();
  record.result = values.front();
  if (engines.size() > 1) record.match = agree;
  record.timing_ms = clock.elapsed_ms();

  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv: {
      std::cout << "lengths\texponents\tengine\tvalue\n";
      const std::string l = lengths_text(lengths.get());
      for (size_t i = 0; i < engines.size(); ++i) {
        std::cout << l << '\t' << join(k) << '\t' << ps_engine_name(engines[i]) << '\t'
                  << values[i] << '\n';
      }
      break;
    }
    case Format::Plain:
      if (engines.size() == 1) {
        std::cout << values.front() << '\n';
      } else {
        for (size_t i = 0; i < engines.size(); ++i) {
          std::cout << ps_engine_name(engines[i]) << ' ' << values[i] << '\n';
        }
        std::cout << "match=" << (agree ? "true" : "false") << '\n';
      }
      break;
  }
  if (!agree) {
    std::cerr << "error: engines disagree\n";
    return 3;
  }
  return 0;
}

// -------------------------------------------------------------------- table

struct LengthsArgs {
  Common common;
  std::string lengths;
};

int run_table(const LengthsArgs& args) {
  Stopwatch clock;
  const auto lengths = parse_lengths(args.lengths);
  ps_table* raw = nullptr;
  check(ps_table_compute(lengths.get(), args.common.threads, &raw));
  std::unique_ptr<ps_table, TableDeleter> table(raw);

  const size_t m = ps_lengths_size(lengths.get());
  std::vector<std::pair<std::vector<int>, std::string>> rows;
  for (size_t i = 0; i < ps_table_size(table.get()); ++i) {
    std::vector<int> k(m);
    const auto value = fetch([&](char* b, size_t c, size_t* n) {
      return ps_table_entry(table.get(), i, k.data(), b, c, n);
    });
    rows.emplace_back(std::move(k), value);
  }

  Record record;
  record.command = "table";
  record.inputs["lengths"] = lengths_json(lengths.get());
  record.result = ordered_json::array();
  for (const auto& [k, value] : rows) {
    record.result.push_back({{"exponents", k}, {"value", value}});
  }
  record.timing_ms = clock.elapsed_ms();

  const std::string l = lengths_text(lengths.get());
  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "lengths\texponents\tengine\tvalue\n";
      for (const auto& [k, value] : rows) {
        std::cout << l << '\t' << join(k) << "\texplicit\t" << value << '\n';
      }
      break;
    case Format::Plain:
      for (const auto& [k, value] : rows) std::cout << join(k) << ' ' << value << '\n';
      break;
  }
  return 0;
}

// --------------------------------------------------------------- triangular

int run_triangular(const LengthsArgs& args) {
  Stopwatch clock;
  const auto lengths = parse_lengths(args.lengths);
  ps_family* raw = nullptr;
  check(ps_family_enumerate(lengths.get(), args.common.threads, &raw));
  std::unique_ptr<ps_family, FamilyDeleter> family(raw);

  std::vector<std::string> members;
  std::vector<std::string> sums;
  for (size_t i = 0; i < ps_family_size(family.get()); ++i) {
    members.push_back(fetch([&](char* b, size_t c, size_t* n) {
      return ps_family_format_member(family.get(), i, b, c, n);
    }));
    sums.push_back(fetch([&](char* b, size_t c, size_t* n) {
      return ps_family_signed_sum(family.get(), i, b, c, n);
    }));
  }

  Record record;
  record.command = "triangular";
  record.inputs["lengths"] = lengths_json(lengths.get());
  record.result = members;
  record.timing_ms = clock.elapsed_ms();

  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "lengths\tmember\tsigned_sum\n";
      for (size_t i = 0; i < members.size(); ++i) {
        std::cout << lengths_text(lengths.get()) << '\t' << members[i] << '\t' << sums[i] << '\n';
      }
      break;
    case Format::Plain:
      for (size_t i = 0; i < members.size(); ++i) std::cout << (i ? " " : "") << members[i];
      std::cout << '\n';
      break;
  }
  return 0;
}

// ------------------------------------------------------------------- volume

struct VolumeArgs {
  Common common;
  std::string lengths;
  std::string method = "exact";
  long terms = 100000;
  std::string exponents;
};

int run_volume(const VolumeArgs& args) {
  Stopwatch clock;
  const auto lengths = parse_lengths(args.lengths);
  Record record;
  record.command = "volume";
  record.inputs["lengths"] = lengths_json(lengths.get());
  record.inputs["method"] = args.method;

  std::string value;
  if (args.method == "exact") {
    value = fetch([&](char* b, size_t c, size_t* n) {
      return ps_volume_exact(lengths.get(), args.common.threads, b, c, n);
    });
  } else if (args.method == "series") {
    record.inputs["terms"] = args.terms;
    double series = 0.0;
    double tail = 0.0;
    check(ps_volume_series(lengths.get(), args.terms, &series, &tail));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", series);
    value = buf;
    record.extra["tail_bound"] = tail;
  } else {
    if (args.exponents.empty()) throw Failure{1, "--method partial requires --exponents"};
    const auto k = parse_ints(args.exponents, "exponent");
    record.inputs["exponents"] = k;
    value = fetch([&](char* b, size_t c, size_t* n) {
      return ps_volume_mixed_partial(lengths.get(), k.data(), k.size(), args.common.threads, b, c,
                                     n);
    });
  }
  record.result = value;
  record.timing_ms = clock.elapsed_ms();

  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "lengths\tmethod\tvalue\n"
                << lengths_text(lengths.get()) << '\t' << args.method << '\t' << value << '\n';
      break;
    case Format::Plain:
      std::cout << value;
      if (record.extra.contains("tail_bound")) {
        std::cout << " (tail bound " << record.extra["tail_bound"].get<double>() << ")";
      }
      std::cout << '\n';
      break;
  }
  return 0;
}

// ------------------------------------------------------- equilateral, sigma1

struct EquilateralArgs {
  Common common;
  int m = 0;
  std::string degrees;
};

int run_equilateral(const EquilateralArgs& args) {
  Stopwatch clock;
  const auto d = parse_ints(args.degrees, "degree");
  const auto value = fetch([&](char* b, size_t c, size_t* n) {
    return ps_equilateral_pairing(args.m, d.data(), d.size(), b, c, n);
  });
  Record record;
  record.command = "equilateral";
  record.inputs["m"] = args.m;
  record.inputs["degrees"] = d;
  record.result = value;
  record.timing_ms = clock.elapsed_ms();
  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "m\tdegrees\tvalue\n" << args.m << '\t' << join(d) << '\t' << value << '\n';
      break;
    case Format::Plain:
      std::cout << value << '\n';
      break;
  }
  return 0;
}

struct Sigma1Args {
  Common common;
  int m = 0;
  int k = 0;
};

int run_sigma1(const Sigma1Args& args) {
  Stopwatch clock;
  const auto value = fetch(
      [&](char* b, size_t c, size_t* n) { return ps_sigma1_pairing(args.m, args.k, b, c, n); });
  Record record;
  record.command = "sigma1";
  record.inputs["m"] = args.m;
  record.inputs["k"] = args.k;
  record.result = value;
  record.timing_ms = clock.elapsed_ms();
  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "m\tk\tvalue\n" << args.m << '\t' << args.k << '\t' << value << '\n';
      break;
    case Format::Plain:
      std::cout << value << '\n';
      break;
  }
  return 0;
}

// ------------------------------------------------------------------ generic

int run_generic(const LengthsArgs& args) {
  Stopwatch clock;
  const auto lengths = parse_lengths(args.lengths);
  const size_t m = ps_lengths_size(lengths.get());
  int generic = 0;
  int empty = 0;
  check(ps_lengths_is_generic(lengths.get(), args.common.threads, &generic));
  check(ps_lengths_is_empty(lengths.get(), &empty));
  std::vector<int> witness(m);
  const auto radius = fetch([&](char* b, size_t c, size_t* n) {
    return ps_lengths_chamber_radius(lengths.get(), args.common.threads, b, c, n, witness.data());
  });
  std::string signs = "(";
  for (size_t i = 0; i < m; ++i) signs += std::string(i ? "," : "") + (witness[i] > 0 ? "+1" : "-1");
  signs += ")";

  Record record;
  record.command = "generic";
  record.inputs["lengths"] = lengths_json(lengths.get());
  record.result = generic != 0;
  record.extra["empty"] = empty != 0;
  record.extra["radius"] = radius;
  record.extra["witness"] = signs;
  record.timing_ms = clock.elapsed_ms();

  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "lengths\tgeneric\tempty\tradius\twitness\n"
                << lengths_text(lengths.get()) << '\t' << (generic ? "true" : "false") << '\t'
                << (empty ? "true" : "false") << '\t' << radius << '\t' << signs << '\n';
      break;
    case Format::Plain:
      std::cout << "generic " << (generic ? "true" : "false") << '\n'
                << "empty " << (empty ? "true" : "false") << '\n'
                << "radius " << radius << '\n'
                << "witness " << signs << '\n';
      break;
  }
  return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  Common common;
  int min_m = 3;
  int max_m = 8;
  int cases = 100;
  std::uint64_t seed = 1;
  bool corpus = false;
  std::string corpus_file;
};

int run_verify(const VerifyArgs& args) {
  Stopwatch clock;
  ps_report* raw = nullptr;
  Record record;
  record.command = "verify";
  if (args.corpus || !args.corpus_file.empty()) {
    const std::string path = args.corpus_file.empty() ? POLYSPACE_DEFAULT_CORPUS : args.corpus_file;
    record.inputs["corpus"] = true;
    if (!args.corpus_file.empty()) record.inputs["corpus-file"] = args.corpus_file;
    check(ps_verify_corpus(path.c_str(), args.common.threads, &raw));
  } else {
    record.inputs["min-m"] = args.min_m;
    record.inputs["max-m"] = args.max_m;
    record.inputs["cases"] = args.cases;
    record.inputs["seed"] = args.seed;
    const ps_verify_options options{args.min_m, args.max_m, args.cases, args.seed,
                                    args.common.threads};
    check(ps_verify_random(&options, &raw));
  }
  std::unique_ptr<ps_report, ReportDeleter> report(raw);

  std::vector<std::string> failures;
  for (size_t i = 0; i < ps_report_failure_count(report.get()); ++i) {
    failures.emplace_back(ps_report_failure(report.get(), i));
  }
  const bool ok = ps_report_ok(report.get()) != 0;
  record.result = ok;
  record.extra["cases"] = ps_report_cases(report.get());
  record.extra["checks"] = ps_report_checks(report.get());
  record.extra["failures"] = failures;
  record.timing_ms = clock.elapsed_ms();

  switch (args.common.parsed_format()) {
    case Format::Json:
      print_json(record);
      break;
    case Format::Tsv:
      std::cout << "cases\tchecks\tfailures\n"
                << ps_report_cases(report.get()) << '\t' << ps_report_checks(report.get()) << '\t'
                << failures.size() << '\n';
      break;
    case Format::Plain:
      std::cout << ps_report_cases(report.get()) << " cases, " << ps_report_checks(report.get())
                << " checks, " << failures.size() << " failures\n";
      break;
  }
  for (const auto& f : failures) std::cerr << "FAIL " << f << '\n';
  return ok ? 0 : 3;
}

int run(int argc, const char* const* argv);

// ------------------------------------------------------------------- replay

// Rebuilds the command line from a JSON record's inputs and re-runs it with
// JSON output, so a record can be checked against a fresh computation.
int run_replay(const std::string& path) {
  ordered_json record;
  try {
    if (path.empty() || path == "-") {
      record = ordered_json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw Failure{1, "cannot open record '" + path + "'"};
      record = ordered_json::parse(in);
    }
  } catch (const ordered_json::exception& e) {
    throw Failure{1, std::string("invalid record: ") + e.what()};
  }
  if (!record.contains("command") || !record["command"].is_string() ||
      !record.contains("inputs") || !record["inputs"].is_object()) {
    throw Failure{1, "record needs a 'command' string and an 'inputs' object"};
  }

  std::vector<std::string> args{"polyspace", record["command"].get<std::string>()};
  for (const auto& [key, value] : record["inputs"].items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) args.push_back("--" + key);
      continue;
    }
    args.push_back("--" + key);
    if (value.is_array()) {
      std::string text;
      for (size_t i = 0; i < value.size(); ++i) {
        if (i) text += ',';
        text += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
      }
      args.push_back(text);
    } else if (value.is_string()) {
      args.push_back(value.get<std::string>());
    } else {
      args.push_back(value.dump());
    }
  }
  args.push_back("--format");
  args.push_back("json");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact intersection pairings and volumes of polygon spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ps_version()));

  PairingArgs pairing;
  auto* cmd_pairing = app.add_subcommand("pairing", "Intersection pairing of c_1^k_1 ... c_m^k_m");
  cmd_pairing->add_option("--lengths", pairing.lengths, "Comma-separated rational lengths")
      ->required();
  cmd_pairing->add_option("--exponents", pairing.exponents, "Comma-separated exponents")
      ->required();
  cmd_pairing->add_option("--engine", pairing.engine, "Engine")
      ->check(CLI::IsMember({"explicit", "recursion", "kt", "yoshida", "all"}));
  add_common(cmd_pairing, pairing.common);

  LengthsArgs table;
  auto* cmd_table = app.add_subcommand("table", "Pairings for every multidegree");
  cmd_table->add_option("--lengths", table.lengths, "Comma-separated rational lengths")->required();
  add_common(cmd_table, table.common);

  LengthsArgs triangular;
  auto* cmd_triangular = app.add_subcommand("triangular", "Triangular subsets of {3..m}");
  cmd_triangular->add_option("--lengths", triangular.lengths, "Comma-separated rational lengths")
      ->required();
  add_common(cmd_triangular, triangular.common);

  VolumeArgs volume;
  auto* cmd_volume = app.add_subcommand("volume", "Symplectic volume");
  cmd_volume->add_option("--lengths", volume.lengths, "Comma-separated rational lengths")
      ->required();
  cmd_volume->add_option("--method", volume.method, "exact, series or partial")
      ->check(CLI::IsMember({"exact", "series", "partial"}));
  cmd_volume->add_option("--terms", volume.terms, "Series terms (method series)");
  cmd_volume->add_option("--exponents", volume.exponents, "Derivative orders (method partial)");
  add_common(cmd_volume, volume.common);

  EquilateralArgs equilateral;
  auto* cmd_equilateral = app.add_subcommand("equilateral", "Closed form on M_m, m odd");
  cmd_equilateral->add_option("--m", equilateral.m, "Number of edges")->required();
  cmd_equilateral->add_option("--degrees", equilateral.degrees, "Comma-separated degrees")
      ->required();
  add_common(cmd_equilateral, equilateral.common);

  Sigma1Args sigma1;
  auto* cmd_sigma1 = app.add_subcommand("sigma1", "sigma_1^k c_m^{m-3-k} on M_m");
  cmd_sigma1->add_option("--m", sigma1.m, "Number of edges")->required();
  cmd_sigma1->add_option("--k", sigma1.k, "Even power of sigma_1")->required();
  add_common(cmd_sigma1, sigma1.common);

  LengthsArgs generic;
  auto* cmd_generic = app.add_subcommand("generic", "Genericity, emptiness and chamber radius");
  cmd_generic->add_option("--lengths", generic.lengths, "Comma-separated rational lengths")
      ->required();
  add_common(cmd_generic, generic.common);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Cross-check engines and invariants");
  cmd_verify->add_option("--min-m", verify.min_m, "Smallest m");
  cmd_verify->add_option("--max-m", verify.max_m, "Largest m");
  cmd_verify->add_option("--cases", verify.cases, "Random cases");
  cmd_verify->add_option("--seed", verify.seed, "Sampler seed");
  cmd_verify->add_flag("--corpus", verify.corpus, "Replay the bundled regression corpus");
  cmd_verify->add_option("--corpus-file", verify.corpus_file, "Replay a corpus file");
  add_common(cmd_verify, verify.common);

  std::string record_path;
  auto* cmd_replay = app.add_subcommand("replay", "Re-run a JSON record and print a fresh one");
  cmd_replay->add_option("record", record_path, "Record file, or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cmd_pairing->parsed()) return run_pairing(pairing);
  if (cmd_table->parsed()) return run_table(table);
  if (cmd_triangular->parsed()) return run_triangular(triangular);
  if (cmd_volume->parsed()) return run_volume(volume);
  if (cmd_equilateral->parsed()) return run_equilateral(equilateral);
  if (cmd_sigma1->parsed()) return run_sigma1(sigma1);
  if (cmd_generic->parsed()) return run_generic(generic);
  if (cmd_verify->parsed()) return run_verify(verify);
  if (cmd_replay->parsed()) return run_replay(record_path);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
