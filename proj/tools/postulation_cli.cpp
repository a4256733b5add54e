// Command-line front end: expected counts, randomized rank verdicts,
// induction schedules, the built-in regression tables, and batch sweeps.
// Everything goes through the public C interface of the library.
//
// Exit codes: 0 verdict matches its classification (or all checks hold),
// 2 mismatch / failed check, 64 usage error, 65 data or parse error,
// 70 internal error.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "postulation/postulation.h"

namespace {

using nlohmann::json;

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct CliError {
  int exit_code;
  std::string message;
};

int exit_code_for(pst_status status) {
  switch (status) {
    case PST_OK:
      return kExitMatch;
    case PST_ERR_INVALID_ARGUMENT:
    case PST_ERR_RANGE:
    case PST_ERR_OVERFLOW:
      return kExitUsage;
    case PST_ERR_SAMPLING:
    case PST_ERR_UNSUPPORTED:
    case PST_ERR_INTERNAL:
      return kExitInternal;
  }
  return kExitInternal;
}

void check(pst_status status) {
  if (status != PST_OK)
    throw CliError{exit_code_for(status),
                   std::string(pst_status_name(status)) + ": " + pst_last_error()};
}

using ConfigPtr = std::unique_ptr<pst_config, decltype(&pst_config_free)>;
using VerdictPtr = std::unique_ptr<pst_verdict, decltype(&pst_verdict_free)>;

enum class Format { Human, JsonLines, Csv };

Format parse_format(const std::string& name) {
  if (name == "human") return Format::Human;
  if (name == "json-lines") return Format::JsonLines;
  if (name == "csv") return Format::Csv;
  throw CliError{kExitUsage, "unknown format: " + name};
}

// Component selection shared by expect, verify, and sweep records.
struct ComponentFlags {
  int64_t lines = 0;
  bool double_line = false;
  int32_t fat_r = -1;  // -1 = no extra fat space
  int32_t fat_m = -1;
  int64_t collinear = 0;  // one block of this many collinear points
  int64_t sundials = 0;
};

ConfigPtr build_config(int32_t n, int32_t d, const ComponentFlags& f) {
  ConfigPtr cfg(pst_config_new(n, d), &pst_config_free);
  if (!cfg) throw CliError{kExitUsage, pst_last_error()};
  if (f.double_line) check(pst_config_add_fat_space(cfg.get(), 1, 2, 1, PST_FREE));
  if (f.fat_r >= 0 || f.fat_m >= 0) {
    if (f.fat_r < 0 || f.fat_m < 0)
      throw CliError{kExitUsage, "a fat space needs both its dimension and its multiplicity"};
    check(pst_config_add_fat_space(cfg.get(), f.fat_r, f.fat_m, 1, PST_FREE));
  }
  if (f.lines > 0) check(pst_config_add_lines(cfg.get(), f.lines, PST_FREE));
  if (f.collinear > 0) check(pst_config_add_collinear(cfg.get(), f.collinear, 1, PST_FREE));
  if (f.sundials > 0) check(pst_config_add_sundials(cfg.get(), f.sundials, PST_FREE));
  return cfg;
}

std::string describe_components(const ComponentFlags& f) {
  std::vector<std::string> parts;
  if (f.double_line) parts.push_back("double line");
  if (f.fat_r >= 0)
    parts.push_back("fat space (dim " + std::to_string(f.fat_r) + ", mult " +
                     std::to_string(f.fat_m) + ")");
  if (f.lines > 0) parts.push_back(std::to_string(f.lines) + " line(s)");
  if (f.collinear > 0) parts.push_back(std::to_string(f.collinear) + " collinear point(s)");
  if (f.sundials > 0) parts.push_back(std::to_string(f.sundials) + " sundial(s)");
  if (parts.empty()) return "empty";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

json components_json(const ComponentFlags& f) {
  return json{{"lines", f.lines},       {"double_line", f.double_line},
              {"fat_r", f.fat_r},       {"fat_m", f.fat_m},
              {"collinear", f.collinear}, {"sundials", f.sundials}};
}

// The defect classifier covers one family: a single fat linear space plus
// plain lines. Returns false when the flags describe anything else.
bool classification_applies(const ComponentFlags& f, int32_t& r, int32_t& m) {
  if (f.sundials != 0 || f.collinear != 0) return false;
  if (f.double_line && f.fat_r >= 0) return false;  // two fat components
  if (f.double_line) {
    r = 1;
    m = 2;
    return true;
  }
  if (f.fat_r >= 0) {
    r = f.fat_r;
    m = f.fat_m;
    return true;
  }
  return false;  // plain lines: nothing to classify, certification decides
}

struct Classification {
  bool applicable = false;
  bool exceptional = false;
  int64_t predicted_virtual_defect = 0;
};

Classification classify(int32_t n, int32_t d, const ComponentFlags& f) {
  Classification c;
  int32_t r = 0;
  int32_t m = 0;
  if (!classification_applies(f, r, m)) return c;
  int32_t exceptional = 0;
  int64_t defect = 0;
  if (pst_classify_exception(n, d, r, m, f.lines, &exceptional, &defect) != PST_OK)
    return c;  // outside the classifier's domain: fall back to certification
  c.applicable = true;
  c.exceptional = exceptional != 0;
  c.predicted_virtual_defect = defect;
  return c;
}

uint64_t resolve_prime(uint64_t flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* env = std::getenv("POSTULATION_PRIME")) {
    std::string s(env);
    uint64_t value = 0;
    std::istringstream in(s);
    if (!(in >> value) || !in.eof() || value < 2)
      throw CliError{kExitUsage, "POSTULATION_PRIME must be a prime number, got '" + s + "'"};
    return value;
  }
  return pst_default_prime();
}

// Output sink: stdout by default, a file when --out is given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw CliError{kExitData, "cannot open output file: " + path};
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------- expect ----------------

struct ExpectArgs {
  int32_t n = 3;
  int32_t d = 1;
  ComponentFlags flags;
  std::string format = "human";
  std::string out_path;
};

int run_expect(const ExpectArgs& a) {
  Sink sink(a.out_path);
  std::ostream& out = sink.out();
  const Format format = parse_format(a.format);

  ConfigPtr cfg = build_config(a.n, a.d, a.flags);
  pst_expected_counts c{};
  check(pst_expected(cfg.get(), &c));
  const Classification cls = classify(a.n, a.d, a.flags);

  if (format == Format::JsonLines) {
    json rec{{"command", "expect"},
             {"version", pst_version()},
             {"n", a.n},
             {"d", a.d},
             {"components", components_json(a.flags)},
             {"ambient", c.ambient},
             {"conditions", c.conditions},
             {"expected_h0", c.expected_h0},
             {"expected_h1", c.expected_h1},
             {"virtual_h0", c.virtual_h0},
             {"exceptional", cls.exceptional},
             {"predicted_virtual_defect", cls.predicted_virtual_defect}};
    out << rec.dump() << '\n';
  } else if (format == Format::Csv) {
    out << "n,d,lines,double_line,fat_r,fat_m,collinear,sundials,"
           "ambient,conditions,expected_h0,expected_h1,virtual_h0,"
           "exceptional,predicted_virtual_defect\n";
    out << a.n << ',' << a.d << ',' << a.flags.lines << ',' << (a.flags.double_line ? 1 : 0)
        << ',' << a.flags.fat_r << ',' << a.flags.fat_m << ',' << a.flags.collinear << ','
        << a.flags.sundials << ',' << c.ambient << ',' << c.conditions << ',' << c.expected_h0
        << ',' << c.expected_h1 << ',' << c.virtual_h0 << ',' << (cls.exceptional ? 1 : 0) << ','
        << cls.predicted_virtual_defect << '\n';
  } else {
    out << "configuration: P^" << a.n << ", degree " << a.d << ", "
        << describe_components(a.flags) << '\n';
    out << "ambient forms:   " << c.ambient << '\n';
    out << "conditions:      " << c.conditions << '\n';
    out << "expected h0:     " << c.expected_h0 << '\n';
    out << "expected h1:     " << c.expected_h1 << '\n';
    out << "virtual h0:      " << c.virtual_h0 << '\n';
    if (cls.exceptional)
      out << "classification:  EXCEPTIONAL (known defective family, predicted virtual defect "
          << cls.predicted_virtual_defect << ")\n";
    else
      out << "classification:  no predicted defect\n";
  }
  return kExitMatch;
}

// ---------------- verify ----------------

struct VerifyArgs {
  int32_t n = 3;
  int32_t d = 1;
  ComponentFlags flags;
  int32_t trials = 3;
  uint64_t seed = 1;
  uint64_t prime = 0;  // 0 = environment override or built-in default
  std::string format = "human";
  std::string out_path;
};

struct VerifyResult {
  pst_expected_counts expected{};
  std::vector<int64_t> trial_ranks;
  int64_t best_rank = 0;
  int64_t observed_h0 = 0;
  int64_t observed_h1 = 0;
  int64_t defect = 0;
  int64_t virtual_defect = 0;
  bool certified = false;
  Classification cls;
  bool match = false;
  int64_t wall_ms = 0;
};

VerifyResult run_trials(int32_t n, int32_t d, const ComponentFlags& flags, int32_t trials,
                        uint64_t seed, uint64_t prime) {
  ConfigPtr cfg = build_config(n, d, flags);
  VerifyResult r;
  check(pst_expected(cfg.get(), &r.expected));
  r.cls = classify(n, d, flags);

  const auto start = std::chrono::steady_clock::now();
  pst_verdict* raw = nullptr;
  check(pst_verify(cfg.get(), trials, seed, prime, &raw));
  VerdictPtr v(raw, &pst_verdict_free);
  const auto stop = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

  const int32_t ran = pst_verdict_trials(v.get());
  for (int32_t i = 0; i < ran; ++i) r.trial_ranks.push_back(pst_verdict_trial_rank(v.get(), i));
  r.best_rank = pst_verdict_best_rank(v.get());
  r.observed_h0 = pst_verdict_observed_h0(v.get());
  r.observed_h1 = pst_verdict_observed_h1(v.get());
  r.defect = pst_verdict_defect(v.get());
  r.virtual_defect = pst_verdict_virtual_defect(v.get());
  r.certified = pst_verdict_certified(v.get()) != 0;

  if (r.cls.applicable && r.cls.exceptional)
    r.match = r.virtual_defect == r.cls.predicted_virtual_defect;
  else
    r.match = r.certified;
  return r;
}

json verdict_json(const VerifyResult& r) {
  return json{{"ambient", r.expected.ambient},
              {"conditions", r.expected.conditions},
              {"expected_h0", r.expected.expected_h0},
              {"expected_h1", r.expected.expected_h1},
              {"virtual_h0", r.expected.virtual_h0},
              {"trial_ranks", r.trial_ranks},
              {"best_rank", r.best_rank},
              {"observed_h0", r.observed_h0},
              {"observed_h1", r.observed_h1},
              {"defect", r.defect},
              {"virtual_defect", r.virtual_defect},
              {"certified", r.certified},
              {"exceptional", r.cls.exceptional},
              {"predicted_virtual_defect", r.cls.predicted_virtual_defect},
              {"match", r.match}};
}

const char* kVerifyCsvHeader =
    "index,n,d,lines,double_line,fat_r,fat_m,collinear,sundials,trials,seed,prime,"
    "ambient,conditions,expected_h0,expected_h1,virtual_h0,trial_ranks,best_rank,"
    "observed_h0,observed_h1,defect,virtual_defect,certified,exceptional,"
    "predicted_virtual_defect,match";

void write_verify_csv_row(std::ostream& out, int64_t index, int32_t n, int32_t d,
                          const ComponentFlags& f, int32_t trials, uint64_t seed, uint64_t prime,
                          const VerifyResult& r) {
  std::string ranks;
  for (size_t i = 0; i < r.trial_ranks.size(); ++i) {
    if (i > 0) ranks += ';';
    ranks += std::to_string(r.trial_ranks[i]);
  }
  out << index << ',' << n << ',' << d << ',' << f.lines << ',' << (f.double_line ? 1 : 0) << ','
      << f.fat_r << ',' << f.fat_m << ',' << f.collinear << ',' << f.sundials << ',' << trials
      << ',' << seed << ',' << prime << ',' << r.expected.ambient << ',' << r.expected.conditions
      << ',' << r.expected.expected_h0 << ',' << r.expected.expected_h1 << ','
      << r.expected.virtual_h0 << ',' << ranks << ',' << r.best_rank << ',' << r.observed_h0
      << ',' << r.observed_h1 << ',' << r.defect << ',' << r.virtual_defect << ','
      << (r.certified ? 1 : 0) << ',' << (r.cls.exceptional ? 1 : 0) << ','
      << r.cls.predicted_virtual_defect << ',' << (r.match ? 1 : 0) << '\n';
}

void write_verify_human(std::ostream& out, int32_t n, int32_t d, const ComponentFlags& f,
                        int32_t trials, uint64_t seed, uint64_t prime, const VerifyResult& r) {
  out << "configuration: P^" << n << ", degree " << d << ", " << describe_components(f) << '\n';
  out << "prime: " << prime << "  seed: " << seed << "  trials: " << trials << '\n';
  out << "ambient: " << r.expected.ambient << "  conditions: " << r.expected.conditions
      << "  expected h0: " << r.expected.expected_h0 << "  virtual h0: " << r.expected.virtual_h0
      << '\n';
  out << "trial ranks:";
  for (int64_t rank : r.trial_ranks) out << ' ' << rank;
  out << '\n';
  out << "best rank: " << r.best_rank << "  observed h0: " << r.observed_h0
      << "  observed h1: " << r.observed_h1 << '\n';
  out << "defect: " << r.defect << "  virtual defect: " << r.virtual_defect
      << "  certified: " << yes_no(r.certified) << '\n';
  if (r.cls.exceptional)
    out << "classification: EXCEPTIONAL (predicted virtual defect "
        << r.cls.predicted_virtual_defect << ")\n";
  else
    out << "classification: no predicted defect\n";
  if (!r.certified)
    out << "note: ranks short of the bound over GF(p) are evidence of a defect, not a proof;\n"
           "      characteristic zero can differ, so consider retrying with other primes.\n";
  out << "verdict: " << (r.match ? "match" : "MISMATCH") << '\n';
  out << "wall ms: " << r.wall_ms << '\n';
}

int run_verify(const VerifyArgs& a) {
  Sink sink(a.out_path);
  std::ostream& out = sink.out();
  const Format format = parse_format(a.format);
  const uint64_t prime = resolve_prime(a.prime);

  const VerifyResult r = run_trials(a.n, a.d, a.flags, a.trials, a.seed, prime);

  if (format == Format::JsonLines) {
    json rec{{"command", "verify"}, {"version", pst_version()},
             {"n", a.n},            {"d", a.d},
             {"components", components_json(a.flags)},
             {"trials", a.trials},  {"seed", a.seed},
             {"prime", prime},      {"verdict", verdict_json(r)},
             {"wall_ms", r.wall_ms}};
    out << rec.dump() << '\n';
  } else if (format == Format::Csv) {
    out << kVerifyCsvHeader << '\n';
    write_verify_csv_row(out, 0, a.n, a.d, a.flags, a.trials, a.seed, prime, r);
  } else {
    write_verify_human(out, a.n, a.d, a.flags, a.trials, a.seed, prime, r);
  }
  return r.match ? kExitMatch : kExitMismatch;
}

// ---------------- schedule ----------------

struct ScheduleArgs {
  int32_t n = 4;
  int32_t d = 5;
  std::string format = "human";
  std::string out_path;
};

int run_schedule(const ScheduleArgs& a) {
  Sink sink(a.out_path);
  std::ostream& out = sink.out();
  const Format format = parse_format(a.format);

  pst_schedule_report rep{};
  check(pst_schedule(a.n, a.d, &rep));

  if (format == Format::JsonLines) {
    json checks = json::array();
    for (int32_t i = 0; i < rep.num_checks; ++i)
      checks.push_back(json{{"name", rep.checks[i].name}, {"holds", rep.checks[i].holds != 0}});
    json rec{{"command", "schedule"},
             {"version", pst_version()},
             {"n", rep.n},
             {"d", rep.d},
             {"lines", rep.lines},
             {"collinear_points", rep.collinear_points},
             {"kept_lines", rep.kept_lines},
             {"sundial_pairs", rep.sundial_pairs},
             {"specialized_lines", rep.specialized_lines},
             {"trace_lines", rep.has_trace ? json(rep.trace_lines) : json()},
             {"trace_points", rep.has_trace ? json(rep.trace_points) : json()},
             {"ruling_lines", rep.has_ruling ? json(rep.ruling_lines) : json()},
             {"surface_points", rep.has_ruling ? json(rep.surface_points) : json()},
             {"checks", checks},
             {"all_hold", rep.all_hold != 0}};
    out << rec.dump() << '\n';
  } else if (format == Format::Csv) {
    out << "n,d,field,value\n";
    out << rep.n << ',' << rep.d << ",lines," << rep.lines << '\n';
    out << rep.n << ',' << rep.d << ",collinear_points," << rep.collinear_points << '\n';
    out << rep.n << ',' << rep.d << ",kept_lines," << rep.kept_lines << '\n';
    out << rep.n << ',' << rep.d << ",sundial_pairs," << rep.sundial_pairs << '\n';
    out << rep.n << ',' << rep.d << ",specialized_lines," << rep.specialized_lines << '\n';
    if (rep.has_trace) {
      out << rep.n << ',' << rep.d << ",trace_lines," << rep.trace_lines << '\n';
      out << rep.n << ',' << rep.d << ",trace_points," << rep.trace_points << '\n';
    }
    if (rep.has_ruling) {
      out << rep.n << ',' << rep.d << ",ruling_lines," << rep.ruling_lines << '\n';
      out << rep.n << ',' << rep.d << ",surface_points," << rep.surface_points << '\n';
    }
    for (int32_t i = 0; i < rep.num_checks; ++i)
      out << rep.n << ',' << rep.d << ",check:" << rep.checks[i].name << ','
          << (rep.checks[i].holds ? 1 : 0) << '\n';
    out << rep.n << ',' << rep.d << ",all_hold," << (rep.all_hold ? 1 : 0) << '\n';
  } else {
    out << "schedule for P^" << rep.n << ", degree " << rep.d << '\n';
    out << "line budget:        " << rep.lines << '\n';
    out << "collinear points:   " << rep.collinear_points << '\n';
    out << "kept lines:         " << rep.kept_lines << '\n';
    out << "sundial pairs:      " << rep.sundial_pairs << '\n';
    out << "specialized lines:  " << rep.specialized_lines << '\n';
    if (rep.has_trace) {
      out << "trace lines:        " << rep.trace_lines << '\n';
      out << "trace points:       " << rep.trace_points << '\n';
    }
    if (rep.has_ruling) {
      out << "ruling lines:       " << rep.ruling_lines << '\n';
      out << "surface points:     " << rep.surface_points << '\n';
    }
    out << "checks:\n";
    for (int32_t i = 0; i < rep.num_checks; ++i)
      out << "  " << (rep.checks[i].holds ? "ok  " : "FAIL") << "  " << rep.checks[i].name
          << '\n';
    out << "all checks hold: " << yes_no(rep.all_hold != 0) << '\n';
  }
  return rep.all_hold ? kExitMatch : kExitMismatch;
}

// ---------------- tables ----------------

// Regression data for the built-in budget tables. The expected columns are
// literal values; the computed columns are regenerated from the closed-form
// schedules, so any divergence is a genuine regression.
struct TableCell {
  const char* table;
  int32_t d;
  const char* column;
  int64_t expected;
};

constexpr TableCell kTableCells[] = {
    // Lines moved into the hyperplane, ambient dimension 4, d = 5..17.
    {"hyperplane-budget", 5, "specialized_lines", 7},
    {"hyperplane-budget", 6, "specialized_lines", 9},
    {"hyperplane-budget", 7, "specialized_lines", 2},
    {"hyperplane-budget", 8, "specialized_lines", 10},
    {"hyperplane-budget", 9, "specialized_lines", 9},
    {"hyperplane-budget", 10, "specialized_lines", 10},
    {"hyperplane-budget", 11, "specialized_lines", 17},
    {"hyperplane-budget", 12, "specialized_lines", 9},
    {"hyperplane-budget", 13, "specialized_lines", 30},
    {"hyperplane-budget", 14, "specialized_lines", 34},
    {"hyperplane-budget", 15, "specialized_lines", 17},
    {"hyperplane-budget", 16, "specialized_lines", 35},
    {"hyperplane-budget", 17, "specialized_lines", 32},
    // Ruling lines stay within the specialized-line budget, d = 5..9.
    {"ruling-budget", 5, "ruling_lines", 5},
    {"ruling-budget", 5, "specialized_lines", 7},
    {"ruling-budget", 6, "ruling_lines", 6},
    {"ruling-budget", 6, "specialized_lines", 9},
    {"ruling-budget", 7, "ruling_lines", 2},
    {"ruling-budget", 7, "specialized_lines", 2},
    {"ruling-budget", 8, "ruling_lines", 5},
    {"ruling-budget", 8, "specialized_lines", 10},
    {"ruling-budget", 9, "ruling_lines", 4},
    {"ruling-budget", 9, "specialized_lines", 9},
    // Sundial pairs plus ruling lines stay within the degree, d = 5..10.
    {"quadric-load", 5, "sundial_pairs", 0},
    {"quadric-load", 5, "ruling_lines", 5},
    {"quadric-load", 5, "load", 5},
    {"quadric-load", 6, "sundial_pairs", 0},
    {"quadric-load", 6, "ruling_lines", 6},
    {"quadric-load", 6, "load", 6},
    {"quadric-load", 7, "sundial_pairs", 5},
    {"quadric-load", 7, "ruling_lines", 2},
    {"quadric-load", 7, "load", 7},
    {"quadric-load", 8, "sundial_pairs", 2},
    {"quadric-load", 8, "ruling_lines", 5},
    {"quadric-load", 8, "load", 7},
    {"quadric-load", 9, "sundial_pairs", 4},
    {"quadric-load", 9, "ruling_lines", 4},
    {"quadric-load", 9, "load", 8},
    {"quadric-load", 10, "sundial_pairs", 5},
    {"quadric-load", 10, "ruling_lines", 4},
    {"quadric-load", 10, "load", 9},
};

int64_t computed_cell(const TableCell& cell) {
  pst_schedule_report rep{};
  check(pst_schedule(4, cell.d, &rep));
  const std::string column = cell.column;
  if (column == "specialized_lines") return rep.specialized_lines;
  if (column == "ruling_lines") return rep.ruling_lines;
  if (column == "sundial_pairs") return rep.sundial_pairs;
  if (column == "load") return rep.sundial_pairs + rep.ruling_lines;
  throw CliError{kExitInternal, "unknown table column"};
}

struct TablesArgs {
  std::string format = "human";
  std::string out_path;
};

int run_tables(const TablesArgs& a) {
  Sink sink(a.out_path);
  std::ostream& out = sink.out();
  const Format format = parse_format(a.format);

  bool all_ok = true;
  if (format == Format::Csv) out << "table,d,column,expected,computed,ok\n";
  std::string current;
  for (const TableCell& cell : kTableCells) {
    const int64_t computed = computed_cell(cell);
    const bool ok = computed == cell.expected;
    all_ok = all_ok && ok;
    if (format == Format::JsonLines) {
      json rec{{"command", "tables"}, {"version", pst_version()}, {"table", cell.table},
               {"d", cell.d},         {"column", cell.column},    {"expected", cell.expected},
               {"computed", computed}, {"ok", ok}};
      out << rec.dump() << '\n';
    } else if (format == Format::Csv) {
      out << cell.table << ',' << cell.d << ',' << cell.column << ',' << cell.expected << ','
          << computed << ',' << (ok ? 1 : 0) << '\n';
    } else {
      if (current != cell.table) {
        current = cell.table;
        out << current << " (ambient dimension 4):\n";
      }
      out << "  d=" << cell.d << "  " << cell.column << "  expected " << cell.expected
          << "  computed " << computed << "  " << (ok ? "ok" : "MISMATCH") << '\n';
    }
  }
  if (format == Format::Human) out << "all rows match: " << yes_no(all_ok) << '\n';
  return all_ok ? kExitMatch : kExitMismatch;
}

// ---------------- sweep ----------------

struct SweepArgs {
  std::string file;
  int32_t trials = 3;
  uint64_t seed = 1;
  uint64_t prime = 0;
  std::string format = "human";
  std::string out_path;
};

struct SweepRecord {
  int line_no = 0;
  int32_t n = -1;
  int32_t d = -1;
  ComponentFlags flags;
};

int64_t parse_int(const std::string& token, const std::string& text, int line_no) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw CliError{kExitData, "sweep file line " + std::to_string(line_no) +
                                  ": bad integer in '" + token + "'"};
  }
}

// Record format, one per line:
//   n=<int> d=<int> [lines=<int>] [double_line] [fat r=<int> m=<int>]
//   [collinear=<int>] [sundials=<int>]
// '#' starts a comment; blank lines are skipped.
std::vector<SweepRecord> parse_sweep_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitData, "cannot read sweep file: " + path};
  std::vector<SweepRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> toks;
    std::string tok;
    while (tokens >> tok) toks.push_back(tok);
    if (toks.empty()) continue;

    SweepRecord rec;
    rec.line_no = line_no;
    bool has_n = false;
    bool has_d = false;
    auto bad = [&](const std::string& msg) -> CliError {
      return CliError{kExitData, "sweep file line " + std::to_string(line_no) + ": " + msg};
    };
    for (size_t i = 0; i < toks.size(); ++i) {
      const std::string& t = toks[i];
      if (t == "double_line") {
        rec.flags.double_line = true;
      } else if (t == "fat") {
        if (i + 2 >= toks.size() || toks[i + 1].rfind("r=", 0) != 0 ||
            toks[i + 2].rfind("m=", 0) != 0)
          throw bad("'fat' must be followed by r=<int> m=<int>");
        rec.flags.fat_r = static_cast<int32_t>(parse_int(toks[i + 1], toks[i + 1].substr(2), line_no));
        rec.flags.fat_m = static_cast<int32_t>(parse_int(toks[i + 2], toks[i + 2].substr(2), line_no));
        i += 2;
      } else if (t.rfind("n=", 0) == 0) {
        rec.n = static_cast<int32_t>(parse_int(t, t.substr(2), line_no));
        has_n = true;
      } else if (t.rfind("d=", 0) == 0) {
        rec.d = static_cast<int32_t>(parse_int(t, t.substr(2), line_no));
        has_d = true;
      } else if (t.rfind("lines=", 0) == 0) {
        rec.flags.lines = parse_int(t, t.substr(6), line_no);
      } else if (t.rfind("collinear=", 0) == 0) {
        rec.flags.collinear = parse_int(t, t.substr(10), line_no);
      } else if (t.rfind("sundials=", 0) == 0) {
        rec.flags.sundials = parse_int(t, t.substr(9), line_no);
      } else {
        throw bad("unrecognized token '" + t + "'");
      }
    }
    if (!has_n || !has_d) throw bad("every record needs n=<int> and d=<int>");
    records.push_back(rec);
  }
  return records;
}

int run_sweep(const SweepArgs& a) {
  Sink sink(a.out_path);
  std::ostream& out = sink.out();
  const Format format = parse_format(a.format);
  const uint64_t prime = resolve_prime(a.prime);

  const std::vector<SweepRecord> records = parse_sweep_file(a.file);
  if (format == Format::Csv) out << kVerifyCsvHeader << '\n';

  int64_t matched = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& rec = records[i];
    const uint64_t rec_seed = pst_derive_seed(a.seed, static_cast<uint64_t>(i));
    VerifyResult r;
    try {
      r = run_trials(rec.n, rec.d, rec.flags, a.trials, rec_seed, prime);
    } catch (const CliError& e) {
      throw CliError{e.exit_code, "sweep file line " + std::to_string(rec.line_no) + ": " +
                                      e.message};
    }
    if (r.match) ++matched;

    if (format == Format::JsonLines) {
      json recj{{"command", "sweep"},  {"version", pst_version()},
                {"index", i},          {"line", rec.line_no},
                {"n", rec.n},          {"d", rec.d},
                {"components", components_json(rec.flags)},
                {"trials", a.trials},  {"seed", rec_seed},
                {"prime", prime},      {"verdict", verdict_json(r)},
                {"wall_ms", r.wall_ms}};
      out << recj.dump() << '\n';
    } else if (format == Format::Csv) {
      write_verify_csv_row(out, static_cast<int64_t>(i), rec.n, rec.d, rec.flags, a.trials,
                           rec_seed, prime, r);
    } else {
      out << '[' << i << "] n=" << rec.n << " d=" << rec.d << ' '
          << describe_components(rec.flags) << " -> rank " << r.best_rank << '/'
          << std::min(r.expected.ambient, r.expected.conditions) << " h0=" << r.observed_h0
          << " defect=" << r.defect << " certified=" << yes_no(r.certified)
          << (r.match ? " match" : " MISMATCH") << '\n';
    }
  }

  const int64_t mismatched = static_cast<int64_t>(records.size()) - matched;
  if (format == Format::JsonLines) {
    json summary{{"command", "sweep-summary"},
                 {"version", pst_version()},
                 {"records", records.size()},
                 {"matched", matched},
                 {"mismatched", mismatched},
                 {"seed", a.seed},
                 {"prime", prime}};
    out << summary.dump() << '\n';
  } else if (format == Format::Csv) {
    out << "# records=" << records.size() << " matched=" << matched
        << " mismatched=" << mismatched << '\n';
  } else {
    out << "records: " << records.size() << "  matched: " << matched
        << "  mismatched: " << mismatched << '\n';
  }
  return mismatched == 0 ? kExitMatch : kExitMismatch;
}

void add_component_flags(CLI::App* cmd, ComponentFlags& flags) {
  cmd->add_option("--lines", flags.lines, "number of generic lines")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--double-line", flags.double_line, "add one double line (2-fold line)");
  auto* fr = cmd->add_option("--fat-r", flags.fat_r, "dimension of an extra fat linear space")
                 ->check(CLI::NonNegativeNumber);
  auto* fm = cmd->add_option("--fat-m", flags.fat_m, "multiplicity of the extra fat space")
                 ->check(CLI::PositiveNumber);
  fr->needs(fm);
  fm->needs(fr);
  cmd->add_option("--collinear", flags.collinear,
                  "one block of this many simple points on a shared generic line")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--sundials", flags.sundials, "number of sundials")
      ->check(CLI::NonNegativeNumber);
}

void add_format_flags(CLI::App* cmd, std::string& format, std::string& out_path) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json-lines", "csv"}));
  cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"postulation: exact-rank verification of generic configurations of lines, "
               "fat linear spaces, collinear points, and sundials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pst_version()));

  ExpectArgs expect_args;
  auto* expect = app.add_subcommand("expect", "closed-form expected counts, no sampling");
  expect->add_option("--n", expect_args.n, "ambient projective dimension")->required();
  expect->add_option("--d", expect_args.d, "form degree")->required();
  add_component_flags(expect, expect_args.flags);
  add_format_flags(expect, expect_args.format, expect_args.out_path);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "randomized rank trials and a verdict");
  verify->add_option("--n", verify_args.n, "ambient projective dimension")->required();
  verify->add_option("--d", verify_args.d, "form degree")->required();
  add_component_flags(verify, verify_args.flags);
  verify->add_option("--trials", verify_args.trials, "independent samplings (best rank wins)")
      ->check(CLI::Range(1, 10000));
  verify->add_option("--seed", verify_args.seed, "base seed for deterministic sampling");
  verify->add_option("--prime", verify_args.prime,
                     "prime modulus (0 = POSTULATION_PRIME or the built-in default)");
  add_format_flags(verify, verify_args.format, verify_args.out_path);

  ScheduleArgs schedule_args;
  auto* schedule = app.add_subcommand("schedule", "induction budgets and feasibility checks");
  schedule->add_option("--n", schedule_args.n, "ambient projective dimension")->required();
  schedule->add_option("--d", schedule_args.d, "form degree")->required();
  add_format_flags(schedule, schedule_args.format, schedule_args.out_path);

  TablesArgs tables_args;
  auto* tables = app.add_subcommand(
      "tables", "regenerate the built-in budget tables and compare to stored values");
  add_format_flags(tables, tables_args.format, tables_args.out_path);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "run one verdict per record of a sweep file");
  sweep->add_option("file", sweep_args.file, "sweep file, one record per line")->required();
  sweep->add_option("--trials", sweep_args.trials, "independent samplings per record")
      ->check(CLI::Range(1, 10000));
  sweep->add_option("--seed", sweep_args.seed, "base seed; record i uses substream i");
  sweep->add_option("--prime", sweep_args.prime,
                    "prime modulus (0 = POSTULATION_PRIME or the built-in default)");
  add_format_flags(sweep, sweep_args.format, sweep_args.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (expect->parsed()) return run_expect(expect_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (schedule->parsed()) return run_schedule(schedule_args);
    if (tables->parsed()) return run_tables(tables_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
