#include "ssq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "ssq/errors.hpp"
#include "ssq/poly.hpp"
#include "ssq/primes.hpp"
#include "ssq/quintic.hpp"
#include "ssq/superelliptic.hpp"
#include "ssq/sweep.hpp"
#include "ssq/verify.hpp"

namespace ssq::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal failure tied to the prime being processed.
struct PrimeFailure : std::runtime_error {
  PrimeFailure(std::uint64_t p, const std::string& what)
      : std::runtime_error("p=" + std::to_string(p) + ": " + what) {}
};

enum class Format { kTable, kCsv, kJson };

// ---- row output --------------------------------------------------------------

using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

class RowWriter {
 public:
  RowWriter(std::ostream& out, Format format, std::vector<std::string> columns)
      : out_(out), format_(format), columns_(std::move(columns)) {
    for (const auto& c : columns_) widths_.push_back(std::max<std::size_t>(c.size(), 10));
  }

  void begin() {
    switch (format_) {
      case Format::kCsv:
        for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
        out_ << '\n';
        break;
      case Format::kJson: out_ << '['; break;
      case Format::kTable:
        for (std::size_t i = 0; i < columns_.size(); ++i) {
          out_ << (i ? "  " : "") << std::setw(static_cast<int>(widths_[i])) << columns_[i];
        }
        out_ << '\n';
        break;
    }
  }

  void row(const std::vector<Cell>& cells) {
    switch (format_) {
      case Format::kCsv:
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << text(cells[i], "");
        out_ << '\n';
        break;
      case Format::kJson: {
        Json obj = Json::object();
        for (std::size_t i = 0; i < cells.size(); ++i) obj[columns_[i]] = json(cells[i]);
        out_ << (rows_ ? ",\n  " : "\n  ") << obj.dump();
        break;
      }
      case Format::kTable:
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out_ << (i ? "  " : "") << std::setw(static_cast<int>(widths_[i])) << text(cells[i], "-");
        }
        out_ << '\n';
        break;
    }
    ++rows_;
    out_.flush();
  }

  void end() {
    if (format_ == Format::kJson) out_ << (rows_ ? "\n]\n" : "]\n");
  }

 private:
  static std::string text(const Cell& c, const char* null_text) {
    struct Visitor {
      const char* null_text;
      std::string operator()(std::monostate) const { return null_text; }
      std::string operator()(std::int64_t v) const { return std::to_string(v); }
      std::string operator()(double v) const {
        std::ostringstream os;
        os << std::fixed << std::setprecision(3) << v;
        return os.str();
      }
      std::string operator()(bool v) const { return v ? "true" : "false"; }
      std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{null_text}, c);
  }

  static Json json(const Cell& c) {
    struct Visitor {
      Json operator()(std::monostate) const { return nullptr; }
      Json operator()(std::int64_t v) const { return v; }
      Json operator()(double v) const { return std::round(v * 1000.0) / 1000.0; }
      Json operator()(bool v) const { return v; }
      Json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, c);
  }

  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
  std::vector<std::size_t> widths_;
  std::size_t rows_ = 0;
};

// ---- argument helpers ---------------------------------------------------------

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  return Format::kTable;
}

struct PrimeSelection {
  std::optional<std::uint64_t> prime;
  std::string range;
};

std::vector<std::uint64_t> select_primes(const PrimeSelection& sel, std::ostream& err) {
  if (sel.prime.has_value() == !sel.range.empty()) {
    throw UsageError("exactly one of --prime or --range is required");
  }
  if (sel.prime) {
    const std::uint64_t p = *sel.prime;
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    if (p <= PrimeField::kMinExclusive) throw UsageError("p must exceed 13, got " + std::to_string(p));
    if (p >= PrimeField::kMaxExclusive) throw UsageError("p must be below 2^31");
    return {p};
  }
  static const std::regex kRange(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(sel.range, m, kRange)) throw UsageError("--range expects A..B, got '" + sel.range + "'");
  std::uint64_t lo = 0, hi = 0;
  try {
    lo = std::stoull(m[1].str());
    hi = std::stoull(m[2].str());
  } catch (const std::exception&) {
    throw UsageError("--range bounds out of range");
  }
  if (lo > hi) throw UsageError("--range needs A <= B");
  if (hi >= PrimeField::kMaxExclusive) throw UsageError("--range upper bound must be below 2^31");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_in_range(lo, hi)) {
    if (p <= PrimeField::kMinExclusive) {
      err << "note: skipping p=" << p << " (requires p > 13)\n";
      continue;
    }
    out.push_back(p);
  }
  return out;
}

unsigned resolve_jobs(int jobs) {
  if (jobs > 0) return static_cast<unsigned>(jobs);
  return std::max(1U, std::thread::hardware_concurrency());
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Runs fn over the primes and streams rows in ascending order. Library errors
// are tagged with the prime that raised them.
template <class Fn>
void sweep(const std::vector<std::uint64_t>& primes, unsigned jobs, RowWriter& writer, Fn fn) {
  writer.begin();
  ordered_parallel_map(
      primes, jobs,
      [&](std::uint64_t p) -> std::vector<Cell> {
        try {
          return fn(p);
        } catch (const Error& e) {
          throw PrimeFailure(p, e.what());
        }
      },
      [&](std::uint64_t, const std::vector<Cell>& cells) { writer.row(cells); });
  writer.end();
}

std::string join_values(const std::vector<std::uint32_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

QuinticFamily parse_family(const std::string& s) {
  return s == "z10" ? QuinticFamily::Type6_Z10 : QuinticFamily::Type8_Z8;
}

QuinticFamily fixed_type(int t) {
  static constexpr QuinticFamily kTypes[] = {QuinticFamily::Type1_Fermat, QuinticFamily::Type2_Hurwitz,
                                             QuinticFamily::Type3, QuinticFamily::Type4_Z20,
                                             QuinticFamily::Type5_Z16};
  return kTypes[t - 1];
}

void require_verified(const VerifyReport& r) {
  if (r.ok()) return;
  std::string msg = "verification failed:";
  if (!r.criterion_mismatches.empty()) msg += " criterion/oracle lambda=" + join_values(r.criterion_mismatches);
  if (!r.g_mismatches.empty()) msg += " criterion/G lambda=" + join_values(r.g_mismatches);
  throw CrossCheckMismatch(msg);
}

// ---- subcommands --------------------------------------------------------------

struct SweepOptions {
  PrimeSelection sel;
  int jobs = 0;
  std::string format = "table";
  bool verify = false;
};

void cmd_count(const std::string& family_arg, const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  const auto primes = select_primes(opt.sel, err);
  const QuinticFamily family = parse_family(family_arg);
  RowWriter writer(out, parse_format(opt.format), {"p", "residue", "deg_g", "count", "elapsed_ms"});
  sweep(primes, resolve_jobs(opt.jobs), writer, [&](std::uint64_t p) {
    const auto start = std::chrono::steady_clock::now();
    const PrimeField field(p);
    const CountResult r = family == QuinticFamily::Type6_Z10 ? count_z10(field) : count_z8(field);
    if (opt.verify) {
      require_verified(verify_family(family, field));
    }
    const Cell deg = r.deg_g ? Cell(*r.deg_g) : Cell(std::monostate{});
    return std::vector<Cell>{static_cast<std::int64_t>(p), static_cast<std::int64_t>(r.residue), deg, r.count,
                             elapsed_ms(start)};
  });
}

void cmd_fixed(int type, const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  const auto primes = select_primes(opt.sel, err);
  const QuinticFamily family = fixed_type(type);
  RowWriter writer(out, parse_format(opt.format), {"p", "type", "superspecial"});
  sweep(primes, resolve_jobs(opt.jobs), writer, [&](std::uint64_t p) {
    const bool verdict = fixed_type_is_superspecial(family, p);
    if (opt.verify) {
      const bool second = family == QuinticFamily::Type2_Hurwitz
                              ? hurwitz_is_superspecial_via_table(p)
                              : oracle_is_superspecial(fixed_type_model(family, PrimeField(p)));
      if (second != verdict) throw CrossCheckMismatch("congruence and second path disagree");
    }
    return std::vector<Cell>{static_cast<std::int64_t>(p), static_cast<std::int64_t>(type), verdict};
  });
}

void cmd_verify(const std::string& family_arg, std::uint64_t p, const std::string& format, std::ostream& out) {
  if (!is_prime(p) || p <= PrimeField::kMinExclusive || p >= PrimeField::kMaxExclusive) {
    throw UsageError("--prime must be a prime with 13 < p < 2^31");
  }
  VerifyReport r;
  try {
    r = verify_family(parse_family(family_arg), PrimeField(p));
  } catch (const Error& e) {
    throw PrimeFailure(p, e.what());
  }
  const std::size_t mismatches = r.criterion_mismatches.size() + r.g_mismatches.size();
  if (format == "json") {
    Json j;
    j["family"] = family_arg;
    j["p"] = p;
    j["checked"] = r.checked;
    j["mismatches"] = mismatches;
    j["criterion_mismatches"] = r.criterion_mismatches;
    j["g_mismatches"] = r.g_mismatches;
    j["superspecial_lambda"] = r.superspecial;
    j["deg_g"] = r.deg_g ? Json(*r.deg_g) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "family:              " << family_arg << '\n'
        << "p:                   " << p << '\n'
        << "lambda checked:      " << r.checked << '\n'
        << "mismatches:          " << mismatches << '\n'
        << "superspecial lambda: " << r.superspecial.size();
    if (!r.superspecial.empty()) out << " [" << join_values(r.superspecial) << ']';
    out << '\n' << "deg G:               " << (r.deg_g ? std::to_string(*r.deg_g) : std::string("-")) << '\n';
  }
  if (mismatches != 0) {
    std::string detail = "oracle/criterion mismatch";
    if (!r.criterion_mismatches.empty()) detail += " lambda=" + join_values(r.criterion_mismatches);
    if (!r.g_mismatches.empty()) detail += " criterion/G lambda=" + join_values(r.g_mismatches);
    throw PrimeFailure(p, detail);
  }
}

std::vector<std::int64_t> parse_coefficients(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad coefficient '" + item + "' in --f");
    }
    if (used != item.size()) throw UsageError("bad coefficient '" + item + "' in --f");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--f needs at least one coefficient");
  return out;
}

void cmd_oracle(int n, const std::string& coeffs, std::uint64_t p, const std::string& format, std::ostream& out) {
  if (!is_prime(p) || p <= PrimeField::kMinExclusive || p >= PrimeField::kMaxExclusive) {
    throw UsageError("--p must be a prime with 13 < p < 2^31");
  }
  const PrimeField field(p);
  const DensePoly f(field, parse_coefficients(coeffs));
  if (n < 2 || static_cast<std::uint64_t>(n) % p == 0) throw UsageError("--n must be >= 2 and prime to p");
  if (f.degree() < 3) throw UsageError("f must have degree >= 3 mod p, got " + f.str());
  if (!is_separable(f)) {
    throw UsageError("f is not square-free mod " + std::to_string(p) + ": gcd(f, f') = " +
                     gcd(f, f.derivative()).str());
  }
  const OracleReport report = oracle_report(SuperellipticCurve(n, f));
  if (format == "json") {
    Json j;
    j["n"] = n;
    j["f"] = f.str();
    j["p"] = p;
    j["superspecial"] = report.superspecial;
    Json w = Json::array();
    for (const auto& t : report.witnesses) w.push_back({t.i, t.j, t.h, t.k});
    j["witnesses"] = w;
    out << j.dump(2) << '\n';
    return;
  }
  out << "curve: y^" << n << " = " << f.str() << " over F_" << p << '\n'
      << (report.superspecial ? "superspecial" : "not superspecial") << '\n';
  if (!report.witnesses.empty()) {
    out << "witnesses (i,j,h,k):";
    for (const auto& t : report.witnesses) {
      std::ostringstream os;
      os << t;
      out << ' ' << os.str();
    }
    out << '\n';
  }
}

void add_sweep_options(CLI::App* app, SweepOptions& opt) {
  app->add_option("--prime", opt.sel.prime, "Single prime p > 13");
  app->add_option("--range", opt.sel.range, "Inclusive prime range A..B");
  app->add_option("--jobs", opt.jobs, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  app->add_flag("--verify", opt.verify, "Cross-check every prime against the brute-force oracle (small p)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superspecial plane quintic curves over prime fields", "ssquintic"};
  app.require_subcommand(1);

  std::string count_family;
  SweepOptions count_opt;
  auto* count = app.add_subcommand("count", "Count isomorphism classes in the Z/10 or Z/8 family");
  count->add_option("--family", count_family, "Family")->required()->check(CLI::IsMember({"z10", "z8"}));
  add_sweep_options(count, count_opt);

  int fixed_type_arg = 0;
  SweepOptions fixed_opt;
  auto* fixed = app.add_subcommand("fixed", "Superspeciality of the zero-dimensional Types 1-5");
  fixed->add_option("--type", fixed_type_arg, "Type 1..5")->required()->check(CLI::Range(1, 5));
  add_sweep_options(fixed, fixed_opt);

  std::string verify_family_arg;
  std::uint64_t verify_p = 0;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "Compare the criterion with the oracle for every lambda");
  verify->add_option("--family", verify_family_arg, "Family")->required()->check(CLI::IsMember({"z10", "z8"}));
  verify->add_option("--prime", verify_p, "Prime p > 13")->required();
  verify->add_option("--format", verify_format, "Output format")->check(CLI::IsMember({"json", "table"}));

  int oracle_n = 0;
  std::string oracle_f;
  std::uint64_t oracle_p = 0;
  std::string oracle_format = "table";
  auto* oracle = app.add_subcommand("oracle", "Coefficient criterion for y^n = f(x)");
  oracle->add_option("--n", oracle_n, "Exponent n")->required();
  oracle->add_option("--f", oracle_f, "Coefficients of f, constant term first, comma separated")->required();
  oracle->add_option("--p,--prime", oracle_p, "Prime p > 13")->required();
  oracle->add_option("--format", oracle_format, "Output format")->check(CLI::IsMember({"json", "table"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count) cmd_count(count_family, count_opt, out, err);
    if (*fixed) cmd_fixed(fixed_type_arg, fixed_opt, out, err);
    if (*verify) cmd_verify(verify_family_arg, verify_p, verify_format, out);
    if (*oracle) cmd_oracle(oracle_n, oracle_f, oracle_p, oracle_format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PrimeFailure& e) {
    out.flush();
    err << "internal failure at " << e.what() << '\n';
    return kExitInternal;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "internal failure: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace ssq::cli
