// hdepth: batch front end for Hilbert depth computations and the audit grids.
//
// Exit status: 0 success, 1 mathematical failure (non-Hilbert input, a
// mismatch or an audit counterexample), 2 usage or parse error.

#include "hdepth/audit.hpp"
#include "hdepth/catalog.hpp"
#include "hdepth/depth.hpp"
#include "hdepth/json_io.hpp"
#include "hdepth/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using hdepth::BigInt;
using hdepth::Degree;
using hdepth::LaurentPolynomial;
using hdepth::RationalSeries;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv, Json };

struct SeriesInput {
  std::vector<std::string> power;  // {"n=7", "s=2"}
  std::string numerator;           // text form or polynomial JSON
  std::optional<std::int64_t> n;
};

void add_series_options(CLI::App* cmd, SeriesInput& in) {
  cmd->add_option("--power", in.power, "power of the maximal ideal, as n=N s=S")->expected(2);
  cmd->add_option("--numerator", in.numerator, "numerator as offset:c0,c1,... or polynomial JSON");
  cmd->add_option("--n", in.n, "denominator exponent")->check(CLI::NonNegativeNumber);
}

std::int64_t parse_assignment(const std::vector<std::string>& items, const std::string& key) {
  for (const auto& item : items) {
    if (item.rfind(key + "=", 0) != 0) continue;
    try {
      std::size_t used = 0;
      const std::string value = item.substr(key.size() + 1);
      const long long v = std::stoll(value, &used);
      if (used != value.size()) break;
      return v;
    } catch (const std::exception&) {
      break;
    }
  }
  throw UsageError("--power needs n=<int> s=<int>");
}

LaurentPolynomial parse_numerator(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("bad numerator JSON: ") + e.what());
    }
    return hdepth::laurent_from_json(j);
  }
  return hdepth::parse_laurent(text);
}

RationalSeries series_from(const SeriesInput& in) {
  if (!in.power.empty()) {
    if (!in.numerator.empty() || in.n) throw UsageError("--power excludes --numerator and --n");
    return hdepth::power_ideal_series(
        hdepth::PowerIdealParams(parse_assignment(in.power, "n"), parse_assignment(in.power, "s")));
  }
  if (in.numerator.empty() || !in.n) throw UsageError("need --power n=N s=S, or --numerator and --n");
  return RationalSeries(parse_numerator(in.numerator), *in.n);
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

std::string describe(const hdepth::PositivityCertificate& cert) {
  if (cert.is_positive()) return "positive (tail bound " + std::to_string(cert.tail_bound()) + ")";
  return "negative at T^" + std::to_string(cert.witness_degree()) + " (coefficient " + cert.witness_value().get_str() + ")";
}

void print_decomposition_text(std::ostream& out, const hdepth::HilbertDecomposition& dec) {
  for (const auto& part : dec.parts)
    out << "  (" << hdepth::to_string(part.numerator) << ") / (1 - T)^" << part.level << "\n";
}

void print_decomposition(std::ostream& out, const hdepth::HilbertDecomposition& dec, Format format) {
  switch (format) {
    case Format::Json:
      out << hdepth::to_json(dec).dump(2) << "\n";
      break;
    case Format::Csv:
      out << "level,numerator\n";
      for (const auto& part : dec.parts) out << part.level << "," << csv_quote(hdepth::to_text(part.numerator)) << "\n";
      break;
    case Format::Text:
      out << "min level " << dec.min_level << "\n";
      print_decomposition_text(out, dec);
      break;
  }
}

// hdepth ----------------------------------------------------------------------

int run_hdepth(const SeriesInput& in, bool with_decomposition, Format format) {
  const RationalSeries rs = series_from(in);
  hdepth::DepthReport report = hdepth::hdepth_via_numerator(rs);
  const std::int64_t via_mult = hdepth::hdepth_via_multiplication(rs);
  if (via_mult != report.hdepth) {
    std::cerr << "error: the two depth computations disagree (" << report.hdepth << " vs " << via_mult << ")\n";
    return kMathFailure;
  }
  if (with_decomposition) {
    report.decomposition = hdepth::decompose(rs);
    if (!hdepth::verify_decomposition(*report.decomposition, rs)) {
      std::cerr << "error: decomposition failed verification\n";
      return kMathFailure;
    }
  }

  auto& out = std::cout;
  switch (format) {
    case Format::Json: {
      json j{{"hdepth", report.hdepth},
             {"viaMultiplication", via_mult},
             {"n", rs.denom_exponent()},
             {"certificateAtDepth", hdepth::to_json(report.certificate_at_depth)},
             {"certificateAboveDepth",
              report.certificate_above_depth ? hdepth::to_json(*report.certificate_above_depth) : json(nullptr)}};
      if (report.decomposition) j["decomposition"] = hdepth::to_json(*report.decomposition);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      out << "hdepth,via_multiplication,n,at_depth,above_depth\n"
          << report.hdepth << "," << via_mult << "," << rs.denom_exponent() << ","
          << csv_quote(describe(report.certificate_at_depth)) << ","
          << (report.certificate_above_depth ? csv_quote(describe(*report.certificate_above_depth)) : "") << "\n";
      break;
    case Format::Text:
      out << "d=" << report.hdepth << "\n"
          << "series: (" << hdepth::to_string(rs.numerator()) << ") / (1 - T)^" << rs.denom_exponent() << "\n"
          << "via multiplication: " << via_mult << "\n"
          << "at depth " << report.hdepth << ": " << describe(report.certificate_at_depth) << "\n";
      if (report.certificate_above_depth)
        out << "at depth " << report.hdepth + 1 << ": " << describe(*report.certificate_above_depth) << "\n";
      if (report.decomposition) {
        out << "decomposition:\n";
        print_decomposition_text(out, *report.decomposition);
      }
      break;
  }
  return kOk;
}

// decompose -------------------------------------------------------------------

json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int run_decompose(const SeriesInput& in, const std::string& check_path, Format format) {
  const RationalSeries rs = series_from(in);
  if (!check_path.empty()) {
    const auto dec = hdepth::decomposition_from_json(read_json_file(check_path));
    const bool ok = hdepth::verify_decomposition(dec, rs);
    const std::int64_t d = hdepth::hdepth_via_numerator(rs).hdepth;
    if (format == Format::Json)
      std::cout << json{{"valid", ok}, {"minLevel", dec.min_level}, {"hdepth", d}}.dump(2) << "\n";
    else
      std::cout << (ok ? "valid" : "invalid") << " decomposition, min level " << dec.min_level << ", hdepth " << d
                << "\n";
    return ok ? kOk : kMathFailure;
  }
  const auto dec = hdepth::decompose(rs);
  if (!hdepth::verify_decomposition(dec, rs)) {
    std::cerr << "error: decomposition failed verification\n";
    return kMathFailure;
  }
  print_decomposition(std::cout, dec, format);
  return kOk;
}

// expand ----------------------------------------------------------------------

int run_expand(const SeriesInput& in, std::optional<Degree> max_degree, Format format) {
  const RationalSeries rs = series_from(in);
  const Degree start = rs.numerator().is_zero() ? 0 : rs.numerator().offset();
  const Degree top = max_degree.value_or(start + 10);
  if (top < start) throw UsageError("--max-degree is below the lowest degree " + std::to_string(start));
  const auto prefix = hdepth::expand(rs, top);
  switch (format) {
    case Format::Json: {
      json coeffs = json::array();
      for (const auto& c : prefix.coeffs) coeffs.push_back(c.get_str());
      std::cout << json{{"offset", prefix.offset}, {"coeffs", coeffs}}.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "degree,coefficient\n";
      for (Degree k = prefix.offset; k <= top; ++k) std::cout << k << "," << prefix.coefficient(k).get_str() << "\n";
      break;
    case Format::Text:
      for (Degree k = prefix.offset; k <= top; ++k) std::cout << "T^" << k << ": " << prefix.coefficient(k) << "\n";
      break;
  }
  return kOk;
}

// power-table -----------------------------------------------------------------

int run_power_table(std::int64_t n_min, std::int64_t n_max, std::int64_t s_min, std::int64_t s_max, bool cross_check,
                    hdepth::sweep::Execution exec, Format format) {
  if (n_min > n_max || s_min > s_max) throw UsageError("empty grid");
  const auto rows = hdepth::sweep::power_depth_table(n_min, n_max, s_min, s_max, exec, cross_check);
  std::size_t mismatches = 0;
  json table = json::array();
  if (format == Format::Csv) std::cout << "n,s,hdepth,closed_form,match\n";
  if (format == Format::Text) std::cout << "n\ts\thdepth\tceil(n/(s+1))\tmatch\n";
  for (const auto& row : rows) {
    const bool match = row.matches();
    mismatches += !match;
    switch (format) {
      case Format::Json:
        table.push_back({{"n", row.n}, {"s", row.s}, {"hdepth", row.computed}, {"closedForm", row.closed_form},
                         {"match", match}});
        break;
      case Format::Csv:
        std::cout << row.n << "," << row.s << "," << row.computed << "," << row.closed_form << "," << (match ? 1 : 0)
                  << "\n";
        break;
      case Format::Text:
        std::cout << row.n << "\t" << row.s << "\t" << row.computed << "\t" << row.closed_form << "\t"
                  << (match ? "yes" : "NO") << "\n";
        break;
    }
  }
  if (format == Format::Json) std::cout << json{{"rows", table}, {"mismatches", mismatches}}.dump(2) << "\n";
  if (format == Format::Text) std::cout << rows.size() << " rows, " << mismatches << " mismatches\n";
  return mismatches == 0 ? kOk : kMathFailure;
}

// syzygy ----------------------------------------------------------------------

int run_syzygy(std::int64_t n, std::int64_t r, std::int64_t u, std::int64_t k_max, Format format) {
  std::size_t mismatches = 0;
  json rows = json::array();
  if (format == Format::Csv) std::cout << "k,right,left,closed,match\n";
  if (format == Format::Text) std::cout << "k\tright\tleft\tclosed\n";
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const hdepth::SyzygyParams p(n, r, u, k);
    const BigInt right = hdepth::syzygy_hilbert_right(p);
    const BigInt left = hdepth::syzygy_hilbert_left(p);
    const BigInt closed = hdepth::syzygy_hilbert_closed(p);
    const bool match = right == left && left == closed;
    mismatches += !match;
    switch (format) {
      case Format::Json:
        rows.push_back({{"k", k}, {"right", right.get_str()}, {"left", left.get_str()}, {"closed", closed.get_str()},
                        {"match", match}});
        break;
      case Format::Csv:
        std::cout << k << "," << right << "," << left << "," << closed << "," << (match ? 1 : 0) << "\n";
        break;
      case Format::Text:
        std::cout << k << "\t" << right << "\t" << left << "\t" << closed << (match ? "" : "\tMISMATCH") << "\n";
        break;
    }
  }
  if (format == Format::Json) std::cout << json{{"rows", rows}, {"mismatches", mismatches}}.dump(2) << "\n";
  return mismatches == 0 ? kOk : kMathFailure;
}

// audit -----------------------------------------------------------------------

int run_audit(const std::string& name, const hdepth::audit::AuditGrid& grid, hdepth::sweep::Execution exec,
              std::size_t max_failures, Format format) {
  const auto& names = hdepth::audit::check_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown check '" + name + "'");
  if (!(grid.margin > 0)) throw UsageError("--margin must be positive");
  const auto report = hdepth::audit::run(name, grid, exec);
  switch (format) {
    case Format::Json: {
      json failures = json::array();
      for (const auto& f : report.failures)
        failures.push_back({{"parameters", f.parameters}, {"lhs", f.lhs}, {"rhs", f.rhs}});
      std::cout << json{{"check", report.check_name},
                        {"grid", report.grid_description},
                        {"points", report.total_points},
                        {"failures", failures},
                        {"notes", report.notes},
                        {"passed", report.passed()}}
                       .dump(2)
                << "\n";
      break;
    }
    case Format::Csv:
      std::cout << "parameters,lhs,rhs\n";
      for (const auto& f : report.failures)
        std::cout << csv_quote(f.parameters) << "," << csv_quote(f.lhs) << "," << csv_quote(f.rhs) << "\n";
      break;
    case Format::Text:
      std::cout << report.check_name << ": " << report.grid_description << "\n"
                << report.total_points << " points, " << report.failures.size() << " failures\n";
      for (std::size_t i = 0; i < report.failures.size() && i < max_failures; ++i) {
        const auto& f = report.failures[i];
        std::cout << "  FAIL " << f.parameters << ": lhs " << f.lhs << ", rhs " << f.rhs << "\n";
      }
      if (report.failures.size() > max_failures)
        std::cout << "  ... " << report.failures.size() - max_failures << " more\n";
      for (const auto& note : report.notes) std::cout << "note: " << note << "\n";
      break;
  }
  return report.passed() ? kOk : kMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert depth of graded modules from their Hilbert series"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  bool serial = false;
  app.add_flag("--serial", serial, "run grids on the serial reference path");

  SeriesInput series;

  auto* cmd_hdepth = app.add_subcommand("hdepth", "Hilbert depth with certificates");
  add_series_options(cmd_hdepth, series);
  bool with_decomposition = false;
  cmd_hdepth->add_flag("--decompose", with_decomposition, "also print a witness decomposition");

  auto* cmd_decompose = app.add_subcommand("decompose", "witness decomposition as a sum of Q_e / (1 - T)^e");
  add_series_options(cmd_decompose, series);
  std::string check_path;
  cmd_decompose->add_option("--check", check_path, "verify a JSON decomposition read from FILE (- for stdin)");

  auto* cmd_expand = app.add_subcommand("expand", "coefficients of the series up to a degree");
  add_series_options(cmd_expand, series);
  std::optional<Degree> max_degree;
  cmd_expand->add_option("--max-degree", max_degree, "last degree printed (default: lowest degree + 10)");

  auto* cmd_table = app.add_subcommand("power-table", "Hilbert depth of powers of the maximal ideal over a grid");
  std::int64_t n_min = 1, n_max = 20, s_min = 1, s_max = 4;
  cmd_table->add_option("--nmin", n_min)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_table->add_option("--nmax", n_max)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_table->add_option("--smin", s_min)->check(CLI::PositiveNumber)->capture_default_str();
  cmd_table->add_option("--smax", s_max)->check(CLI::PositiveNumber)->capture_default_str();
  bool cross_check = false;
  cmd_table->add_flag("--cross-check", cross_check, "also compute each depth through the multiplication route");

  auto* cmd_syzygy = app.add_subcommand("syzygy", "Hilbert function of a Koszul syzygy module, three ways");
  std::int64_t syz_n = 0, syz_r = 0, syz_u = 0, syz_kmax = 20;
  cmd_syzygy->add_option("--n", syz_n)->required();
  cmd_syzygy->add_option("--r", syz_r)->required();
  cmd_syzygy->add_option("--u", syz_u)->required();
  cmd_syzygy->add_option("--kmax", syz_kmax)->check(CLI::NonNegativeNumber)->capture_default_str();

  auto* cmd_audit = app.add_subcommand("audit", "run a falsification grid");
  std::string check_name;
  cmd_audit->add_option("check", check_name, "one of: " + [] {
    std::string all;
    for (const auto& n : hdepth::audit::check_names()) all += (all.empty() ? "" : ", ") + n;
    return all;
  }())->required();
  hdepth::audit::AuditGrid grid;
  cmd_audit->add_option("--max", grid.max, "common bound on n, s, r")->check(CLI::PositiveNumber);
  cmd_audit->add_option("--nmax", grid.n_max)->check(CLI::PositiveNumber);
  cmd_audit->add_option("--smax", grid.s_max)->check(CLI::PositiveNumber);
  cmd_audit->add_option("--kmax", grid.k_max)->check(CLI::NonNegativeNumber);
  cmd_audit->add_option("--lmax", grid.ell_max)->check(CLI::PositiveNumber);
  cmd_audit->add_option("--points", grid.points, "random points")->check(CLI::PositiveNumber);
  cmd_audit->add_option("--seed", grid.seed)->capture_default_str();
  cmd_audit->add_option("--margin", grid.margin)->capture_default_str();
  std::size_t max_failures = 20;
  cmd_audit->add_option("--show", max_failures, "failures listed in text output")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Format format = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;
  const auto exec = serial ? hdepth::sweep::Execution::Serial : hdepth::sweep::Execution::Parallel;

  try {
    if (*cmd_hdepth) return run_hdepth(series, with_decomposition, format);
    if (*cmd_decompose) return run_decompose(series, check_path, format);
    if (*cmd_expand) return run_expand(series, max_degree, format);
    if (*cmd_table) return run_power_table(n_min, n_max, s_min, s_max, cross_check, exec, format);
    if (*cmd_syzygy) return run_syzygy(syz_n, syz_r, syz_u, syz_kmax, format);
    if (*cmd_audit) return run_audit(check_name, grid, exec, max_failures, format);
  } catch (const hdepth::NotAHilbertSeries& e) {
    std::cerr << "error: not a Hilbert series: " << e.what() << "\n";
    return kMathFailure;
  } catch (const hdepth::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
