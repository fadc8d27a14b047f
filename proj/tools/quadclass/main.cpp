#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "quadclass/output.hpp"
#include "quadclass/qform.hpp"
#include "quadclass/rayclass.hpp"
#include "quadclass/tables.hpp"
#include "quadclass/verify.hpp"

namespace {

using namespace quadclass;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr long kMaxDensityLimit = 10000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer parse_dimension(const std::string& text) {
  Integer d;
  if (text.empty() || d.set_str(text, 10) != 0) throw UsageError("d must be an integer, got '" + text + "'");
  return d;
}

int cmd_classmonoid(const std::string& arg) {
  const ClassMonoid monoid = class_monoid(parse_dimension(arg));
  std::cout << "d = " << monoid.d << ", delta = " << monoid.delta << " = " << monoid.f << "^2 * " << monoid.delta0 << '\n';
  std::cout << "fprime,disc,h\n";
  for (const auto& part : monoid.parts) {
    std::cout << part.conductor << ',' << part.conductor * part.conductor * monoid.delta0 << ',' << part.class_number << '\n';
  }
  std::cout << "total " << monoid.size << '\n';
  return kExitOk;
}

int cmd_multiplets(const std::string& arg, const std::string& format_name) {
  const auto format = parse_format(format_name);
  if (!format) throw UsageError("unknown format '" + format_name + "' (json, csv, md)");
  const Integer d = parse_dimension(arg);
  if (d > kMaxTableDimension) throw UsageError("d must be at most " + std::to_string(kMaxTableDimension));
  std::cout << render_multiplets(multiplet_report(d), *format);
  return kExitOk;
}

int cmd_table(const std::string& name_arg, std::optional<long> dmax, bool golden, const std::string& format_name) {
  const auto name = parse_table_name(name_arg);
  if (!name) throw UsageError("unknown table '" + name_arg + "' (classgroup, classfield, degeneration)");
  const auto format = parse_format(format_name);
  if (!format) throw UsageError("unknown format '" + format_name + "' (json, csv, md)");
  if (!dmax) {
    dmax = *name == TableName::ClassGroup ? 90 : *name == TableName::ClassField ? 15 : 500;
  }
  if (*dmax < 1 || *dmax > kMaxTableDimension) {
    throw UsageError("--dmax must lie in [1, " + std::to_string(kMaxTableDimension) + "]");
  }
  const OutputDocument doc = build_table(*name, *dmax);
  std::cout << render(doc, *format);
  if (!golden) return kExitOk;
  const GoldenCheck check = compare_with_golden(*name, doc, *dmax);
  for (const auto& m : check.mismatches) std::cerr << "golden mismatch: " << m << '\n';
  std::cerr << "golden: " << check.compared << " reference rows compared, " << check.mismatches.size() << " mismatches\n";
  return check.ok() ? kExitOk : kExitFailure;
}

int cmd_verify(const std::string& suite_arg, std::optional<long> dmax) {
  const auto suite = parse_suite(suite_arg);
  if (!suite) throw UsageError("unknown suite '" + suite_arg + "' (units, correspondence, degrees, uniqueness, density, all)");
  if (dmax) {
    const long cap = *suite == Suite::Density ? kMaxDensityLimit : kMaxTableDimension;
    if (*dmax < 4 || *dmax > cap) throw UsageError("--dmax must lie in [4, " + std::to_string(cap) + "]");
  }
  const VerifyReport report = run_verify(*suite, dmax);
  for (const auto& r : report.results) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
    if (!r.passed()) std::cout << ", " << r.failed << " failed";
    std::cout << ")\n";
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
  }
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_density(long n) {
  if (n < 4 || n > kMaxDensityLimit) throw UsageError("--N must lie in [4, " + std::to_string(kMaxDensityLimit) + "]");
  const DensityScan scan = density_scan(n);
  std::cout << "N " << n << '\n';
  std::cout << "count " << scan.count() << '\n';
  std::cout << "ratio " << scan.ratio << " = " << scan.ratio.get_d() << '\n';
  std::cout << "reference 1/48 = " << 1.0 / 48.0 << '\n';
  std::cout << "residue families 47, 83 mod 128: " << scan.family_checked << " checked, " << scan.family_violations.size()
            << " violations\n";
  return scan.family_violations.empty() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Class monoids, ray class degrees and degenerations attached to d = (d+1)(d-3) discriminants"};
  app.require_subcommand(1);

  std::string d_arg;
  auto* classmonoid = app.add_subcommand("classmonoid", "s(d) with its per-conductor class numbers");
  classmonoid->add_option("d", d_arg, "dimension d >= 4")->required();

  std::string format = "json";
  auto* multiplets = app.add_subcommand("multiplets", "predicted multiplets and field degrees for d");
  multiplets->add_option("d", d_arg, "dimension d >= 4")->required();
  multiplets->add_option("--format", format, "json, csv or md")->capture_default_str();

  std::string table_name;
  std::optional<long> dmax;
  bool golden = false;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "regenerate a reference table");
  table->add_option("name", table_name, "classgroup, classfield or degeneration")->required();
  table->add_option("--dmax", dmax, "largest d (at most 2000)");
  table->add_flag("--golden", golden, "compare against the embedded reference rows");
  table->add_option("--format", table_format, "json, csv or md")->capture_default_str();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "units, correspondence, degrees, uniqueness, density or all")->required();
  verify->add_option("--dmax", dmax, "largest d (N for density)");

  long density_n = 1000000;
  auto* density = app.add_subcommand("density", "density of d with a degeneration");
  density->add_option("--N", density_n, "scan 4 <= d <= N")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classmonoid) return cmd_classmonoid(d_arg);
    if (*multiplets) return cmd_multiplets(d_arg, format);
    if (*table) return cmd_table(table_name, dmax, golden, table_format);
    if (*verify) return cmd_verify(suite, dmax);
    if (*density) return cmd_density(density_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
