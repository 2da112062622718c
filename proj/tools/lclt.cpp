// lclt: certify and check local central limit theorems for rational generating functions.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lclt/errors.hpp"
#include "lclt/examples.hpp"
#include "lclt/gfparse.hpp"
#include "lclt/oracle.hpp"
#include "lclt/report.hpp"
#include "lclt/smoothacsv.hpp"

namespace {

using namespace lclt;

constexpr int kExitProved = 0;
constexpr int kExitError = 1;
constexpr int kExitConditional = 2;
constexpr int kExitRefuted = 3;

struct InputOptions {
  std::string expression;
  std::string example;
  long d = 1;
  long l = 2;
  std::vector<long> omega;
  std::vector<long> lambda;
  bool no_set_z1 = false;
  bool combinatorial = false;
  std::string precision = "1e-30";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("expression", in.expression, "generating function, e.g. \"1/(1 - z1*t - t^2/(1-t))\"");
  cmd->add_option("--example", in.example, "shipped example family (see 'lclt example')");
  cmd->add_option("--d", in.d, "number of tracked variables for the example");
  cmd->add_option("--l", in.l, "alphabet size for the strings example");
  cmd->add_option("--omega", in.omega, "tracked summands (compositions_restricted)")->delimiter(',');
  cmd->add_option("--lambda", in.lambda, "allowed summands (compositions_restricted)")->delimiter(',');
  cmd->add_flag("--no-set-z1", in.no_set_z1, "permutations: keep z1 tracked");
  cmd->add_flag("--combinatorial", in.combinatorial, "assert that the series has non-negative coefficients");
  cmd->add_option("--precision", in.precision, "width of the isolating interval of rho (rational)");
}

RationalGF load(const InputOptions& in) {
  if (in.expression.empty() == in.example.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of an expression or --example");
  RationalGF gf;
  if (!in.example.empty()) {
    ExampleSpec spec;
    spec.family = in.example;
    spec.d = in.d;
    spec.l = in.l;
    spec.omega = in.omega;
    spec.lambda = in.lambda;
    spec.set_z1 = !in.no_set_z1;
    gf = build_example(spec);
  } else {
    gf = parse_gf(in.expression);
  }
  if (in.combinatorial) {
    gf.combinatorial = true;
    gf.combinatorial_inferred = false;
  }
  return gf;
}

Rational precision_of(const InputOptions& in) {
  Rational p = parse_rational(in.precision);
  if (sgn(p) <= 0) throw Error(ErrorCode::InvalidArgument, "precision must be positive");
  return p;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Proved: return kExitProved;
    case Verdict::Conditional: return kExitConditional;
    case Verdict::Refuted:
    case Verdict::Degenerate: return kExitRefuted;
  }
  return kExitError;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

long default_N(std::size_t d) { return d <= 2 ? 150 : 60; }

std::string plot_path(const std::string& csv, long n) {
  std::string stem = csv;
  if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".csv") stem.resize(stem.size() - 4);
  return stem + "_n" + std::to_string(n) + ".csv";
}

int run_analyze(const InputOptions& in, const std::string& json_path) {
  RationalGF gf;
  try {
    gf = load(in);
    LCLTCertificate cert = assemble_certificate(gf, precision_of(in));
    auto lu = lu_report(gf, cert);
    write_json(json_path, certificate_json(gf, cert, lu));
    std::cout << certificate_summary(gf, cert);
    if (lu) std::cout << "LU factorization: " << (lu->verified ? "verified" : "not verified " + lu->failure) << "\n";
    if (cert.verdict == Verdict::Degenerate)
      std::cerr << error_code_name(ErrorCode::DegenerateHessian) << ": det H = 0; " << kSliceHint << "\n";
    return exit_code(cert.verdict);
  } catch (const Error& e) {
    write_json(json_path, error_json(e));
    throw;
  }
}

int run_expand(const InputOptions& in, long N, const std::string& csv) {
  RationalGF gf = load(in);
  if (N < 0) N = default_N(gf.d());
  CoefficientTensor tensor = expand(gf, N);
  if (!csv.empty()) emit_expansion(tensor, csv);
  std::cout << "n,total\n";
  for (long n = 0; n <= N; ++n) std::cout << n << "," << tensor.slice_total(n).get_str() << "\n";
  return 0;
}

int run_compare(const InputOptions& in, long N, std::vector<long> ns, const std::string& csv) {
  RationalGF gf = load(in);
  if (N < 0) N = default_N(gf.d());
  if (ns.empty()) ns.push_back(N);
  for (long n : ns)
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "slice indices must be positive");
  N = std::max(N, *std::max_element(ns.begin(), ns.end()));

  LCLTCertificate cert = assemble_certificate(gf, precision_of(in));
  CoefficientTensor tensor = expand(gf, N);
  bool model = cert.nondegenerate == NondegenerateStatus::Proved;
  std::size_t d = gf.d();

  std::string header = "n,gap,rounding_bound";
  for (std::size_t k = 1; k <= d; ++k) header += ",peak" + std::to_string(k);
  for (std::size_t k = 1; k <= d; ++k) header += ",mean" + std::to_string(k) + "_over_n";
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i; j <= d; ++j) header += ",cov" + std::to_string(i) + std::to_string(j) + "_over_n";
  std::vector<std::string> rows;
  for (long n : ns) {
    std::string row = std::to_string(n);
    if (model) {
      GapValue gap = lclt_gap(tensor, cert, n);
      row += "," + format_double(gap.value) + "," + format_double(gap.rounding_bound);
    } else {
      row += ",,";
    }
    EmpiricalStats stats = empirical_stats(tensor, n);
    for (long p : stats.peak_index) row += "," + std::to_string(p);
    for (double m : stats.mean) row += "," + format_double(m / static_cast<double>(n));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) row += "," + format_double(stats.covariance[i][j] / static_cast<double>(n));
    rows.push_back(row);
    if (!csv.empty()) emit_plot_data(tensor, &cert, n, plot_path(csv, n));
  }
  std::cout << header << "\n";
  for (const auto& r : rows) std::cout << r << "\n";
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) throw Error(ErrorCode::Io, "cannot open '" + csv + "' for writing");
    out << header << "\n";
    for (const auto& r : rows) out << r << "\n";
  }
  std::cout << "verdict: " << to_string(cert.verdict) << "\n";
  if (!model) {
    std::cerr << error_code_name(ErrorCode::DegenerateHessian) << ": no model density; " << kSliceHint << "\n";
    return kExitRefuted;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified local central limit theorems for rational generating functions"};
  app.require_subcommand(1);

  InputOptions analyze_in, expand_in, compare_in;
  std::string json_path, expand_csv, compare_csv;
  long expand_N = -1, compare_N = -1;
  std::vector<long> compare_ns;

  auto* analyze = app.add_subcommand("analyze", "certify the limit theorem and write the certificate");
  add_input_options(analyze, analyze_in);
  analyze->add_option("--json", json_path, "certificate JSON output path");

  auto* expand_cmd = app.add_subcommand("expand", "exact series coefficients");
  add_input_options(expand_cmd, expand_in);
  expand_cmd->add_option("-N", expand_N, "largest t-degree (default 150 for d <= 2, else 60)");
  expand_cmd->add_option("--csv", expand_csv, "coefficient CSV output path");

  auto* compare = app.add_subcommand("compare", "compare exact coefficients with the model density");
  add_input_options(compare, compare_in);
  compare->add_option("-N", compare_N, "largest t-degree to expand");
  compare->add_option("-n", compare_ns, "slices to compare, e.g. 25,100,400")->delimiter(',');
  compare->add_option("--csv", compare_csv, "gap table CSV; plot data goes to <stem>_n<k>.csv");

  auto* example = app.add_subcommand("example", "list the shipped example families");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_in, json_path);
    if (*expand_cmd) return run_expand(expand_in, expand_N, expand_csv);
    if (*compare) return run_compare(compare_in, compare_N, compare_ns, compare_csv);
    if (*example) {
      std::cout << list_examples();
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
