// bnsum: evaluate, sweep and validate sum_{l>=1} J_{l+m'}(r) J_{l+m}(r) (l+beta)^a.
//
// Exit codes: 0 ok, 1 validation failure, 2 usage or domain error,
// 3 numeric non-convergence, 4 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnsum/asymptotics.hpp"
#include "bnsum/direct.hpp"
#include "bnsum/error.hpp"
#include "bnsum/harness.hpp"
#include "bnsum/quadrature.hpp"

namespace {

using bnsum::EvalResult;
using bnsum::Method;
using bnsum::SeriesSpec;
using bnsum::harness::format_double;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// nlohmann prints doubles round-trip but not in %.17g; numbers are spliced
// in as raw text to keep output byte-stable.
std::string result_json(const EvalResult& res) {
  std::ostringstream os;
  os << "{\"value\":" << format_double(res.value) << ",\"err_est\":" << format_double(res.err_est)
     << ",\"method\":" << nlohmann::json(bnsum::method_name(res.method)).dump()
     << ",\"work\":" << res.work;
  if (res.imag_residue) os << ",\"imag_residue\":" << format_double(*res.imag_residue);
  if (!res.warnings.empty()) os << ",\"warnings\":" << nlohmann::json(res.warnings).dump();
  os << "}";
  return os.str();
}

void add_spec_flags(CLI::App* app, SeriesSpec& spec) {
  app->add_option("--a", spec.a, "signed weight exponent of (l+beta)^a (alpha = -a)")->required();
  app->add_option("--beta", spec.beta, "shift, beta > -1")->default_val(0.0);
  app->add_option("--m", spec.m, "order offset m >= 0")->default_val(0)->check(CLI::NonNegativeNumber);
  app->add_option("--mprime", spec.m_prime, "order offset m' >= 0")
      ->default_val(0)
      ->check(CLI::NonNegativeNumber);
}

EvalResult evaluate(const SeriesSpec& spec, double r, Method method, double tol) {
  bnsum::quadrature::QuadratureConfig cfg;
  switch (method) {
    case Method::oracle:
      return bnsum::direct::sum_series(spec, r, tol);
    case Method::hankel:
      cfg.abs_tol = std::min(cfg.abs_tol, tol);
      return bnsum::quadrature::eval_hankel(spec, r, cfg);
    case Method::exp2d:
      cfg.abs_tol = std::min(cfg.abs_tol, tol);
      return bnsum::quadrature::eval_exp2d(spec, r, cfg);
    case Method::lifted:
      cfg.abs_tol = std::min(cfg.abs_tol, tol);
      return bnsum::quadrature::eval_lifted(spec, r, cfg);
    case Method::asym:
      return bnsum::asymptotics::eval_asym(spec, r);
  }
  throw bnsum::DomainError("unknown method");
}

std::vector<Method> parse_methods(const std::string& csv) {
  std::vector<Method> out;
  std::stringstream ss(csv);
  std::string tag;
  while (std::getline(ss, tag, ',')) {
    const auto m = bnsum::parse_method(tag);
    if (!m || *m == Method::exp2d) throw CLI::ValidationError("--methods", "unknown or unsupported tag '" + tag + "'");
    out.push_back(*m);
  }
  if (out.empty()) throw CLI::ValidationError("--methods", "empty list");
  return out;
}

const char* osc_name(bnsum::asymptotics::Osc osc) {
  switch (osc) {
    case bnsum::asymptotics::Osc::constant:
      return "1";
    case bnsum::asymptotics::Osc::log_r:
      return "log r";
    case bnsum::asymptotics::Osc::sin2r:
      return "sin(2r+phase)";
    case bnsum::asymptotics::Osc::cos2r:
      return "cos(2r+phase)";
  }
  return "?";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neumann-type Bessel product series: evaluation and validation"};
  app.require_subcommand(1);

  SeriesSpec spec;
  double r = 0.0;
  std::string method_tag = "auto";
  double tol = bnsum::direct::kDefaultTol;
  auto* eval = app.add_subcommand("eval", "evaluate S at one r; prints a JSON line");
  add_spec_flags(eval, spec);
  eval->add_option("--r", r, "argument r >= 0")->required();
  eval->add_option("--method", method_tag, "oracle|hankel|exp2d|lifted|asym|auto")->default_val("auto");
  eval->add_option("--tol", tol, "absolute tolerance")->default_val(bnsum::direct::kDefaultTol);

  bnsum::harness::SweepOptions sweep_opt;
  std::string methods_csv = "oracle,hankel,lifted,asym";
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "tabulate methods over an r grid as CSV");
  add_spec_flags(sweep, sweep_opt.spec);
  sweep->add_option("--r-start", sweep_opt.r_start)->default_val(1.0);
  sweep->add_option("--r-end", sweep_opt.r_end)->default_val(10.0);
  sweep->add_option("--points", sweep_opt.points)->default_val(10);
  sweep->add_flag("--log-grid", sweep_opt.log_grid);
  sweep->add_option("--methods", methods_csv, "comma-separated subset of oracle,hankel,lifted,asym")
      ->default_val(methods_csv);
  sweep->add_option("--out", out_path, "CSV path; '-' for standard output")->required();

  bool show_terms = false;
  auto* asym = app.add_subcommand("asym", "evaluate the large-r form");
  add_spec_flags(asym, spec);
  asym->add_option("--r", r)->required();
  asym->add_flag("--show-terms", show_terms, "list the terms of the form");

  std::string suite_tag = "all";
  std::string report_path;
  std::string conventions_path;
  auto* validate = app.add_subcommand("validate", "run validation suites; exit 1 on any failure");
  validate->add_option("--suite", suite_tag, "kernel|representations|asymptotics|identities|all")
      ->default_val("all");
  validate->add_option("--report", report_path, "JSON report path; '-' for standard output");
  validate->add_option("--conventions", conventions_path,
                       "write the oracle-selected conventions file and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      Method method;
      if (method_tag == "auto") {
        method = r <= 50.0 ? Method::oracle : Method::asym;
      } else if (auto m = bnsum::parse_method(method_tag)) {
        method = *m;
      } else {
        std::cerr << "eval: unknown method '" << method_tag << "'\n";
        return kExitUsage;
      }
      std::cout << result_json(evaluate(spec, r, method, tol)) << '\n';
      return kExitOk;
    }
    if (*sweep) {
      sweep_opt.methods = parse_methods(methods_csv);
      const auto rows = bnsum::harness::run_sweep(sweep_opt);
      if (out_path == "-") {
        bnsum::harness::write_sweep_csv(std::cout, rows);
      } else {
        std::ostringstream os;
        bnsum::harness::write_sweep_csv(os, rows);
        write_file(out_path, os.str());
      }
      return kExitOk;
    }
    if (*asym) {
      bnsum::validate(spec);
      const auto form = bnsum::asymptotics::asymptotic_form(spec);
      const EvalResult res = bnsum::asymptotics::eval_asym(spec, r);
      std::cout << result_json(res) << '\n';
      if (show_terms) {
        std::cout << "form: " << form.label << '\n';
        for (const auto& t : form.terms)
          std::cout << "  " << format_double(t.coeff) << " * r^" << format_double(-t.power) << " * "
                    << osc_name(t.osc) << "  phase=" << format_double(t.phase + 0.0)
                    << "  value=" << format_double(bnsum::asymptotics::eval_term(t, r)) << '\n';
        std::cout << "  remainder exponent " << format_double(-form.error_exponent) << '\n';
      }
      return kExitOk;
    }
    if (*validate) {
      if (!conventions_path.empty()) {
        write_file(conventions_path,
                   bnsum::harness::conventions_json(bnsum::harness::resolve_phases()));
        return kExitOk;
      }
      const auto suite = bnsum::harness::parse_suite(suite_tag);
      if (!suite) {
        std::cerr << "validate: unknown suite '" << suite_tag << "'\n";
        return kExitUsage;
      }
      const auto report = bnsum::harness::run_validation(*suite);
      for (const auto& c : report.checks)
        std::cerr << (c.pass ? "pass " : "FAIL ") << c.name << "  residual=" << format_double(c.residual)
                  << " tol=" << format_double(c.tolerance) << '\n';
      const std::string json = bnsum::harness::report_json(report) + "\n";
      if (report_path.empty() || report_path == "-") {
        std::cout << json;
      } else {
        write_file(report_path, json);
      }
      return report.all_passed() ? kExitOk : kExitFail;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const bnsum::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const bnsum::ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
