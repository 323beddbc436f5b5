#pragma once

// Cross-validation harness: sweeps, residual envelopes, the validation
// suites and their report.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnsum/asymptotics.hpp"
#include "bnsum/series.hpp"

namespace bnsum::harness {

/// Worker count: BNSUM_THREADS if set and positive, else hardware concurrency.
int thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. The first
/// exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// printf("%.17g").
std::string format_double(double x);

// ---- envelopes -------------------------------------------------------------

struct Window {
  double r_lo = 0.0;
  double r_hi = 0.0;
  double envelope = 0.0;  // max |residual| over samples in [r_lo, r_hi)
};

/// Geometric windows r_lo * ratio^k covering [r_lo, r_hi], sampled every
/// `step` in r. residual must be thread-safe.
std::vector<Window> window_envelopes(const std::function<double(double)>& residual, double r_lo,
                                     double r_hi, double ratio, double step);

/// Least-squares slope of log(envelope) against log(geometric window centre).
double loglog_slope(const std::vector<Window>& windows);

bool strictly_decreasing(const std::vector<Window>& windows);

// ---- sweep -----------------------------------------------------------------

struct SweepOptions {
  SeriesSpec spec;
  double r_start = 1.0;
  double r_end = 10.0;
  int points = 10;
  bool log_grid = false;
  std::vector<Method> methods = {Method::oracle, Method::hankel, Method::lifted, Method::asym};
};

struct SweepRow {
  double r = 0.0;
  double oracle = 0.0;
  std::optional<double> hankel;
  std::optional<double> lifted;
  std::optional<double> asym;
  std::optional<double> diff_oracle_hankel;
  std::optional<double> diff_oracle_asym;
};

/// Methods that do not apply (hankel for a >= 0, lifted for a < 0, asym at
/// r = 0) are left empty. The oracle column is always computed.
std::vector<SweepRow> run_sweep(const SweepOptions& opt);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// ---- validation ------------------------------------------------------------

enum class Suite { kernel, representations, asymptotics, identities, all };
std::optional<Suite> parse_suite(const std::string& name);
const char* suite_name(Suite suite);

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Outcome of fitting the competing published forms against the oracle.
struct PhaseResolution {
  asymptotics::PhaseConvention phase = asymptotics::PhaseConvention::mu;
  double phase_ratio = 0.0;  // worse / better residual envelope
  bool minus_one_oscillatory_term = true;
  double minus_one_ratio = 0.0;
  asymptotics::TableVariant jddj_below_minus_one = asymptotics::TableVariant::corrected;
  double jddj_ratio = 0.0;
};

struct ValidationReport {
  Suite suite = Suite::all;
  std::vector<Check> checks;
  std::optional<PhaseResolution> phase_resolution;
  std::vector<std::pair<std::string, std::string>> environment;

  bool all_passed() const;
};

ValidationReport run_validation(Suite suite);

/// Fits both candidates of each open convention over r in [50, 400].
PhaseResolution resolve_phases();

std::string report_json(const ValidationReport& report);
/// Generated constants file content for the resolved conventions.
std::string conventions_json(const PhaseResolution& resolution);

}  // namespace bnsum::harness
