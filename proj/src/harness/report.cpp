#include "json.hpp"

#include "bnsum/harness.hpp"

namespace bnsum::harness {

namespace {

using nlohmann::ordered_json;

ordered_json resolution_json(const PhaseResolution& pr) {
  ordered_json j;
  j["oscillatory_phase"] = asymptotics::convention_name(pr.phase);
  j["oscillatory_phase_ratio"] = pr.phase_ratio;
  j["minus_one_oscillatory_term"] = pr.minus_one_oscillatory_term;
  j["minus_one_ratio"] = pr.minus_one_ratio;
  j["second_derivative_below_minus_one"] = asymptotics::variant_name(pr.jddj_below_minus_one);
  j["second_derivative_ratio"] = pr.jddj_ratio;
  return j;
}

}  // namespace

std::string report_json(const ValidationReport& report) {
  ordered_json j;
  j["suite"] = suite_name(report.suite);
  j["passed"] = report.all_passed();
  ordered_json checks = ordered_json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  if (report.phase_resolution) j["phase_resolution"] = resolution_json(*report.phase_resolution);
  ordered_json env = ordered_json::object();
  for (const auto& [k, v] : report.environment) env[k] = v;
  j["environment"] = std::move(env);
  return j.dump(2);
}

std::string conventions_json(const PhaseResolution& resolution) {
  ordered_json j = resolution_json(resolution);
  j["fit_range"] = {50.0, 400.0};
  return j.dump(2) + "\n";
}

}  // namespace bnsum::harness
