#include "doctest.h"

#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bnsum/asymptotics.hpp"
#include "bnsum/error.hpp"
#include "bnsum/harness.hpp"

using namespace bnsum;
using namespace bnsum::harness;

TEST_CASE("format_double is %.17g") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(1e300) == "1.0000000000000001e+300");
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  std::atomic<int> count{0};
  CHECK_THROWS_AS(parallel_for(50,
                               [&](std::size_t i) {
                                 count++;
                                 if (i == 17) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  // nested calls run inline
  std::atomic<int> inner{0};
  parallel_for(4, [&](std::size_t) { parallel_for(5, [&](std::size_t) { inner++; }); });
  CHECK(inner == 20);
}

TEST_CASE("window envelopes and slope on a synthetic residual") {
  // |sin| zeros must not fake decay: the envelope sees the crest in each window
  const auto w = window_envelopes([](double r) { return std::sin(2.0 * r) / (r * r); }, 100.0, 800.0, 1.1, 0.01);
  REQUIRE(w.size() >= 20);
  CHECK(strictly_decreasing(w));
  CHECK(std::fabs(loglog_slope(w) + 2.0) <= 0.02);
  const auto flat = window_envelopes([](double) { return 1.0; }, 1.0, 2.0, 1.2, 0.01);
  CHECK_FALSE(strictly_decreasing(flat));
  CHECK_THROWS_AS(window_envelopes([](double) { return 1.0; }, 0.0, 2.0, 1.2, 0.1), DomainError);
}

TEST_CASE("sweep rows and CSV layout") {
  SweepOptions opt;
  opt.spec = {-1.5, 0.0, 0, 0};
  opt.r_start = 1.0;
  opt.r_end = 10.0;
  opt.points = 10;
  const auto rows = run_sweep(opt);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) {
    REQUIRE(row.hankel.has_value());
    CHECK_FALSE(row.lifted.has_value());
    CHECK(*row.diff_oracle_hankel == std::fabs(row.oracle - *row.hankel));
    CHECK(*row.diff_oracle_hankel <= 1e-8);
    CHECK(*row.diff_oracle_asym >= 0.0);
  }
  std::ostringstream os;
  write_sweep_csv(os, rows);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "r,oracle,hankel,lifted,asym,diff_oracle_hankel,diff_oracle_asym");
  int data = 0;
  while (std::getline(is, line)) {
    ++data;
    CHECK(line.find(",,") != std::string::npos);  // empty lifted column
  }
  CHECK(data == 10);

  opt.methods = {Method::oracle};
  for (const auto& row : run_sweep(opt)) {
    CHECK_FALSE(row.hankel.has_value());
    CHECK_FALSE(row.asym.has_value());
    CHECK_FALSE(row.diff_oracle_asym.has_value());
  }
}

TEST_CASE("report JSON carries every check with finite numbers") {
  const ValidationReport rep = run_validation(Suite::identities);
  CHECK(rep.all_passed());
  const auto j = nlohmann::json::parse(report_json(rep));
  CHECK(j["suite"] == "identities");
  CHECK(j["passed"] == true);
  REQUIRE(j["checks"].size() == rep.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c["residual"].is_number());
    CHECK(std::isfinite(c["residual"].get<double>()));
    CHECK(c["tolerance"].is_number());
  }
  CHECK(j.contains("environment"));
  CHECK_FALSE(j.contains("phase_resolution"));
  CHECK(parse_suite("all") == Suite::all);
  CHECK_FALSE(parse_suite("everything").has_value());
}

TEST_CASE("the shipped conventions file agrees with the library defaults") {
  std::ifstream in(BNSUM_DATA_DIR "/phase_conventions.json");
  REQUIRE(in.good());
  const auto j = nlohmann::json::parse(in);
  CHECK(j["oscillatory_phase"] == asymptotics::convention_name(asymptotics::kDefaultPhaseConvention));
  CHECK(j["minus_one_oscillatory_term"] == true);
  CHECK(j["second_derivative_below_minus_one"] == asymptotics::variant_name(asymptotics::kDefaultTableVariant));
  CHECK(j["oscillatory_phase_ratio"].get<double>() >= 2.0);
  CHECK(j["minus_one_ratio"].get<double>() >= 2.0);
  CHECK(j["second_derivative_ratio"].get<double>() >= 2.0);
}
