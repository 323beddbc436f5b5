#include <cmath>
#include <ostream>

#include "bnsum/asymptotics.hpp"
#include "bnsum/direct.hpp"
#include "bnsum/error.hpp"
#include "bnsum/harness.hpp"
#include "bnsum/quadrature.hpp"

namespace bnsum::harness {

namespace {

bool wants(const SweepOptions& opt, Method m) {
  for (Method x : opt.methods)
    if (x == m) return true;
  return false;
}

std::vector<double> grid(const SweepOptions& opt) {
  if (opt.points < 1) throw DomainError("sweep: points must be >= 1");
  if (!(opt.r_start >= 0.0) || !(opt.r_end >= opt.r_start))
    throw DomainError("sweep: need 0 <= r_start <= r_end");
  if (opt.log_grid && !(opt.r_start > 0.0)) throw DomainError("sweep: log grid needs r_start > 0");
  std::vector<double> r(static_cast<std::size_t>(opt.points));
  for (int i = 0; i < opt.points; ++i) {
    const double t = opt.points == 1 ? 0.0 : static_cast<double>(i) / (opt.points - 1);
    r[static_cast<std::size_t>(i)] =
        opt.log_grid ? opt.r_start * std::pow(opt.r_end / opt.r_start, t)
                     : opt.r_start + t * (opt.r_end - opt.r_start);
  }
  return r;
}

void put(std::ostream& out, const std::optional<double>& v) {
  if (v) out << format_double(*v);
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepOptions& opt) {
  validate(opt.spec);
  const std::vector<double> rs = grid(opt);
  std::vector<SweepRow> rows(rs.size());
  parallel_for(rs.size(), [&](std::size_t i) {
    const double r = rs[i];
    SweepRow row;
    row.r = r;
    row.oracle = direct::sum_series(opt.spec, r).value;
    if (wants(opt, Method::hankel) && opt.spec.a < 0.0) {
      row.hankel = quadrature::eval_hankel(opt.spec, r).value;
      row.diff_oracle_hankel = std::fabs(row.oracle - *row.hankel);
    }
    if (wants(opt, Method::lifted) && opt.spec.a >= 0.0)
      row.lifted = quadrature::eval_lifted(opt.spec, r).value;
    if (wants(opt, Method::asym) && r > 0.0) {
      row.asym = asymptotics::eval_asym(opt.spec, r).value;
      row.diff_oracle_asym = std::fabs(row.oracle - *row.asym);
    }
    rows[i] = row;
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "r,oracle,hankel,lifted,asym,diff_oracle_hankel,diff_oracle_asym\n";
  for (const SweepRow& row : rows) {
    out << format_double(row.r) << ',' << format_double(row.oracle) << ',';
    put(out, row.hankel);
    out << ',';
    put(out, row.lifted);
    out << ',';
    put(out, row.asym);
    out << ',';
    put(out, row.diff_oracle_hankel);
    out << ',';
    put(out, row.diff_oracle_asym);
    out << '\n';
  }
}

}  // namespace bnsum::harness
