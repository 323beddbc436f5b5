#include <cmath>

#include "bnsum/error.hpp"
#include "bnsum/harness.hpp"

namespace bnsum::harness {

std::vector<Window> window_envelopes(const std::function<double(double)>& residual, double r_lo,
                                     double r_hi, double ratio, double step) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo) || !(ratio > 1.0) || !(step > 0.0))
    throw DomainError("window_envelopes: need 0 < r_lo < r_hi, ratio > 1, step > 0");
  std::vector<Window> windows;
  for (double lo = r_lo; lo * ratio <= r_hi * (1.0 + 1e-12); lo *= ratio)
    windows.push_back({lo, lo * ratio, 0.0});

  std::vector<double> samples;
  std::vector<std::size_t> owner;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto count = static_cast<long>(std::ceil((windows[w].r_hi - windows[w].r_lo) / step));
    for (long k = 0; k < count; ++k) {
      samples.push_back(windows[w].r_lo + k * step);
      owner.push_back(w);
    }
  }
  std::vector<double> values(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { values[i] = std::fabs(residual(samples[i])); });
  for (std::size_t i = 0; i < samples.size(); ++i)
    windows[owner[i]].envelope = std::max(windows[owner[i]].envelope, values[i]);
  return windows;
}

double loglog_slope(const std::vector<Window>& windows) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  double n = 0.0;
  for (const Window& w : windows) {
    if (!(w.envelope > 0.0)) continue;
    const double x = 0.5 * (std::log(w.r_lo) + std::log(w.r_hi));
    const double y = std::log(w.envelope);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    n += 1.0;
  }
  if (n < 2.0) throw DomainError("loglog_slope: need at least two nonzero windows");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool strictly_decreasing(const std::vector<Window>& windows) {
  for (std::size_t i = 1; i < windows.size(); ++i)
    if (!(windows[i].envelope < windows[i - 1].envelope)) return false;
  return true;
}

}  // namespace bnsum::harness
