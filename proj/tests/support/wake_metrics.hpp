#pragma once

// Measurements on simulated wakes: arm angle, transverse wavelength and
// line-integrated arm contrast against background lines.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "wakesim/field.hpp"

namespace metrics {

inline constexpr double pi = 3.14159265358979323846;

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n, x.size()};
}

struct WedgeMeasurement {
  double port_deg = 0.0;
  double starboard_deg = 0.0;
  double half_angle_deg() const { return 0.5 * (port_deg + starboard_deg); }
  std::size_t columns = 0;
};

/// Ship moving along +x at (x0, y0). For every column between `from` and `to`
/// metres astern, the row of largest |Z| on each side of the track (within
/// 40 degrees) is taken as the arm position; a straight line through those
/// points gives the arm angle.
inline WedgeMeasurement wedge_angle(const wakesim::ScalarField2D& z, double x0, double y0, double from,
                                    double to) {
  const auto& g = z.grid();
  std::vector<double> d, port, star;
  for (std::size_t ix = 0; ix < g.nx; ++ix) {
    const double back = x0 - g.x(ix);
    if (back < from || back > to) continue;
    const double reach = back * std::tan(40.0 * pi / 180.0);
    double best_p = -1, best_s = -1, yp = 0, ys = 0;
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
      const double off = g.y(iy) - y0;
      const double a = std::abs(z(ix, iy));
      if (off > 0 && off <= reach && a > best_p) best_p = a, yp = off;
      if (off < 0 && -off <= reach && a > best_s) best_s = a, ys = -off;
    }
    if (best_p <= 0 || best_s <= 0) continue;
    d.push_back(back);
    port.push_back(yp);
    star.push_back(ys);
  }
  WedgeMeasurement m;
  m.columns = d.size();
  if (d.size() < 3) return m;
  m.port_deg = std::atan(fit_line(d, port).slope) * 180.0 / pi;
  m.starboard_deg = std::atan(fit_line(d, star).slope) * 180.0 / pi;
  return m;
}

/// Lag (in samples, parabolically refined) of the first autocorrelation peak
/// after the first zero crossing.
inline double dominant_period(std::vector<double> s) {
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
  for (double& v : s) v -= mean;
  const std::size_t n = s.size();
  std::vector<double> r(n / 2);
  for (std::size_t lag = 0; lag < r.size(); ++lag) {
    double acc = 0;
    for (std::size_t i = 0; i + lag < n; ++i) acc += s[i] * s[i + lag];
    r[lag] = acc / static_cast<double>(n - lag);
  }
  std::size_t i = 1;
  while (i < r.size() && r[i] > 0) ++i;
  std::size_t best = i;
  for (; i + 1 < r.size(); ++i) {
    if (r[i] > r[best]) best = i;
    if (r[i] < 0 && r[best] > 0 && i > best + 1) break;
  }
  if (best == 0 || best + 1 >= r.size()) return static_cast<double>(best);
  const double a = r[best - 1], b = r[best], c = r[best + 1];
  const double den = a - 2 * b + c;
  return static_cast<double>(best) + (den != 0 ? 0.5 * (a - c) / den : 0.0);
}

/// Mean of bilinear samples along a ray from (x0, y0) at `angle`, between
/// distances d0 and d1, offset sideways by `offset` metres. NaN when fewer
/// than `min_samples` samples fall inside the grid.
inline double ray_mean(const wakesim::ScalarField2D& f, double x0, double y0, double angle, double d0,
                       double d1, double offset, std::size_t min_samples = 50) {
  const auto& g = f.grid();
  const double ux = std::cos(angle), uy = std::sin(angle);
  const double step = std::min(g.dx, g.dy);
  double acc = 0.0;
  std::size_t n = 0;
  for (double t = d0; t < d1; t += step) {
    const double fx = (x0 + t * ux - offset * uy - g.origin_x) / g.dx;
    const double fy = (y0 + t * uy + offset * ux - g.origin_y) / g.dy;
    if (fx < 0 || fy < 0 || fx > static_cast<double>(g.nx - 1) || fy > static_cast<double>(g.ny - 1)) continue;
    const auto ix = std::min(static_cast<std::size_t>(fx), g.nx - 2);
    const auto iy = std::min(static_cast<std::size_t>(fy), g.ny - 2);
    const double ax = fx - static_cast<double>(ix), ay = fy - static_cast<double>(iy);
    acc += (1 - ax) * (1 - ay) * f(ix, iy) + ax * (1 - ay) * f(ix + 1, iy) + (1 - ax) * ay * f(ix, iy + 1) +
           ax * ay * f(ix + 1, iy + 1);
    ++n;
  }
  return n >= min_samples ? acc / static_cast<double>(n) : std::numeric_limits<double>::quiet_NaN();
}

/// Brightest line near a nominal direction: search +-4 degrees in 0.5 degree
/// steps and +-12 m sideways in 2 m steps.
inline double fitted_line_mean(const wakesim::ScalarField2D& f, double x0, double y0, double angle, double d0,
                               double d1) {
  double best = -std::numeric_limits<double>::infinity();
  for (double da = -4.0; da <= 4.0 + 1e-9; da += 0.5) {
    for (double off = -12.0; off <= 12.0 + 1e-9; off += 2.0) {
      const double v = ray_mean(f, x0, y0, angle + da * pi / 180.0, d0, d1, off);
      if (!std::isnan(v)) best = std::max(best, v);
    }
  }
  return std::isfinite(best) ? best : std::numeric_limits<double>::quiet_NaN();
}

struct ArmContrast {
  double port_sigmas = 0.0;
  double starboard_sigmas = 0.0;
  std::size_t background_lines = 0;
  double min_sigmas() const { return std::min(port_sigmas, starboard_sigmas); }
};

/// Each Kelvin arm (astern direction +- the Kelvin angle) is fitted as the
/// brightest nearby line; background lines are fitted the same way around
/// directions 40-160 degrees off the astern direction. The score of an arm is
/// (arm mean - background mean) / background standard deviation.
inline ArmContrast arm_contrast(const wakesim::ScalarField2D& img, double x0, double y0, double heading_rad,
                                double ship_length, double reach) {
  const double astern = heading_rad + pi;
  const double kelvin = std::asin(1.0 / 3.0);
  const double d0 = 2.0 * ship_length;
  std::vector<double> bg;
  for (int a = 40; a <= 160; a += 4) {
    for (int side : {-1, 1}) {
      const double v = fitted_line_mean(img, x0, y0, astern + side * a * pi / 180.0, d0, reach);
      if (!std::isnan(v)) bg.push_back(v);
    }
  }
  ArmContrast out;
  out.background_lines = bg.size();
  if (bg.size() < 3) return out;
  const double mean = std::accumulate(bg.begin(), bg.end(), 0.0) / static_cast<double>(bg.size());
  double var = 0.0;
  for (double v : bg) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(bg.size() - 1));
  out.port_sigmas = (fitted_line_mean(img, x0, y0, astern - kelvin, d0, reach) - mean) / sd;
  out.starboard_sigmas = (fitted_line_mean(img, x0, y0, astern + kelvin, d0, reach) - mean) / sd;
  return out;
}

}  // namespace metrics
