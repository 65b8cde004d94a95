#include "wakesim/kelvin_wake.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/harmonic_sum.hpp"

namespace wakesim::kelvin {
namespace {

double smoothstep(double edge0, double edge1, double x) {
  const double t = std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

// |d/dtheta of the wave vector| divided by k0.
double wavevector_rate(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double sec = 1.0 / c;
  const double a = sec * sec * s;                          // sec * tan
  const double b = (1.0 + s * s) * sec * sec * sec;
  return std::hypot(a, b);
}

double astern_coverage(const GridSpec& g, double x0, double y0, double heading) {
  const double ux = -std::cos(heading), uy = -std::sin(heading);
  const double xmin = g.origin_x, xmax = g.x(g.nx - 1);
  const double ymin = g.origin_y, ymax = g.y(g.ny - 1);
  if (x0 < xmin || x0 > xmax || y0 < ymin || y0 > ymax) return 0.0;
  double t = std::numeric_limits<double>::infinity();
  if (ux > 1e-12) t = std::min(t, (xmax - x0) / ux);
  if (ux < -1e-12) t = std::min(t, (xmin - x0) / ux);
  if (uy > 1e-12) t = std::min(t, (ymax - y0) / uy);
  if (uy < -1e-12) t = std::min(t, (ymin - y0) / uy);
  return t;
}

}  // namespace

void ShipParams::validate() const {
  if (!(beam > 0.0)) throw DomainError("ship beam must be > 0 m");
  if (!(length > beam)) throw DomainError("ship length must exceed beam");
  if (!(draft > 0.0)) throw DomainError("ship draft must be > 0 m");
  if (!(speed >= 0.0)) throw DomainError("ship speed must be >= 0 m/s");
  if (!(heading >= 0.0 && heading < 360.0)) throw DomainError("ship heading must be in [0, 360) deg");
}

double froude_number(const ShipParams& ship) {
  return ship.speed / std::sqrt(kGravity * ship.length);
}

double kelvin_half_angle() { return std::asin(1.0 / 3.0); }

double transverse_wavelength(double speed) { return kTwoPi * speed * speed / kGravity; }

double depth_integral(double kappa, double draft) {
  const double a = kappa * draft;
  double j;
  if (a < 1e-2) {
    j = 2.0 / 3.0 - a / 4.0 + a * a / 15.0;
  } else {
    const double e = std::exp(-a);
    j = (1.0 - e) / a - (2.0 / (a * a * a) - e * (1.0 / a + 2.0 / (a * a) + 2.0 / (a * a * a)));
  }
  return draft * j;
}

std::complex<double> free_wave_amplitude(const ShipParams& ship, double theta) {
  if (ship.speed <= 0.0) return {0.0, 0.0};
  const double k0 = kGravity / (ship.speed * ship.speed);
  const double sec = 1.0 / std::cos(theta);
  const double kappa = k0 * sec * sec;
  const double m = k0 * sec;
  const double h = 0.5 * ship.length;
  // int_{-h}^{h} f_xi exp(-i m xi) dxi with f_xi = -(4 B / L^2) xi.
  const double longitudinal =
      (8.0 * ship.beam / (ship.length * ship.length)) * (std::sin(m * h) / (m * m) - h * std::cos(m * h) / m);
  const std::complex<double> hull_integral(0.0, longitudinal * depth_integral(kappa, ship.draft));
  // Source strength is -2 Vs f_xi per unit centre-plane area.
  return -(2.0 / kPi) * k0 * sec * sec * sec * hull_integral;
}

KelvinField kelvin_elevation(const GridSpec& target, const ShipParams& ship,
                             const KelvinOptions& options) {
  target.validate();
  ship.validate();
  KelvinField out{ScalarField2D(target), {}, 0, 0.0};
  if (ship.speed <= 0.0) return out;

  const double k0 = kGravity / (ship.speed * ship.speed);
  const double heading = deg_to_rad(ship.heading);
  const double k_cap = options.max_wavenumber > 0.0
                           ? options.max_wavenumber
                           : 0.9 * kPi / std::max(target.dx, target.dy);
  out.wavenumber_cap = k_cap;
  if (k_cap <= k0) {
    out.warnings.push_back("transverse Kelvin waves are not resolvable on this grid");
    return out;
  }

  const double coverage = astern_coverage(target, options.ship_x, options.ship_y, heading);
  if (coverage < 2.0 * ship.length) {
    std::ostringstream os;
    os << "grid covers " << coverage << " m astern of the ship, less than two ship lengths";
    out.warnings.push_back(os.str());
  }

  double r_max = 0.0;
  for (double cx : {target.origin_x, target.x(target.nx - 1)}) {
    for (double cy : {target.origin_y, target.y(target.ny - 1)}) {
      r_max = std::max(r_max, std::hypot(cx - options.ship_x, cy - options.ship_y));
    }
  }
  r_max = std::max(r_max, ship.length);

  // Angle nodes on [0, theta_max), clustered where the phase turns fastest.
  const double theta_max = std::acos(std::sqrt(k0 / k_cap));
  const double taper_start = 0.5 * k_cap;
  std::vector<double> nodes, weights;
  double th = 0.0;
  while (th < theta_max) {
    double step = options.max_phase_step / (r_max * k0 * wavevector_rate(th));
    step = std::min(step, theta_max / 64.0);
    const double next = std::min(th + step, theta_max);
    const double mid = 0.5 * (th + next);
    const double kappa = k0 / (std::cos(mid) * std::cos(mid));
    double w = next - th;
    if (kappa > taper_start) w *= 0.5 * (1.0 + std::cos(kPi * (kappa - taper_start) / (k_cap - taper_start)));
    nodes.push_back(mid);
    weights.push_back(w);
    th = next;
  }

  std::vector<Harmonic> terms;
  std::vector<std::vector<std::complex<double>>> coef(1);
  terms.reserve(2 * nodes.size());
  coef[0].reserve(2 * nodes.size());
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    const std::complex<double> a = free_wave_amplitude(ship, nodes[n]) * weights[n];
    const double kappa = k0 / (std::cos(nodes[n]) * std::cos(nodes[n]));
    for (double sgn : {1.0, -1.0}) {
      const double dir = heading + sgn * nodes[n];
      const double kx = kappa * std::cos(dir), ky = kappa * std::sin(dir);
      terms.push_back({kx, ky, -(kx * options.ship_x + ky * options.ship_y)});
      coef[0].push_back(a);
    }
  }
  out.quadrature_nodes = terms.size();
  out.elevation = std::move(sum_harmonics(target, terms, coef, options.threads).front());

  // Keep the wave pattern astern and away from the hull.
  const double ch = std::cos(heading), sh = std::sin(heading);
  const double half = 0.5 * ship.length;
  const double mask = options.near_field_mask * ship.length;
  for (std::size_t iy = 0; iy < target.ny; ++iy) {
    const double ry = target.y(iy) - options.ship_y;
    for (std::size_t ix = 0; ix < target.nx; ++ix) {
      const double rx = target.x(ix) - options.ship_x;
      const double xs = rx * ch + ry * sh;
      const double ys = -rx * sh + ry * ch;
      const double along = std::max(std::abs(xs) - half, 0.0);
      const double d = std::hypot(along, ys);
      double w = smoothstep(-0.25 * ship.length, 0.0, -xs);
      if (mask > 0.0) w *= smoothstep(mask, 2.0 * mask, d);
      out.elevation(ix, iy) *= w;
    }
  }
  return out;
}

}  // namespace wakesim::kelvin
