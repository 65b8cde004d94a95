#include "wakesim/sar_imaging.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fft.hpp"
#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/harmonic_sum.hpp"
#include "wakesim/rng.hpp"

namespace wakesim::sar {
namespace {

void check_incidence(double incidence_rad) {
  if (!(incidence_rad >= 0.0 && incidence_rad < 0.5 * kPi)) {
    throw DomainError("orbital velocity: incidence must be in [0, pi/2)");
  }
}

}  // namespace

OrbitalVelocityField orbital_radial_velocity(std::span<const spectrum::WaveComponent> components,
                                             const GridSpec& grid, double incidence_rad, double t,
                                             unsigned threads) {
  check_incidence(incidence_rad);
  const double ci = std::cos(incidence_rad), si = std::sin(incidence_rad);
  std::vector<Harmonic> terms;
  std::vector<std::vector<std::complex<double>>> coef(1);
  for (const auto& c : components) {
    const double k = std::hypot(c.kx, c.ky);
    const double sin_dir = k > 0.0 ? c.ky / k : 0.0;
    terms.push_back({c.kx, c.ky, c.phase - c.omega * t});
    // w = a omega sin(psi), u_y = a omega cos(psi) ky/k; U_r = w cos(th) - u_y sin(th).
    coef[0].push_back(c.amplitude * c.omega * std::complex<double>(-si * sin_dir, -ci));
  }
  return {std::move(sum_harmonics(grid, terms, coef, threads).front())};
}

OrbitalVelocityField orbital_radial_velocity(const ScalarField2D& elevation, double incidence_rad,
                                             double propagation_direction_rad) {
  check_incidence(incidence_rad);
  const GridSpec& g = elevation.grid();
  const std::size_t nx = g.nx, ny = g.ny;
  const double ci = std::cos(incidence_rad), si = std::sin(incidence_rad);
  const double px = std::cos(propagation_direction_rad), py = std::sin(propagation_direction_rad);
  auto spec = detail::fft2_forward(elevation);
  const double inv_n = 1.0 / static_cast<double>(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double ky = detail::fft_wavenumber(iy, ny, g.dy);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double kx = detail::fft_wavenumber(ix, nx, g.dx);
      auto& f = spec[iy * nx + ix];
      const double k = std::hypot(kx, ky);
      if (k == 0.0 || detail::is_nyquist_bin(ix, nx) || detail::is_nyquist_bin(iy, ny)) {
        f = 0.0;
        continue;
      }
      const double along = kx * px + ky * py;
      const double across = -kx * py + ky * px;
      const double s = (along > 0.0 || (along == 0.0 && across > 0.0)) ? 1.0 : -1.0;
      const double omega = std::sqrt(kGravity * k);
      f *= s * omega * std::complex<double>(-(ky / k) * si, -ci) * inv_n;
    }
  }
  const auto v = detail::fft2_inverse(spec, nx, ny);
  OrbitalVelocityField out{ScalarField2D(g)};
  for (std::size_t i = 0; i < v.size(); ++i) out.radial.values()[i] = v[i].real();
  return out;
}

double degraded_azimuth_resolution(const scattering::RadarConfig& radar, const CoherenceInputs& scene) {
  const double look_res = static_cast<double>(std::max(radar.looks, 1u)) * radar.azimuth_resolution_m;
  const double rv = radar.range_to_velocity();
  double coherence = 0.0;
  if (scene.coherence_time_s > 0.0) {
    coherence = radar.wavelength() * rv / (2.0 * scene.coherence_time_s);
  }
  const double spread = scene.velocity_spread_coefficient * rv * scene.radial_velocity_std;
  return std::sqrt(look_res * look_res + coherence * coherence + spread * spread);
}

SarImage sar_integrate(const ScalarField2D& sigma, const OrbitalVelocityField& velocity,
                       const scattering::RadarConfig& radar, const SarIntegrationOptions& options) {
  require_same_grid(sigma, velocity.radial, "sar_integrate");
  radar.validate();
  const GridSpec& g = sigma.grid();
  const auto nx = static_cast<long>(g.nx);
  SarImage out{ScalarField2D(g), 0.0, 0.0, 0};
  const double b = options.resolution_override_m > 0.0
                       ? options.resolution_override_m
                       : degraded_azimuth_resolution(radar, options.coherence);
  out.azimuth_resolution_m = b;
  const double s = kernel_sigma(b);
  const double inv = 1.0 / (s * std::sqrt(2.0));
  const double rv = radar.range_to_velocity();
  const long half = static_cast<long>(std::ceil(options.support_sigmas * s / g.dx)) + 1;
  std::vector<double> w(static_cast<std::size_t>(2 * half + 1));

  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    auto src = sigma.row(iy);
    auto vel = velocity.radial.row(iy);
    auto dst = out.intensity.row(iy);
    for (long ix = 0; ix < nx; ++ix) {
      const double value = src[static_cast<std::size_t>(ix)];
      if (value == 0.0) continue;
      // Displaced centre in pixel units relative to ix.
      const double shift = rv * vel[static_cast<std::size_t>(ix)] / g.dx;
      const long centre = ix + static_cast<long>(std::floor(shift + 0.5));
      const double frac = shift - std::floor(shift + 0.5);
      // Cell [j - 1/2, j + 1/2] around the rounded centre, kernel centred at frac.
      double lower = std::erf((static_cast<double>(-half) - 0.5 - frac) * g.dx * inv);
      double total = 0.0;
      for (long j = -half; j <= half; ++j) {
        const double upper = std::erf((static_cast<double>(j) + 0.5 - frac) * g.dx * inv);
        const double wj = 0.5 * (upper - lower);
        lower = upper;
        w[static_cast<std::size_t>(j + half)] = wj;
        total += wj;
      }
      if (total <= 0.0) continue;
      bool crossed = false;
      for (long j = -half; j <= half; ++j) {
        const double contrib = value * w[static_cast<std::size_t>(j + half)] / total;
        long t = centre + j;
        if (t < 0 || t >= nx) {
          crossed = true;
          if (options.edge == EdgePolicy::Drop) {
            out.dropped_energy += contrib;
            continue;
          }
          t = ((t % nx) + nx) % nx;
        }
        dst[static_cast<std::size_t>(t)] += contrib;
      }
      if (crossed) ++out.edge_crossings;
    }
  }
  return out;
}

double weibull_unit_mean_scale(double shape) {
  if (!(shape > 0.0)) throw DomainError("Weibull shape must be > 0");
  return 1.0 / std::tgamma(1.0 + 1.0 / shape);
}

double weibull_cdf(double x, double shape, double scale) {
  if (x <= 0.0) return 0.0;
  return 1.0 - std::exp(-std::pow(x / scale, shape));
}

std::vector<double> speckle_samples(std::size_t count, const SpeckleParams& params) {
  const double scale = weibull_unit_mean_scale(params.shape);
  RandomStream rng = RandomStream::derive(params.seed, "speckle");
  std::vector<double> out(count);
  for (double& v : out) v = scale * std::pow(-std::log(rng.uniform_open()), 1.0 / params.shape);
  return out;
}

ScalarField2D apply_speckle(const ScalarField2D& intensity, const SpeckleParams& params) {
  const auto noise = speckle_samples(intensity.size(), params);
  ScalarField2D out = intensity;
  auto v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= noise[i];
  return out;
}

}  // namespace wakesim::sar
