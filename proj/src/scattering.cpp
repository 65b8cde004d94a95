#include "wakesim/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"

namespace wakesim::scattering {

double RadarConfig::incidence_rad() const { return deg_to_rad(incidence_deg); }
double RadarConfig::wavelength() const { return kSpeedOfLight / frequency_hz; }
double RadarConfig::slant_range() const {
  return slant_range_m > 0.0 ? slant_range_m : platform_height_m / std::cos(incidence_rad());
}
double RadarConfig::range_to_velocity() const { return slant_range() / platform_velocity_mps; }

void RadarConfig::validate() const {
  if (!(frequency_hz > 0.0)) throw DomainError("radar frequency must be > 0 Hz");
  if (!(incidence_deg > 0.0 && incidence_deg < 90.0)) {
    throw DomainError("incidence angle must be in (0, 90) deg");
  }
  if (!(platform_height_m > 0.0)) throw DomainError("platform height must be > 0 m");
  if (!(slant_range() >= platform_height_m)) throw DomainError("slant range must be >= platform height");
  if (!(platform_velocity_mps > 0.0)) throw DomainError("platform velocity must be > 0 m/s");
  if (looks < 1) throw DomainError("looks must be >= 1");
  if (!(azimuth_resolution_m > 0.0) || !(range_resolution_m > 0.0)) {
    throw DomainError("resolutions must be > 0 m");
  }
}

TiltSign default_tilt_sign(Polarization pol) {
  return pol == Polarization::VV ? TiltSign::Plus : TiltSign::Minus;
}

double radar_wavenumber(const RadarConfig& radar) {
  return kTwoPi * radar.frequency_hz / kSpeedOfLight;
}

double bragg_wavenumber(const RadarConfig& radar, double local_incidence) {
  if (!(local_incidence > 0.0 && local_incidence < 0.5 * kPi)) {
    throw DomainError("bragg_wavenumber: incidence must be in (0, pi/2)");
  }
  return 2.0 * radar_wavenumber(radar) * std::sin(local_incidence);
}

std::complex<double> scattering_coefficient(Polarization pol, const em::ComplexDielectric& eps,
                                            double incidence_rad) {
  const std::complex<double> e = eps.value();
  const double s = std::sin(incidence_rad), c = std::cos(incidence_rad);
  const std::complex<double> root = std::sqrt(e - s * s);
  if (pol == Polarization::HH) {
    const std::complex<double> d = c + root;
    return (e - 1.0) / (d * d);
  }
  const std::complex<double> d = e * c + root;
  return (e - 1.0) * (s * s - e * (1.0 + s * s)) / (d * d);
}

double bragg_nrcs(const RadarConfig& radar, const em::ComplexDielectric& eps,
                  const LocalGeometry& local, const spectrum::SeaStateParams& sea) {
  const double kb = bragg_wavenumber(radar, local.incidence_rad);
  const double ke = radar_wavenumber(radar);
  const double kx = kb * std::cos(local.bragg_azimuth_rad);
  const double ky = kb * std::sin(local.bragg_azimuth_rad);
  const double w = 0.5 * (spectrum::directional_density(kx, ky, sea) +
                          spectrum::directional_density(-kx, -ky, sea));
  const double c = std::cos(local.incidence_rad);
  const double tc = std::norm(scattering_coefficient(radar.polarization, eps, local.incidence_rad));
  return 8.0 * kPi * std::pow(ke, 4) * std::pow(c, 4) * w * tc;
}

LocalGeometry facet_geometry(double slope_x, double slope_y, const RadarConfig& radar) {
  const double th = radar.incidence_rad();
  const double norm = std::sqrt(1.0 + slope_x * slope_x + slope_y * slope_y);
  const double nx = -slope_x / norm, ny = -slope_y / norm, nz = 1.0 / norm;
  // Line of sight from the surface to the sensor.
  const double lx = 0.0, ly = -std::sin(th), lz = std::cos(th);
  const double cos_local = std::clamp(nx * lx + ny * ly + nz * lz, -1.0, 1.0);
  // Incident direction projected onto the facet plane.
  const double ix = -lx, iy = -ly, iz = -lz;
  const double dot = ix * nx + iy * ny + iz * nz;
  const double px = ix - dot * nx, py = iy - dot * ny;
  LocalGeometry g;
  g.incidence_rad = std::acos(cos_local);
  g.bragg_azimuth_rad = (px == 0.0 && py == 0.0) ? 0.5 * kPi : std::atan2(py, px);
  return g;
}

Sigma0Field sigma0_field(const ScalarField2D& elevation, const RadarConfig& radar,
                         const em::ComplexDielectric& eps, const spectrum::SeaStateParams& sea,
                         const Sigma0Options& options) {
  radar.validate();
  const GridSpec& g = elevation.grid();
  Sigma0Field out{ScalarField2D(g), 0};
  const LocalGeometry nominal{radar.incidence_rad(), 0.5 * kPi};
  if (!options.facet_tilt) {
    const double s0 = bragg_nrcs(radar, eps, nominal, sea);
    for (double& v : out.sigma0.values()) v = s0;
    return out;
  }
  auto slope = [&](std::size_t i, std::size_t n, double d, auto&& at) {
    if (n < 2) return 0.0;
    if (i == 0) return (at(1) - at(0)) / d;
    if (i == n - 1) return (at(n - 1) - at(n - 2)) / d;
    return (at(i + 1) - at(i - 1)) / (2.0 * d);
  };
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const double sx = slope(ix, g.nx, g.dx, [&](std::size_t j) { return elevation(j, iy); });
      const double sy = slope(iy, g.ny, g.dy, [&](std::size_t j) { return elevation(ix, j); });
      LocalGeometry local = facet_geometry(sx, sy, radar);
      if (local.incidence_rad < kMinFacetIncidence || local.incidence_rad > kMaxFacetIncidence) {
        local.incidence_rad = std::clamp(local.incidence_rad, kMinFacetIncidence, kMaxFacetIncidence);
        ++out.clamped_facets;
      }
      if (!options.tilt_bragg_vector) local.bragg_azimuth_rad = nominal.bragg_azimuth_rad;
      out.sigma0(ix, iy) = bragg_nrcs(radar, eps, local, sea);
    }
  }
  return out;
}

std::complex<double> modulation_transfer(double kx, double ky, const RadarConfig& radar,
                                         em::RelaxationRate mu, TiltSign sign) {
  const double k = std::hypot(kx, ky);
  if (k == 0.0) return {0.0, 0.0};
  const double omega = std::sqrt(kGravity * k);
  const std::complex<double> relax = std::complex<double>(omega, -mu.mu) / std::complex<double>(omega, mu.mu);
  const std::complex<double> hydro = -4.5 * (ky * ky / k) * relax;
  const double th = radar.incidence_rad();
  const double s2 = std::sin(th) * std::sin(th);
  const double denom = sign == TiltSign::Plus ? 1.0 + s2 : 1.0 - s2;
  const std::complex<double> tilt(0.0, ky * 4.0 / std::tan(th) / denom);
  return hydro + tilt;
}

std::complex<double> modulation_transfer(double kx, double ky, const RadarConfig& radar,
                                         em::RelaxationRate mu) {
  return modulation_transfer(kx, ky, radar, mu, default_tilt_sign(radar.polarization));
}

ModulationOptions default_modulation_options(const RadarConfig& radar, double propagation_direction_rad) {
  ModulationOptions o;
  o.propagation_direction_rad = propagation_direction_rad;
  o.tilt_sign = default_tilt_sign(radar.polarization);
  return o;
}

ModulationResult modulate_nrcs(const ScalarField2D& sigma0, const ScalarField2D& elevation,
                               const RadarConfig& radar, em::RelaxationRate mu,
                               const ModulationOptions& options) {
  require_same_grid(sigma0, elevation, "modulate_nrcs");
  radar.validate();
  const GridSpec& g = elevation.grid();
  const std::size_t nx = g.nx, ny = g.ny;
  auto spec = detail::fft2_forward(elevation);
  const double inv_n = 1.0 / static_cast<double>(nx * ny);
  const double px = std::cos(options.propagation_direction_rad);
  const double py = std::sin(options.propagation_direction_rad);

  for (std::size_t iy = 0; iy < ny; ++iy) {
    const double ky = detail::fft_wavenumber(iy, ny, g.dy);
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double kx = detail::fft_wavenumber(ix, nx, g.dx);
      std::complex<double>& f = spec[iy * nx + ix];
      if (detail::is_nyquist_bin(ix, nx) || detail::is_nyquist_bin(iy, ny) || (kx == 0.0 && ky == 0.0)) {
        f = 0.0;
        continue;
      }
      const double along = kx * px + ky * py;
      const double across = -kx * py + ky * px;
      const bool forward = along > 0.0 || (along == 0.0 && across > 0.0);
      const std::complex<double> m = forward
                                         ? modulation_transfer(kx, ky, radar, mu, options.tilt_sign)
                                         : std::conj(modulation_transfer(-kx, -ky, radar, mu, options.tilt_sign));
      f *= m * inv_n;
    }
  }
  const auto mod = detail::fft2_inverse(spec, nx, ny);

  ModulationResult out{ScalarField2D(g), ScalarField2D(g), 0, 0.0};
  double max_re = 0.0, max_im = 0.0;
  for (std::size_t i = 0; i < mod.size(); ++i) {
    max_re = std::max(max_re, std::abs(mod[i].real()));
    max_im = std::max(max_im, std::abs(mod[i].imag()));
    out.modulation.values()[i] = mod[i].real();
    double s = sigma0.values()[i] * (1.0 + mod[i].real());
    if (s < 0.0 && options.clamp_negative) {
      s = 0.0;
      ++out.clamped_pixels;
    }
    out.sigma.values()[i] = s;
  }
  out.imaginary_residue = max_re > 0.0 ? max_im / max_re : 0.0;
  return out;
}

}  // namespace wakesim::scattering
