#include "wakesim/wave_spectrum.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/rng.hpp"

namespace wakesim::spectrum {
namespace {

double fetch_m(const SeaStateParams& sea) { return sea.fetch_km * 1000.0; }

double dimensionless_fetch(const SeaStateParams& sea) {
  const double u = sea.wind_speed_10m;
  return std::min(kGravity * fetch_m(sea) / (u * u), kFullyDevelopedFetch);
}

// Frequency-domain JONSWAP, m^2 s.
double jonswap(double omega, const SeaStateParams& sea) {
  const double u = sea.wind_speed_10m;
  if (u <= 0.0 || omega <= 0.0) return 0.0;
  const double alpha = 0.076 * std::pow(dimensionless_fetch(sea), -0.22);
  const double wp = peak_frequency(sea);
  const double r = wp / omega;
  const double r4 = r * r * r * r;
  if (r4 > 700.0) return 0.0;
  const double sig = omega <= wp ? kSigmaBelowPeak : kSigmaAbovePeak;
  const double q = (omega - wp) / (sig * wp);
  const double enhancement = std::pow(kPeakEnhancement, std::exp(-0.5 * q * q));
  return alpha * kGravity * kGravity / std::pow(omega, 5) * std::exp(-1.25 * r4) * enhancement;
}

}  // namespace

void SeaStateParams::validate() const {
  if (!(wind_speed_10m > 0.0)) throw DomainError("wind_speed_10m must be > 0 m/s");
  if (!(wind_direction >= 0.0 && wind_direction < 360.0)) {
    throw DomainError("wind_direction must be in [0, 360) deg");
  }
  if (!(fetch_km > 0.0)) throw DomainError("fetch must be > 0 km");
  if (!(salinity_ppt >= 0.0 && salinity_ppt <= 40.0)) throw DomainError("salinity must be in [0, 40] ppt");
  if (!(temperature_c >= -2.0 && temperature_c <= 40.0)) {
    throw DomainError("temperature must be in [-2, 40] degC");
  }
}

double peak_frequency(const SeaStateParams& sea) {
  const double u = sea.wind_speed_10m;
  if (u <= 0.0) return std::numeric_limits<double>::infinity();
  // omega_p = 22 (g^2 / (U F))^(1/3), written through the dimensionless fetch
  // so that the fully developed cap applies to both alpha and the peak.
  return 22.0 * (kGravity / u) * std::pow(dimensionless_fetch(sea), -1.0 / 3.0);
}

double peak_wavenumber(const SeaStateParams& sea) {
  const double wp = peak_frequency(sea);
  return wp * wp / kGravity;
}

double dispersion(double k) { return std::sqrt(kGravity * k); }

double omnidirectional_spectrum(double k, const SeaStateParams& sea) {
  if (!(k > 0.0)) throw DomainError("omnidirectional_spectrum: wavenumber must be > 0");
  const double omega = dispersion(k);
  // S(k) = S(omega) d omega / dk, d omega / dk = g / (2 omega).
  return jonswap(omega, sea) * kGravity / (2.0 * omega);
}

double spreading_exponent(double k, const SeaStateParams& sea) {
  if (!(k > 0.0)) throw DomainError("spreading: wavenumber must be > 0");
  const double u = sea.wind_speed_10m;
  if (u <= 0.0) return 0.0;
  const double wp = peak_frequency(sea);
  const double sp = 11.5 * std::pow(u * wp / kGravity, -2.5);
  const double ratio = dispersion(k) / wp;
  return ratio <= 1.0 ? sp * std::pow(ratio, 5.0) : sp * std::pow(ratio, -2.5);
}

double spreading(double k, double theta, const SeaStateParams& sea) {
  const double s = spreading_exponent(k, sea);
  const double norm = std::exp(std::lgamma(s + 1.0) - std::lgamma(s + 0.5)) / (2.0 * std::sqrt(kPi));
  const double c = std::abs(std::cos(0.5 * (theta - deg_to_rad(sea.wind_direction))));
  if (c == 0.0) return s > 0.0 ? 0.0 : norm;
  return norm * std::pow(c, 2.0 * s);
}

double directional_density(double kx, double ky, const SeaStateParams& sea) {
  const double k = std::hypot(kx, ky);
  if (k == 0.0) return 0.0;
  return omnidirectional_spectrum(k, sea) * spreading(k, std::atan2(ky, kx), sea) / k;
}

double spectral_variance(const SeaStateParams& sea, double k_lo, double k_hi) {
  if (!(k_lo > 0.0) || !(k_hi > k_lo)) return 0.0;
  constexpr int n = 4000;
  const double a = std::log(k_lo), b = std::log(k_hi);
  const double h = (b - a) / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double k = std::exp(a + h * i);
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    acc += w * omnidirectional_spectrum(k, sea) * k;
  }
  return acc * h;
}

SpectralGridSpec default_grid_spec(double domain_size_m, double bragg_wavenumber) {
  SpectralGridSpec s;
  s.k_min = kTwoPi / (4.0 * domain_size_m);
  s.k_max = 1.2 * bragg_wavenumber;
  return s;
}

SpectralGrid make_spectral_grid(const SpectralGridSpec& spec, std::uint64_t seed) {
  if (spec.n_k == 0 || spec.n_theta == 0) throw ConfigError("spectral grid needs at least one bin");
  if (!(spec.k_min > 0.0) || !(spec.k_max > spec.k_min)) {
    throw ConfigError("spectral grid needs 0 < k_min < k_max");
  }
  SpectralGrid g;
  const double la = std::log(spec.k_min), lb = std::log(spec.k_max);
  for (std::size_t i = 0; i < spec.n_k; ++i) {
    const double e0 = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(spec.n_k));
    const double e1 = std::exp(la + (lb - la) * static_cast<double>(i + 1) / static_cast<double>(spec.n_k));
    g.k.push_back(std::sqrt(e0 * e1));
    g.dk.push_back(e1 - e0);
  }
  const double dth = kTwoPi / static_cast<double>(spec.n_theta);
  for (std::size_t j = 0; j < spec.n_theta; ++j) {
    g.theta.push_back(-kPi + (static_cast<double>(j) + 0.5) * dth);
    g.dtheta.push_back(dth);
  }
  RandomStream rng = RandomStream::derive(seed, "wave_spectrum");
  g.phase.resize(g.size());
  for (double& p : g.phase) p = kTwoPi * rng.uniform();
  return g;
}

SpectralGrid single_component_grid(double k, double dk, double theta, double dtheta, double phase) {
  SpectralGrid g;
  g.k = {k};
  g.dk = {dk};
  g.theta = {theta};
  g.dtheta = {dtheta};
  g.phase = {phase};
  return g;
}

std::vector<double> amplitude_grid(const SpectralGrid& grid, const SeaStateParams& sea) {
  std::vector<double> a(grid.size());
  const std::size_t nt = grid.theta.size();
  for (std::size_t i = 0; i < grid.k.size(); ++i) {
    const double s = omnidirectional_spectrum(grid.k[i], sea);
    for (std::size_t j = 0; j < nt; ++j) {
      const double d = spreading(grid.k[i], grid.theta[j], sea);
      a[i * nt + j] = std::sqrt(2.0 * s * d * grid.dk[i] * grid.dtheta[j]);
    }
  }
  return a;
}

std::vector<WaveComponent> sea_components(const SpectralGrid& grid, const SeaStateParams& sea,
                                          double k_limit) {
  const std::vector<double> amp = amplitude_grid(grid, sea);
  const std::size_t nt = grid.theta.size();
  std::vector<WaveComponent> out;
  for (std::size_t i = 0; i < grid.k.size(); ++i) {
    if (grid.k[i] > k_limit) break;
    for (std::size_t j = 0; j < nt; ++j) {
      const double a = amp[i * nt + j];
      if (a == 0.0) continue;
      out.push_back({a, grid.k[i] * std::cos(grid.theta[j]), grid.k[i] * std::sin(grid.theta[j]),
                     dispersion(grid.k[i]), grid.phase[i * nt + j]});
    }
  }
  return out;
}

double nyquist_wavenumber(const GridSpec& target) { return kPi / std::max(target.dx, target.dy); }

void check_resolution(const GridSpec& target, const SeaStateParams& sea) {
  const double kp = peak_wavenumber(sea);
  const double k_nyq = nyquist_wavenumber(target);
  if (kp <= 0.5 * k_nyq) return;
  const double hs = 4.0 * std::sqrt(spectral_variance(sea, 1e-4, 1e3));
  if (hs < kNegligibleWaveHeight) return;
  std::ostringstream os;
  os << "sea spectrum not resolved: peak wavelength " << kTwoPi / kp << " m needs spacing <= "
     << kTwoPi / kp / 4.0 << " m (4 samples per wavelength), grid spacing is "
     << std::max(target.dx, target.dy) << " m (U10=" << sea.wind_speed_10m
     << " m/s, fetch=" << sea.fetch_km << " km, Hs=" << hs << " m)";
  throw ConfigError(os.str());
}

ScalarField2D synthesize_sea(const GridSpec& target, const SpectralGrid& grid,
                             const SeaStateParams& sea, double t, unsigned threads) {
  target.validate();
  check_resolution(target, sea);
  const auto comps = sea_components(grid, sea, nyquist_wavenumber(target));
  std::vector<Harmonic> terms;
  std::vector<std::vector<std::complex<double>>> coef(1);
  terms.reserve(comps.size());
  coef[0].reserve(comps.size());
  for (const auto& c : comps) {
    terms.push_back({c.kx, c.ky, c.phase - c.omega * t});
    coef[0].emplace_back(c.amplitude, 0.0);
  }
  return std::move(sum_harmonics(target, terms, coef, threads).front());
}

}  // namespace wakesim::spectrum
