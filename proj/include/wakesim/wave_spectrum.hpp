#pragma once

#include <cstdint>
#include <vector>

#include "wakesim/field.hpp"
#include "wakesim/harmonic_sum.hpp"

namespace wakesim::spectrum {

/// Ambient sea state. Directions are degrees counter-clockwise from the scene x axis.
struct SeaStateParams {
  double wind_speed_10m = 5.0;  // m/s
  double wind_direction = 0.0;  // deg, direction the wind blows towards
  double fetch_km = 80.0;
  double salinity_ppt = 35.0;
  double temperature_c = 21.0;

  /// Throws DomainError on the first violated invariant.
  void validate() const;
};

// JONSWAP shape constants.
inline constexpr double kPeakEnhancement = 3.3;
inline constexpr double kSigmaBelowPeak = 0.07;
inline constexpr double kSigmaAbovePeak = 0.09;
/// Dimensionless fetch g F / U^2 beyond which the sea is treated as fully developed.
inline constexpr double kFullyDevelopedFetch = 2.2e4;
/// Below this significant wave height an unresolved peak is not an error.
inline constexpr double kNegligibleWaveHeight = 0.05;  // m

/// Peak angular frequency (rad/s) of the fetch-limited spectrum; +inf for no wind.
double peak_frequency(const SeaStateParams& sea);
/// Deep-water wavenumber of the spectral peak (rad/m); +inf for no wind.
double peak_wavenumber(const SeaStateParams& sea);

/// Fetch-limited JONSWAP variance density in the wavenumber domain, m^2/(rad/m).
/// Throws DomainError for k <= 0.
double omnidirectional_spectrum(double k, const SeaStateParams& sea);

/// Mitsuyasu exponent s of the cos^{2s}(dtheta/2) spreading at wavenumber k.
double spreading_exponent(double k, const SeaStateParams& sea);

/// Directional spreading D(k, theta), theta in radians; integrates to one over
/// any 2*pi interval and peaks at the wind direction.
double spreading(double k, double theta, const SeaStateParams& sea);

/// Cartesian wavenumber density W(kx, ky) = S(k) D(k, phi) / k, m^4.
double directional_density(double kx, double ky, const SeaStateParams& sea);

/// Deep-water dispersion omega = sqrt(g k).
double dispersion(double k);

/// Elevation variance of the spectrum between k_lo and k_hi (quadrature in log k).
double spectral_variance(const SeaStateParams& sea, double k_lo, double k_hi);

struct SpectralGridSpec {
  double k_min = 0.0;  // rad/m, lower edge of the first bin
  double k_max = 0.0;  // rad/m, upper edge of the last bin
  std::size_t n_k = 128;
  std::size_t n_theta = 72;
};

/// Default bins: n_k log-spaced over [2 pi / (4 * domain_size), 1.2 * bragg_k], 72 directions.
SpectralGridSpec default_grid_spec(double domain_size_m, double bragg_wavenumber);

/// Discretized wavenumber-direction plane with one random phase per cell.
/// Cell (i, j) is stored at index i * theta.size() + j.
struct SpectralGrid {
  std::vector<double> k;       // bin centres (geometric), strictly increasing
  std::vector<double> dk;      // bin widths
  std::vector<double> theta;   // direction centres in [-pi, pi)
  std::vector<double> dtheta;  // direction widths
  std::vector<double> phase;   // [0, 2 pi)

  std::size_t size() const { return k.size() * theta.size(); }
};

/// Builds the grid; phases come from the stream derived from (seed, "wave_spectrum").
SpectralGrid make_spectral_grid(const SpectralGridSpec& spec, std::uint64_t seed);

/// Single-cell grid, handy for probing one harmonic.
SpectralGrid single_component_grid(double k, double dk, double theta, double dtheta, double phase);

/// A_ij = sqrt(2 S(k_i) D(k_i, theta_j) dk_i dtheta_j), same layout as SpectralGrid.
std::vector<double> amplitude_grid(const SpectralGrid& grid, const SeaStateParams& sea);

/// One travelling harmonic a cos(kx x + ky y - omega t + phase).
struct WaveComponent {
  double amplitude = 0.0;
  double kx = 0.0;
  double ky = 0.0;
  double omega = 0.0;
  double phase = 0.0;
};

/// Components of `grid` with k below `k_limit` and non-zero amplitude.
std::vector<WaveComponent> sea_components(const SpectralGrid& grid, const SeaStateParams& sea,
                                          double k_limit);

/// Highest wavenumber representable on the target grid (pi / max spacing).
double nyquist_wavenumber(const GridSpec& target);

/// Throws ConfigError when the spectral peak has fewer than four samples per
/// wavelength on `target` and the sea is not negligibly calm.
void check_resolution(const GridSpec& target, const SeaStateParams& sea);

/// Wind-sea elevation at time t:
///   Z = sum_ij A_ij cos(k_i (x cos th_j + y sin th_j) - omega_i t + phase_ij)
/// restricted to components below the target Nyquist wavenumber. Runs
/// check_resolution first.
ScalarField2D synthesize_sea(const GridSpec& target, const SpectralGrid& grid,
                             const SeaStateParams& sea, double t, unsigned threads = 1);

}  // namespace wakesim::spectrum
