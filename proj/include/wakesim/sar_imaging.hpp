#pragma once

#include <cstdint>
#include <span>

#include "wakesim/field.hpp"
#include "wakesim/scattering.hpp"
#include "wakesim/wave_spectrum.hpp"

namespace wakesim::sar {

/// Line-of-sight orbital velocity of the surface, positive towards the sensor (m/s).
struct OrbitalVelocityField {
  ScalarField2D radial;
};

/// Radial velocity of a set of travelling harmonics at time t (linear wave
/// theory: each harmonic of amplitude a and frequency omega moves the surface
/// with speed a*omega, vertically and along its wave vector).
/// incidence_rad may be 0 (nadir).
OrbitalVelocityField orbital_radial_velocity(std::span<const spectrum::WaveComponent> components,
                                             const GridSpec& grid, double incidence_rad, double t,
                                             unsigned threads = 1);

/// Radial velocity of an elevation snapshot, from its 2D spectrum. Harmonics
/// whose wave vector has a positive component on propagation_direction_rad
/// travel along +k with omega = sqrt(g |k|); the others are their conjugates.
OrbitalVelocityField orbital_radial_velocity(const ScalarField2D& elevation, double incidence_rad,
                                             double propagation_direction_rad);

/// Inputs describing how fast the imaged scene decorrelates.
struct CoherenceInputs {
  /// Scene coherence time in seconds; 0 disables the coherence term.
  double coherence_time_s = 0.0;
  /// Standard deviation of the radial velocity inside a resolution cell (m/s).
  double radial_velocity_std = 0.0;
  /// Weight of the (R/V) * velocity-spread smearing term.
  double velocity_spread_coefficient = 0.0;
};

/// Degraded azimuth resolution
///   P_a' = sqrt((N rho_a)^2 + (lambda R / (2 V tau_s))^2 + (c_v (R/V) sigma_ur)^2)
/// N looks, rho_a single-look resolution, tau_s coherence time.
double degraded_azimuth_resolution(const scattering::RadarConfig& radar, const CoherenceInputs& scene = {});

enum class EdgePolicy { Wrap, Drop };

struct SarIntegrationOptions {
  EdgePolicy edge = EdgePolicy::Wrap;
  /// Azimuth kernel half-width in kernel standard deviations.
  double support_sigmas = 9.0;
  /// Overrides the degraded resolution when > 0 (m).
  double resolution_override_m = 0.0;
  CoherenceInputs coherence;
};

struct SarImage {
  ScalarField2D intensity;
  double azimuth_resolution_m = 0.0;
  /// Energy displaced outside the grid (Drop) and number of source pixels
  /// whose kernel crossed an edge.
  double dropped_energy = 0.0;
  std::size_t edge_crossings = 0;
};

/// Velocity-bunching image formation. Every range line is independent; in
/// azimuth each source pixel is moved by (R/V) U_r and spread by
/// exp(-pi^2 ((x_i - x - (R/V) U_r) / b)^2) with b = P_a', integrated over the
/// output cell and normalized to unit total weight.
SarImage sar_integrate(const ScalarField2D& sigma, const OrbitalVelocityField& velocity,
                       const scattering::RadarConfig& radar, const SarIntegrationOptions& options = {});

/// Standard deviation of the azimuth kernel exp(-pi^2 (dx / b)^2).
inline double kernel_sigma(double b) { return b / (3.14159265358979323846 * 1.4142135623730951); }

struct SpeckleParams {
  double shape = 1.8;
  std::uint64_t seed = 0;
};

/// Weibull scale that gives unit mean at the given shape: 1 / Gamma(1 + 1/shape).
double weibull_unit_mean_scale(double shape);

/// Weibull CDF for shape k and scale lambda.
double weibull_cdf(double x, double shape, double scale);

/// I'(x, y) = I(x, y) * n(x, y), n i.i.d. unit-mean Weibull drawn from the
/// stream derived from (seed, "speckle").
ScalarField2D apply_speckle(const ScalarField2D& intensity, const SpeckleParams& params);

/// Raw unit-mean Weibull variates from the same stream apply_speckle uses.
std::vector<double> speckle_samples(std::size_t count, const SpeckleParams& params);

}  // namespace wakesim::sar
