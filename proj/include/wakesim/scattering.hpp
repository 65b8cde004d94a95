#pragma once

#include <complex>
#include <cstddef>

#include "wakesim/constants.hpp"
#include "wakesim/em_params.hpp"
#include "wakesim/field.hpp"
#include "wakesim/wave_spectrum.hpp"

namespace wakesim::scattering {

enum class Polarization { VV, HH };

/// Imaging radar and platform. The sensor flies along +x (azimuth) and looks
/// towards +y (ground range) from the -y side.
struct RadarConfig {
  double frequency_hz = 3.2e9;
  Polarization polarization = Polarization::VV;
  double incidence_deg = 30.0;
  double platform_height_m = 580e3;
  double platform_velocity_mps = 7600.0;
  /// Slant range; 0 means H / cos(incidence).
  double slant_range_m = 0.0;
  unsigned looks = 1;
  double azimuth_resolution_m = 6.0;
  double range_resolution_m = 6.0;

  double incidence_rad() const;
  double wavelength() const;
  double slant_range() const;
  /// R / V, the velocity-bunching lever arm in seconds.
  double range_to_velocity() const;
  void validate() const;
};

/// Sign used in the tilt term denominator 1 +- sin^2(theta_r).
enum class TiltSign { Plus, Minus };

/// Default pairing: VV uses 1 + sin^2 (4 cot / (1 + sin^2)), HH uses 1 - sin^2 (8 / sin 2 theta).
TiltSign default_tilt_sign(Polarization pol);

/// Bragg scattering geometry of one facet.
struct LocalGeometry {
  double incidence_rad = 0.0;
  /// Horizontal direction of the resonant Bragg wave vector (rad from +x).
  double bragg_azimuth_rad = 0.0;
};

/// Radar wavenumber k_e = 2 pi f / c.
double radar_wavenumber(const RadarConfig& radar);

/// k_B = 2 k_e sin(theta); throws DomainError outside (0, pi/2).
double bragg_wavenumber(const RadarConfig& radar, double local_incidence);

/// First-order small-perturbation polarization coefficient T_c.
std::complex<double> scattering_coefficient(Polarization pol, const em::ComplexDielectric& eps,
                                            double incidence_rad);

/// sigma0 = 8 pi k_e^4 cos^4(theta_l) W(k_B) |T_c|^2 with W symmetrized over
/// +-k_B (both ripple directions resonate).
double bragg_nrcs(const RadarConfig& radar, const em::ComplexDielectric& eps,
                  const LocalGeometry& local, const spectrum::SeaStateParams& sea);

/// Local incidence and Bragg direction of a facet with slopes (dZ/dx, dZ/dy).
LocalGeometry facet_geometry(double slope_x, double slope_y, const RadarConfig& radar);

/// Facets are kept inside this incidence window; clamped facets are counted.
inline constexpr double kMinFacetIncidence = deg_to_rad(1.0);
inline constexpr double kMaxFacetIncidence = deg_to_rad(89.0);

struct Sigma0Options {
  /// Evaluate W at the facet-tilted Bragg vector instead of the nominal one.
  bool tilt_bragg_vector = true;
  /// Use per-pixel facet incidence; false uses the nominal incidence everywhere.
  bool facet_tilt = true;
};

struct Sigma0Field {
  ScalarField2D sigma0;
  std::size_t clamped_facets = 0;
};

/// Two-scale NRCS: Bragg sigma0 of every facet of the long-wave surface Z.
Sigma0Field sigma0_field(const ScalarField2D& elevation, const RadarConfig& radar,
                         const em::ComplexDielectric& eps, const spectrum::SeaStateParams& sea,
                         const Sigma0Options& options = {});

/// Hydrodynamic + tilt modulation transfer function
///   M(k) = -4.5 (k_y^2 / |k|) (omega - i mu) / (omega + i mu) + i k_y 4 cot(theta_r) / (1 +- sin^2 theta_r)
/// with omega = sqrt(g |k|). M(0) = 0.
std::complex<double> modulation_transfer(double kx, double ky, const RadarConfig& radar,
                                         em::RelaxationRate mu, TiltSign sign);
std::complex<double> modulation_transfer(double kx, double ky, const RadarConfig& radar,
                                         em::RelaxationRate mu);

struct ModulationOptions {
  /// Waves are taken to travel along +k for wave vectors with a positive
  /// component on this direction (rad from +x); the rest are conjugate partners.
  double propagation_direction_rad = 0.0;
  TiltSign tilt_sign = TiltSign::Plus;
  bool clamp_negative = true;
};

ModulationOptions default_modulation_options(const RadarConfig& radar, double propagation_direction_rad);

struct ModulationResult {
  ScalarField2D sigma;
  /// The relative modulation sigma / sigma0 - 1 before clamping.
  ScalarField2D modulation;
  std::size_t clamped_pixels = 0;
  /// max |Im| / max |Re| of the inverse transform before the imaginary part is dropped.
  double imaginary_residue = 0.0;
};

/// sigma(x, y) = sigma0 [1 + sum_k (M(k) F(k) e^{ikx} + c.c.)] over the
/// propagating half of the spectrum of Z, evaluated with FFTs. Negative
/// results are clamped to zero and counted.
ModulationResult modulate_nrcs(const ScalarField2D& sigma0, const ScalarField2D& elevation,
                               const RadarConfig& radar, em::RelaxationRate mu,
                               const ModulationOptions& options);

}  // namespace wakesim::scattering
