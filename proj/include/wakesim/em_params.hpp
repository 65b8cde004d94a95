#pragma once

#include <complex>

namespace wakesim::em {

/// Complex relative permittivity of sea water, stored with a negative
/// imaginary part for lossy media (eps = eps' - i eps'').
struct ComplexDielectric {
  double real = 1.0;
  double imag = 0.0;

  std::complex<double> value() const { return {real, imag}; }
};

/// Hydrodynamic relaxation rate of the Bragg ripple spectrum, 1/s.
struct RelaxationRate {
  double mu = 0.0;
};

/// Static permittivity, relaxation wavelength (m) and ionic conductivity (S/m)
/// of sea water at salinity S (ppt) and temperature T (deg C).
struct DebyeTerms {
  double static_permittivity;
  double relaxation_wavelength_m;
  double conductivity_s_per_m;
};

inline constexpr double kHighFrequencyPermittivity = 4.44;
inline constexpr double kSpreadExponent = 0.012;

DebyeTerms debye_terms(double salinity_ppt, double temperature_c);

/// Single-relaxation Cole-Cole permittivity of sea water:
///
///   eps = eps_inf + (eps_s - eps_inf) / (1 + (i lambda_r / lambda)^(1 - alpha))
///         - 2 i sigma lambda / c
///
/// with sigma in Gaussian units (1/s). Valid for 1-90 GHz, 0-40 ppt,
/// -2..40 deg C; anything outside throws DomainError naming the bound.
ComplexDielectric dielectric(double frequency_hz, double salinity_ppt, double temperature_c);

/// S-band relaxation rate: 0.05 1/s up to and including 5 m/s wind, 0.39 1/s above.
RelaxationRate relaxation_rate(double wind_speed_10m);

}  // namespace wakesim::em
