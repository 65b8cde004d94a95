#include "wakesim/em_params.hpp"

#include <cmath>
#include <sstream>

#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"

namespace wakesim::em {
namespace {

void require_in(const char* name, double value, double lo, double hi, const char* unit) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream os;
    os << name << " = " << value << ' ' << unit << " outside [" << lo << ", " << hi << "] "
       << unit;
    throw DomainError(os.str());
  }
}

// Stogryn-type conductivity fit for sea water (S/m), as used by Meissner & Wentz.
double conductivity(double s, double t) {
  const double sigma35 =
      2.903602 + 8.607e-2 * t + 4.738817e-4 * t * t - 2.991e-6 * t * t * t + 4.3047e-9 * t * t * t * t;
  const double r15 = s * (37.5109 + 5.45216 * s + 1.4409e-2 * s * s) / (1004.75 + 182.283 * s + s * s);
  const double a0 = (6.9431 + 3.2841 * s - 9.9486e-2 * s * s) / (84.850 + 69.024 * s + s * s);
  const double a1 = 49.843 - 0.2276 * s + 0.198e-2 * s * s;
  return sigma35 * r15 * (1.0 + a0 * (t - 15.0) / (a1 + t));
}

}  // namespace

DebyeTerms debye_terms(double s, double t) {
  // Fresh-water fits (Wentz & Meissner 2000 ATBD): eps_s in units, lambda_r in cm.
  const double eps_fresh = 87.90 * std::exp(-0.004585 * t);
  const double lambda_fresh_cm = 3.30 * std::exp(-0.0346 * t + 0.00017 * t * t);
  // Salinity corrections (Meissner & Wentz 2004, b0..b5).
  const double eps_s = eps_fresh * std::exp(-3.56417e-3 * s + 4.74868e-6 * s * s + 1.15574e-5 * t * s);
  const double freq_factor = 1.0 + s * (2.39357e-3 - 3.13530e-5 * t + 2.52477e-7 * t * t);
  return {eps_s, 1e-2 * lambda_fresh_cm / freq_factor, conductivity(s, t)};
}

ComplexDielectric dielectric(double frequency_hz, double salinity_ppt, double temperature_c) {
  require_in("frequency", frequency_hz, 1e9, 90e9, "Hz");
  require_in("salinity", salinity_ppt, 0.0, 40.0, "ppt");
  require_in("temperature", temperature_c, -2.0, 40.0, "degC");

  const DebyeTerms d = debye_terms(salinity_ppt, temperature_c);
  const double wavelength = kSpeedOfLight / frequency_hz;
  // Gaussian-unit conductivity (1/s).
  const double sigma_g = d.conductivity_s_per_m / (4.0 * kPi * kVacuumPermittivity);

  using cd = std::complex<double>;
  const cd ratio = std::pow(cd(0.0, d.relaxation_wavelength_m / wavelength), 1.0 - kSpreadExponent);
  const cd eps = kHighFrequencyPermittivity +
                 (d.static_permittivity - kHighFrequencyPermittivity) / (1.0 + ratio) -
                 cd(0.0, 2.0 * sigma_g * wavelength / kSpeedOfLight);
  return {eps.real(), eps.imag()};
}

RelaxationRate relaxation_rate(double wind_speed_10m) {
  if (!(wind_speed_10m >= 0.0)) {
    throw DomainError("wind speed must be non-negative for the relaxation rate");
  }
  return {wind_speed_10m <= 5.0 ? 0.05 : 0.39};
}

}  // namespace wakesim::em
