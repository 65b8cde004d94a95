#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wakesim/field.hpp"

namespace wakesim::kelvin {

/// Hull and motion of one ship. Heading is the direction of travel in degrees
/// counter-clockwise from the scene x axis.
struct ShipParams {
  double length = 100.0;  // m
  double beam = 15.0;     // m
  double draft = 6.0;     // m
  double speed = 6.0;     // m/s
  double heading = 0.0;   // deg

  void validate() const;
};

double froude_number(const ShipParams& ship);

/// Deep-water Kelvin half-angle arcsin(1/3), radians.
double kelvin_half_angle();

/// Wavelength of the transverse waves along the track, 2 pi Vs^2 / g.
double transverse_wavelength(double speed);

struct KelvinOptions {
  /// Ship centre in scene coordinates (m).
  double ship_x = 0.0;
  double ship_y = 0.0;
  /// Waves with wavenumber above this are not synthesized; 0 selects 0.9 of
  /// the grid Nyquist wavenumber. A raised-cosine roll-off starts at half the cap.
  double max_wavenumber = 0.0;
  /// Largest phase advance between neighbouring angle nodes at the farthest pixel.
  double max_phase_step = 0.7;
  /// Elevation is zero within this many ship lengths of the hull and ramps to
  /// full over the next equal distance (turbulent near wake is not modelled).
  double near_field_mask = 0.5;
  unsigned threads = 1;
};

struct KelvinField {
  ScalarField2D elevation;
  std::vector<std::string> warnings;
  std::size_t quadrature_nodes = 0;
  double wavenumber_cap = 0.0;
};

/// Free-wave amplitude of the thin-ship (Michell) potential for a parabolic
/// strut hull y = (B/2)(1 - (2 xi / L)^2)(1 - (z / T)^2), per radian of
/// propagation angle theta (relative to the track):
///
///   zeta(x, y) = Re int A(theta) exp(i k0 sec^2(theta) (x cos theta + y sin theta)) dtheta
///
/// for points astern (x < 0), with k0 = g / Vs^2.
std::complex<double> free_wave_amplitude(const ShipParams& ship, double theta);

/// Depth integral int_{-T}^{0} (1 - z^2 / T^2) exp(kappa z) dz.
double depth_integral(double kappa, double draft);

/// Kelvin wake elevation Z_ship = (Vs / g) dPhi/dx sampled on `target`.
/// Evaluated in the ship frame (ship moving along +x') and mapped into the
/// scene by the heading. Zero speed yields a zero field.
KelvinField kelvin_elevation(const GridSpec& target, const ShipParams& ship,
                             const KelvinOptions& options);

}  // namespace wakesim::kelvin
