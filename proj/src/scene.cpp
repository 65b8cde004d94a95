#include "wakesim/scene.hpp"

#include <cmath>
#include <sstream>

#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/harmonic_sum.hpp"
#include "wakesim/kelvin_wake.hpp"
#include "wakesim/rng.hpp"
#include "wakesim/sar_imaging.hpp"
#include "wakesim/scattering.hpp"
#include "wakesim/wave_spectrum.hpp"

namespace wakesim::pipeline {

std::pair<double, double> default_ship_position(const GridSpec& grid, const kelvin::ShipParams& ship) {
  const double h = deg_to_rad(ship.heading);
  const double half = 0.5 * std::min(grid.extent_x(), grid.extent_y());
  const double offset = std::max(0.0, half - ship.length);
  return {grid.center_x() + offset * std::cos(h), grid.center_y() + offset * std::sin(h)};
}

namespace {

struct SeaKinematics {
  ScalarField2D elevation;
  ScalarField2D radial;
  std::size_t components = 0;
};

SeaKinematics sea_kinematics(const SceneConfig& cfg, double bragg_k) {
  const GridSpec grid = cfg.grid.spec();
  auto spec = spectrum::default_grid_spec(std::max(grid.extent_x(), grid.extent_y()), bragg_k);
  spec.n_k = cfg.spectrum.n_k;
  spec.n_theta = cfg.spectrum.n_theta;
  if (cfg.spectrum.k_min > 0.0) spec.k_min = cfg.spectrum.k_min;
  if (cfg.spectrum.k_max > 0.0) spec.k_max = cfg.spectrum.k_max;
  const auto sgrid = spectrum::make_spectral_grid(spec, cfg.seed);
  const auto comps = spectrum::sea_components(sgrid, cfg.sea, spectrum::nyquist_wavenumber(grid));

  const double th = cfg.radar.incidence_rad();
  const double ci = std::cos(th), si = std::sin(th);
  std::vector<Harmonic> terms;
  std::vector<std::vector<std::complex<double>>> coef(2);
  terms.reserve(comps.size());
  for (const auto& c : comps) {
    const double k = std::hypot(c.kx, c.ky);
    terms.push_back({c.kx, c.ky, c.phase - c.omega * cfg.time_s});
    coef[0].emplace_back(c.amplitude, 0.0);
    coef[1].push_back(c.amplitude * c.omega * std::complex<double>(-si * c.ky / k, -ci));
  }
  auto fields = sum_harmonics(grid, terms, coef, cfg.threads);
  return {std::move(fields[0]), std::move(fields[1]), comps.size()};
}

void add_turbulent_streak(ScalarField2D& sigma, const SceneConfig& cfg, double sx, double sy,
                          std::uint64_t seed) {
  const auto& ship = cfg.ship->params;
  const auto& s = cfg.surrogate;
  const double h = deg_to_rad(ship.heading);
  const double ux = std::cos(h), uy = std::sin(h);
  const double length = s.streak_length * ship.length;
  auto rng = RandomStream::derive(seed, "turbulent_streak");
  const GridSpec& g = sigma.grid();
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      const double px = g.x(ix) - sx, py = g.y(iy) - sy;
      const double along = px * ux + py * uy;
      const double across = -px * uy + py * ux;
      const double jitter = 0.6 + 0.8 * rng.uniform();
      if (along > 0.5 * ship.length || along < -length) continue;
      const double decay = std::exp(std::min(along, 0.0) / length);
      const double profile = std::exp(-(across * across) / (s.streak_width_m * s.streak_width_m));
      sigma(ix, iy) *= 1.0 + s.streak_gain * profile * decay * jitter;
    }
  }
}

double std_dev(const ScalarField2D& f) { return std::sqrt(f.variance()); }

}  // namespace

SceneProducts simulate_scene_products(const SceneConfig& cfg) {
  cfg.validate();
  const GridSpec grid = cfg.grid.spec();
  SceneProducts out;
  SceneMetadata& m = out.meta;
  m.seed = cfg.seed;
  m.spectrum_seed = derive_seed(cfg.seed, "wave_spectrum");
  m.speckle_seed = derive_seed(cfg.seed, "speckle");
  m.surrogate_seed = derive_seed(cfg.seed, "surrogate");

  if (!cfg.grid.strict) {
    try {
      spectrum::check_resolution(grid, cfg.sea);
    } catch (const ConfigError& e) {
      m.warnings.push_back(e.what());
    }
    if (cfg.ship && std::min(grid.extent_x(), grid.extent_y()) < 4.0 * cfg.ship->params.length) {
      m.warnings.push_back("scene extent is shorter than four ship lengths");
    }
  }

  m.dielectric = em::dielectric(cfg.radar.frequency_hz, cfg.sea.salinity_ppt, cfg.sea.temperature_c);
  const em::RelaxationRate mu = em::relaxation_rate(cfg.sea.wind_speed_10m);
  m.relaxation_rate = mu.mu;
  m.bragg_wavenumber = scattering::bragg_wavenumber(cfg.radar, cfg.radar.incidence_rad());
  m.peak_wavenumber = spectrum::peak_wavenumber(cfg.sea);
  m.range_to_velocity_s = cfg.radar.range_to_velocity();

  auto sea = sea_kinematics(cfg, m.bragg_wavenumber);
  m.sea_components = sea.components;
  m.significant_wave_height = 4.0 * std_dev(sea.elevation);
  out.sea_elevation = std::move(sea.elevation);
  out.radial_velocity = std::move(sea.radial);
  out.ship_elevation = ScalarField2D(grid);

  if (cfg.ship) {
    const auto& ship = cfg.ship->params;
    m.froude_number = kelvin::froude_number(ship);
    const auto pos = default_ship_position(grid, ship);
    m.ship_x = cfg.ship->x.value_or(pos.first);
    m.ship_y = cfg.ship->y.value_or(pos.second);
    kelvin::KelvinOptions kopt;
    kopt.ship_x = m.ship_x;
    kopt.ship_y = m.ship_y;
    kopt.threads = cfg.threads;
    auto wake = kelvin::kelvin_elevation(grid, ship, kopt);
    m.kelvin_nodes = wake.quadrature_nodes;
    m.kelvin_wavenumber_cap = wake.wavenumber_cap;
    for (auto& w : wake.warnings) m.warnings.push_back(std::move(w));
    out.ship_elevation = std::move(wake.elevation);
    if (ship.speed > 0.0) {
      out.radial_velocity += sar::orbital_radial_velocity(out.ship_elevation, cfg.radar.incidence_rad(),
                                                          deg_to_rad(ship.heading))
                                 .radial;
    }
  }

  out.elevation = out.sea_elevation;
  out.elevation += out.ship_elevation;

  scattering::Sigma0Options sopt;
  sopt.facet_tilt = cfg.scattering.facet_tilt;
  sopt.tilt_bragg_vector = cfg.scattering.tilt_bragg_vector;
  auto s0 = scattering::sigma0_field(out.elevation, cfg.radar, m.dielectric, cfg.sea, sopt);
  m.clamped_facets = s0.clamped_facets;
  out.sigma0 = std::move(s0.sigma0);

  auto mopt = scattering::default_modulation_options(cfg.radar, deg_to_rad(cfg.sea.wind_direction));
  if (cfg.scattering.tilt_sign) mopt.tilt_sign = *cfg.scattering.tilt_sign;
  auto mod = scattering::modulate_nrcs(out.sigma0, out.elevation, cfg.radar, mu, mopt);
  m.clamped_pixels = mod.clamped_pixels;
  m.imaginary_residue = mod.imaginary_residue;
  out.sigma = std::move(mod.sigma);

  if (cfg.ship && cfg.surrogate.turbulent_streak) {
    add_turbulent_streak(out.sigma, cfg, m.ship_x, m.ship_y, m.surrogate_seed);
  }

  sar::SarIntegrationOptions iopt;
  iopt.edge = cfg.imaging.edge;
  iopt.coherence = cfg.imaging.coherence;
  auto img = sar::sar_integrate(out.sigma, sar::OrbitalVelocityField{out.radial_velocity}, cfg.radar, iopt);
  m.azimuth_resolution_m = img.azimuth_resolution_m;
  m.dropped_energy = img.dropped_energy;
  m.edge_crossings = img.edge_crossings;
  out.intensity = std::move(img.intensity);

  if (cfg.imaging.speckle) {
    out.image = sar::apply_speckle(out.intensity, {cfg.imaging.speckle_shape, cfg.seed});
  } else {
    out.image = out.intensity;
  }
  if (m.clamped_pixels > 0) {
    std::ostringstream os;
    os << m.clamped_pixels << " pixels had negative modulated NRCS and were clamped to zero";
    m.warnings.push_back(os.str());
  }
  return out;
}

SceneRecord simulate_scene(const SceneConfig& config) {
  auto p = simulate_scene_products(config);
  return {config, std::move(p.image), std::move(p.meta)};
}

nlohmann::json module_versions() {
  return {{"wakesim", kVersion},
          {"em_params", "debye-cole-cole/1"},
          {"wave_spectrum", "jonswap-mitsuyasu/1"},
          {"kelvin_wake", "michell-parabolic-strut/1"},
          {"scattering", "two-scale-spm/1"},
          {"sar_imaging", "velocity-bunching/1"},
          {"scene_pipeline", kVersion}};
}

nlohmann::json metadata_to_json(const SceneMetadata& m) {
  return {{"derived",
           {{"dielectric_real", m.dielectric.real},
            {"dielectric_imag", m.dielectric.imag},
            {"relaxation_rate", m.relaxation_rate},
            {"froude_number", m.froude_number},
            {"bragg_wavenumber", m.bragg_wavenumber},
            {"peak_wavenumber", std::isfinite(m.peak_wavenumber) ? nlohmann::json(m.peak_wavenumber)
                                                                 : nlohmann::json(nullptr)},
            {"significant_wave_height", m.significant_wave_height},
            {"azimuth_resolution_m", m.azimuth_resolution_m},
            {"range_to_velocity_s", m.range_to_velocity_s},
            {"ship_x", m.ship_x},
            {"ship_y", m.ship_y}}},
          {"counters",
           {{"sea_components", m.sea_components},
            {"kelvin_nodes", m.kelvin_nodes},
            {"kelvin_wavenumber_cap", m.kelvin_wavenumber_cap},
            {"clamped_facets", m.clamped_facets},
            {"clamped_pixels", m.clamped_pixels},
            {"imaginary_residue", m.imaginary_residue},
            {"dropped_energy", m.dropped_energy},
            {"edge_crossings", m.edge_crossings}}},
          {"seeds",
           {{"master", m.seed},
            {"wave_spectrum", m.spectrum_seed},
            {"speckle", m.speckle_seed},
            {"surrogate", m.surrogate_seed}}},
          {"warnings", m.warnings}};
}

}  // namespace wakesim::pipeline
