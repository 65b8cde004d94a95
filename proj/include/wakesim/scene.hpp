#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wakesim/em_params.hpp"
#include "wakesim/field.hpp"
#include "wakesim/scene_config.hpp"

namespace wakesim::pipeline {

inline constexpr const char* kVersion = "1.0.0";

struct SceneMetadata {
  em::ComplexDielectric dielectric;
  double relaxation_rate = 0.0;
  double froude_number = 0.0;  // 0 without a ship
  double bragg_wavenumber = 0.0;
  double peak_wavenumber = 0.0;
  double significant_wave_height = 0.0;  // of the synthesized sea, 4 std(Z_sea)
  double azimuth_resolution_m = 0.0;
  double range_to_velocity_s = 0.0;
  double ship_x = 0.0;
  double ship_y = 0.0;

  std::size_t sea_components = 0;
  std::size_t kelvin_nodes = 0;
  double kelvin_wavenumber_cap = 0.0;
  std::size_t clamped_facets = 0;
  std::size_t clamped_pixels = 0;
  double imaginary_residue = 0.0;
  double dropped_energy = 0.0;
  std::size_t edge_crossings = 0;

  std::uint64_t seed = 0;
  std::uint64_t spectrum_seed = 0;
  std::uint64_t speckle_seed = 0;
  std::uint64_t surrogate_seed = 0;

  std::vector<std::string> warnings;
};

/// Every intermediate raster of one scene.
struct SceneProducts {
  ScalarField2D sea_elevation;
  ScalarField2D ship_elevation;
  ScalarField2D elevation;
  ScalarField2D radial_velocity;
  ScalarField2D sigma0;
  ScalarField2D sigma;
  /// SAR intensity before speckle.
  ScalarField2D intensity;
  /// Final image (speckled when enabled).
  ScalarField2D image;
  SceneMetadata meta;
};

struct SceneRecord {
  SceneConfig config;
  ScalarField2D image;
  SceneMetadata meta;
};

/// Ship position used when the config leaves it unset: forward of the scene
/// centre along the heading so the wake trails through the middle.
std::pair<double, double> default_ship_position(const GridSpec& grid, const kelvin::ShipParams& ship);

/// Runs the full chain: dielectric and relaxation rate, wind sea and Kelvin
/// wake, facet NRCS, wave modulation, velocity bunching, speckle.
/// Validates the config first.
SceneProducts simulate_scene_products(const SceneConfig& config);

SceneRecord simulate_scene(const SceneConfig& config);

/// Module tags written into every metadata file.
nlohmann::json module_versions();

nlohmann::json metadata_to_json(const SceneMetadata& meta);

}  // namespace wakesim::pipeline
