#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "wakesim/field.hpp"
#include "wakesim/kelvin_wake.hpp"
#include "wakesim/sar_imaging.hpp"
#include "wakesim/scattering.hpp"
#include "wakesim/wave_spectrum.hpp"

namespace wakesim::pipeline {

enum class ShipClass { Cargo, Tanker };

std::string to_string(ShipClass c);
/// Accepts "cargo"/"tanker" in any case; throws ConfigError otherwise.
ShipClass parse_ship_class(const std::string& text);

struct ShipEntry {
  kelvin::ShipParams params;
  std::string mmsi;
  ShipClass ship_class = ShipClass::Cargo;
  /// Ship centre in scene coordinates; unset places the ship so the wake
  /// trails across the scene.
  std::optional<double> x;
  std::optional<double> y;
};

struct GridConfig {
  std::size_t nx = 512;
  std::size_t ny = 512;
  double dx = 4.0;
  double dy = 4.0;
  /// Strict grids reject unresolved sea spectra and scenes shorter than four
  /// ship lengths; relaxed grids record a warning instead.
  bool strict = true;

  GridSpec spec() const { return {nx, ny, dx, dy, 0.0, 0.0}; }
};

struct SpectrumConfig {
  std::size_t n_k = 128;
  std::size_t n_theta = 72;
  /// 0 selects the defaults derived from the scene size and Bragg wavenumber.
  double k_min = 0.0;
  double k_max = 0.0;
};

struct ScatteringConfig {
  bool facet_tilt = true;
  bool tilt_bragg_vector = true;
  /// Unset uses the polarization default.
  std::optional<scattering::TiltSign> tilt_sign;
};

struct ImagingConfig {
  sar::EdgePolicy edge = sar::EdgePolicy::Wrap;
  /// Ocean coherence time of S-band Bragg scatterers; drives the
  /// wavelength-dependent part of the degraded azimuth resolution.
  sar::CoherenceInputs coherence{0.1, 0.0, 0.0};
  bool speckle = true;
  double speckle_shape = 1.8;
};

/// Extra scene features used to build a shifted "real-like" domain.
struct SurrogateConfig {
  bool turbulent_streak = false;
  double streak_gain = 1.5;      // peak relative NRCS increase on the track
  double streak_width_m = 20.0;  // 1/e half-width across the track
  double streak_length = 3.0;    // ship lengths astern
};

struct SceneConfig {
  spectrum::SeaStateParams sea;
  std::optional<ShipEntry> ship;
  scattering::RadarConfig radar;
  GridConfig grid;
  SpectrumConfig spectrum;
  ScatteringConfig scattering;
  ImagingConfig imaging;
  SurrogateConfig surrogate;
  std::uint64_t seed = 1;
  double time_s = 0.0;
  unsigned threads = 1;

  /// Checks every component invariant; grid-level checks follow grid.strict.
  void validate() const;
};

/// NovaSAR-1 style radar: S band 3.2 GHz VV, H = 580 km, V = 7.6 km/s.
scattering::RadarConfig novasar_radar(double incidence_deg);

nlohmann::json to_json(const SceneConfig& cfg);
/// Parses a scene config. Missing keys take defaults; unknown keys throw ConfigError.
SceneConfig scene_config_from_json(const nlohmann::json& j);
SceneConfig load_scene_config(const std::string& path);

nlohmann::json ship_to_json(const ShipEntry& ship);
ShipEntry ship_from_json(const nlohmann::json& j);

/// Throws ConfigError if `j` is not an object or has keys outside `allowed`.
void require_known_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                        const std::string& where);

nlohmann::json read_json_file(const std::string& path);

}  // namespace wakesim::pipeline
