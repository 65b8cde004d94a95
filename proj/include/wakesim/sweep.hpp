#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wakesim/dataset_io.hpp"
#include "wakesim/scene_config.hpp"

namespace wakesim::pipeline {

/// center +- half_range sampled at `count` evenly spaced points, endpoints
/// included; count 1 gives the centre alone.
struct ParameterRange {
  double half_range = 0.0;
  std::size_t count = 1;

  std::vector<double> values(double center) const;
};

/// Per-parameter sampling around each ship's reference values.
struct SweepSpec {
  ParameterRange wind_speed{0.5, 3};
  ParameterRange wind_direction{15.0, 10};
  ParameterRange ship_speed{0.5, 5};
  ParameterRange ship_heading{30.0, 8};
  ParameterRange incidence{2.0, 3};

  std::size_t cardinality() const;
};

/// One reference acquisition: a ship and the sea/radar state it was seen in.
struct ShipTableRow {
  ShipEntry ship;  // speed and heading are the reference values
  double fetch_km = 80.0;
  double wind_speed = 5.0;
  double wind_direction = 0.0;
  double incidence = 30.0;
};

/// The five NovaSAR-1 acquisitions behind the NVSim dataset.
std::vector<ShipTableRow> nvsim_ship_table();

struct SweepConfig {
  SceneConfig base;  // grid, radar, spectrum, imaging and surrogate settings
  std::vector<ShipTableRow> ships;
  SweepSpec sweep;
};

/// NVSim ships and sampling on the default 512 x 512, 4 m scene with relaxed
/// grid checks.
SweepConfig nvsim_sweep_config();

nlohmann::json to_json(const SweepConfig& cfg);
SweepConfig sweep_config_from_json(const nlohmann::json& j);
SweepConfig load_sweep_config(const std::string& path);

struct SweepRecord {
  std::string record_id;
  SceneConfig config;
  nlohmann::json params;
};

/// Every record of the Cartesian product, ships outermost. Angles are wrapped
/// to [0, 360). Each record is seeded from (master_seed, record_id).
std::vector<SweepRecord> enumerate_sweep(const SweepConfig& cfg, std::uint64_t master_seed);

struct SweepOptions {
  std::filesystem::path out_dir;
  io::OutputFormat format = io::OutputFormat::Raw;
  io::QuicklookScale quicklook;
  unsigned workers = 1;
  bool resume = false;
  std::uint64_t seed = 1;
  /// Stop after this many new records (0 = no limit); used to interrupt runs.
  std::size_t limit = 0;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct SweepSummary {
  std::size_t total = 0;
  std::size_t written = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
};

/// Writes `<out>/<class>/<mmsi>/<record_id>.{f32,meta}`, `<out>/manifest`
/// (JSON Lines, last entry per record wins) and `<out>/dataset.json`.
/// Records already complete in the manifest are skipped when resuming.
SweepSummary run_sweep(const SweepConfig& cfg, const SweepOptions& options);

/// Final status per record id from a manifest.
std::vector<nlohmann::json> latest_manifest_entries(const std::filesystem::path& manifest);

}  // namespace wakesim::pipeline
