#include "wakesim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "wakesim/errors.hpp"
#include "wakesim/rng.hpp"
#include "wakesim/scene.hpp"

namespace wakesim::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<double> ParameterRange::values(double center) const {
  if (count == 0) throw ConfigError("sweep: sample count must be >= 1");
  if (!(half_range >= 0.0)) throw ConfigError("sweep: half range must be >= 0");
  if (count == 1) return {center};
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i + 1 == count) {
      out[i] = center + half_range;
    } else {
      out[i] = center - half_range + 2.0 * half_range * static_cast<double>(i) / static_cast<double>(count - 1);
    }
  }
  return out;
}

std::size_t SweepSpec::cardinality() const {
  return wind_speed.count * wind_direction.count * ship_speed.count * ship_heading.count * incidence.count;
}

std::vector<ShipTableRow> nvsim_ship_table() {
  auto row = [](const char* mmsi, ShipClass c, double l, double b, double t, double fetch, double u10,
                double wdir, double vs, double heading, double inc) {
    ShipTableRow r;
    r.ship.mmsi = mmsi;
    r.ship.ship_class = c;
    r.ship.params = {l, b, t, vs, heading};
    r.fetch_km = fetch;
    r.wind_speed = u10;
    r.wind_direction = wdir;
    r.incidence = inc;
    return r;
  };
  return {row("215071000", ShipClass::Tanker, 183, 32, 9.30, 80, 4.13, 343.50, 6.73, 351.50, 29.35),
          row("218433000", ShipClass::Cargo, 126, 23, 6.90, 25, 6.10, 359.50, 7.45, 182.50, 29.31),
          row("371720000", ShipClass::Tanker, 229, 103, 9.50, 80, 3.33, 332.50, 7.56, 355.50, 23.96),
          row("636013817", ShipClass::Tanker, 227, 150, 9.70, 80, 4.85, 4.85, 6.89, 156.50, 27.87),
          row("477665200", ShipClass::Cargo, 266, 150, 10.50, 80, 6.20, 341.50, 8.44, 181.50, 28.23)};
}

SweepConfig nvsim_sweep_config() {
  SweepConfig c;
  c.base.radar = novasar_radar(30.0);
  // Low-wind rows have peak wavelengths under four 4 m pixels; those records
  // are synthesized up to the grid Nyquist limit and carry a warning.
  c.base.grid.strict = false;
  c.ships = nvsim_ship_table();
  return c;
}

namespace {

json range_json(const ParameterRange& r) { return {{"half_range", r.half_range}, {"count", r.count}}; }

ParameterRange range_from_json(const json& j, const std::string& where) {
  require_known_keys(j, {"half_range", "count"}, where);
  ParameterRange r;
  r.half_range = j.value("half_range", 0.0);
  r.count = j.value("count", std::size_t{1});
  return r;
}

double wrap_degrees(double a) {
  double w = std::fmod(a, 360.0);
  if (w < 0.0) w += 360.0;
  if (w >= 360.0) w = 0.0;
  return w;
}

std::string record_id(const std::string& mmsi, std::size_t a, std::size_t b, std::size_t c, std::size_t d,
                      std::size_t e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s-u%zu-w%02zu-v%zu-h%02zu-i%zu", mmsi.c_str(), a, b, c, d, e);
  return buf;
}

}  // namespace

json to_json(const SweepConfig& c) {
  json ships = json::array();
  for (const auto& r : c.ships) {
    json s = ship_to_json(r.ship);
    s["fetch_km"] = r.fetch_km;
    s["wind_speed"] = r.wind_speed;
    s["wind_direction"] = r.wind_direction;
    s["incidence"] = r.incidence;
    ships.push_back(s);
  }
  return {{"base", to_json(c.base)},
          {"ships", ships},
          {"sweep",
           {{"wind_speed", range_json(c.sweep.wind_speed)},
            {"wind_direction", range_json(c.sweep.wind_direction)},
            {"ship_speed", range_json(c.sweep.ship_speed)},
            {"ship_heading", range_json(c.sweep.ship_heading)},
            {"incidence", range_json(c.sweep.incidence)}}}};
}

SweepConfig sweep_config_from_json(const json& j) {
  require_known_keys(j, {"base", "ships", "sweep"}, "sweep config");
  SweepConfig c = nvsim_sweep_config();
  if (j.contains("base")) c.base = scene_config_from_json(j["base"]);
  if (j.contains("ships")) {
    c.ships.clear();
    for (const auto& s : j["ships"]) {
      json ship = s;
      ShipTableRow r;
      for (const char* k : {"fetch_km", "wind_speed", "wind_direction", "incidence"}) ship.erase(k);
      r.ship = ship_from_json(ship);
      r.fetch_km = s.value("fetch_km", r.fetch_km);
      r.wind_speed = s.value("wind_speed", r.wind_speed);
      r.wind_direction = s.value("wind_direction", r.wind_direction);
      r.incidence = s.value("incidence", r.incidence);
      c.ships.push_back(r);
    }
  }
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    require_known_keys(s, {"wind_speed", "wind_direction", "ship_speed", "ship_heading", "incidence"}, "sweep");
    if (s.contains("wind_speed")) c.sweep.wind_speed = range_from_json(s["wind_speed"], "sweep.wind_speed");
    if (s.contains("wind_direction"))
      c.sweep.wind_direction = range_from_json(s["wind_direction"], "sweep.wind_direction");
    if (s.contains("ship_speed")) c.sweep.ship_speed = range_from_json(s["ship_speed"], "sweep.ship_speed");
    if (s.contains("ship_heading"))
      c.sweep.ship_heading = range_from_json(s["ship_heading"], "sweep.ship_heading");
    if (s.contains("incidence")) c.sweep.incidence = range_from_json(s["incidence"], "sweep.incidence");
  }
  return c;
}

SweepConfig load_sweep_config(const std::string& path) {
  try {
    return sweep_config_from_json(read_json_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::vector<SweepRecord> enumerate_sweep(const SweepConfig& cfg, std::uint64_t master_seed) {
  std::vector<SweepRecord> out;
  out.reserve(cfg.ships.size() * cfg.sweep.cardinality());
  const auto& sw = cfg.sweep;
  for (const auto& row : cfg.ships) {
    const auto u = sw.wind_speed.values(row.wind_speed);
    const auto w = sw.wind_direction.values(row.wind_direction);
    const auto v = sw.ship_speed.values(row.ship.params.speed);
    const auto h = sw.ship_heading.values(row.ship.params.heading);
    const auto inc = sw.incidence.values(row.incidence);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < w.size(); ++b)
        for (std::size_t c = 0; c < v.size(); ++c)
          for (std::size_t d = 0; d < h.size(); ++d)
            for (std::size_t e = 0; e < inc.size(); ++e) {
              SweepRecord r;
              r.record_id = record_id(row.ship.mmsi, a, b, c, d, e);
              SceneConfig& s = r.config;
              s = cfg.base;
              s.sea.wind_speed_10m = u[a];
              s.sea.wind_direction = wrap_degrees(w[b]);
              s.sea.fetch_km = row.fetch_km;
              s.ship = row.ship;
              s.ship->params.speed = v[c];
              s.ship->params.heading = wrap_degrees(h[d]);
              s.radar.incidence_deg = inc[e];
              s.seed = derive_seed(master_seed, r.record_id);
              r.params = {{"wind_speed", s.sea.wind_speed_10m},
                          {"wind_direction", s.sea.wind_direction},
                          {"fetch_km", s.sea.fetch_km},
                          {"ship_speed", s.ship->params.speed},
                          {"ship_heading", s.ship->params.heading},
                          {"incidence", s.radar.incidence_deg},
                          {"length", s.ship->params.length},
                          {"beam", s.ship->params.beam},
                          {"draft", s.ship->params.draft}};
              out.push_back(std::move(r));
            }
  }
  return out;
}

std::vector<json> latest_manifest_entries(const fs::path& manifest) {
  std::map<std::string, json> latest;
  std::vector<std::string> order;
  for (auto& j : io::read_json_lines(manifest)) {
    if (!j.contains("record_id")) continue;
    const std::string id = j["record_id"].get<std::string>();
    if (!latest.count(id)) order.push_back(id);
    latest[id] = std::move(j);
  }
  std::vector<json> out;
  out.reserve(order.size());
  for (const auto& id : order) out.push_back(std::move(latest[id]));
  return out;
}

SweepSummary run_sweep(const SweepConfig& cfg, const SweepOptions& opt) {
  if (opt.out_dir.empty()) throw ConfigError("sweep: output directory is required");
  const fs::path manifest = opt.out_dir / "manifest";
  const fs::path dataset = opt.out_dir / "dataset.json";
  const json description = {{"schema", "wakesim.dataset/1"},
                            {"seed", opt.seed},
                            {"format", io::to_string(opt.format)},
                            {"total_records", cfg.ships.size() * cfg.sweep.cardinality()},
                            {"config", to_json(cfg)},
                            {"versions", module_versions()}};
  if (fs::exists(manifest) && !opt.resume) {
    throw ConfigError(manifest.string() + " already exists; pass --resume to continue that run");
  }
  if (opt.resume && fs::exists(dataset)) {
    const json previous = read_json_file(dataset.string());
    if (previous.value("seed", json()) != description["seed"] || previous.value("config", json()) != description["config"]) {
      throw ConfigError(dataset.string() + " was written with a different configuration or seed");
    }
  }
  io::write_json(dataset, description);

  const auto records = enumerate_sweep(cfg, opt.seed);
  std::map<std::string, bool> complete;
  if (opt.resume) {
    for (const auto& e : latest_manifest_entries(manifest)) {
      if (e.value("status", "") != "complete") continue;
      bool present = true;
      const json files = e.value("files", json::object());
      for (const auto& f : files.items()) {
        present = present && fs::exists(opt.out_dir / f.value().get<std::string>());
      }
      if (present) complete[e["record_id"].get<std::string>()] = true;
    }
  }

  std::vector<const SweepRecord*> todo;
  SweepSummary summary;
  summary.total = records.size();
  for (const auto& r : records) {
    if (complete.count(r.record_id)) {
      ++summary.skipped;
    } else if (opt.limit == 0 || todo.size() < opt.limit) {
      todo.push_back(&r);
    }
  }

  std::mutex writer;
  std::atomic<std::size_t> next{0}, written{0}, failed{0};
  auto entry = [&](const SweepRecord& r, const char* status) {
    const auto& ship = *r.config.ship;
    return json{{"record_id", r.record_id},
                {"status", status},
                {"label", to_string(ship.ship_class)},
                {"mmsi", ship.mmsi},
                {"seed", r.config.seed},
                {"params", r.params}};
  };
  auto worker = [&]() {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      const SweepRecord& r = *todo[i];
      const auto& ship = *r.config.ship;
      const std::string stem = to_string(ship.ship_class) + "/" + ship.mmsi + "/" + r.record_id;
      {
        std::lock_guard<std::mutex> lock(writer);
        io::append_json_line(manifest, entry(r, "incomplete"));
      }
      json line = entry(r, "complete");
      try {
        const SceneRecord rec = simulate_scene(r.config);
        line["files"] = io::write_record(opt.out_dir, stem, rec,
                                         {{"record_id", r.record_id}, {"params", r.params}}, opt.format,
                                         opt.quicklook);
        line["warnings"] = rec.meta.warnings.size();
        ++written;
      } catch (const std::exception& e) {
        line["status"] = "incomplete";
        line["error"] = e.what();
        ++failed;
      }
      std::lock_guard<std::mutex> lock(writer);
      io::append_json_line(manifest, line);
      if (opt.progress) opt.progress(written + failed, todo.size());
    }
  };

  std::exception_ptr fatal;
  auto guarded = [&]() {
    try {
      worker();
    } catch (...) {
      std::lock_guard<std::mutex> lock(writer);
      if (!fatal) fatal = std::current_exception();
      next = todo.size();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(guarded);
  guarded();
  for (auto& t : pool) t.join();
  if (fatal) std::rethrow_exception(fatal);

  summary.written = written;
  summary.failed = failed;
  return summary;
}

}  // namespace wakesim::pipeline
