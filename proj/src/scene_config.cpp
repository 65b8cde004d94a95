#include "wakesim/scene_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "wakesim/errors.hpp"

namespace wakesim::pipeline {

using nlohmann::json;

std::string to_string(ShipClass c) { return c == ShipClass::Cargo ? "cargo" : "tanker"; }

ShipClass parse_ship_class(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (t == "cargo") return ShipClass::Cargo;
  if (t == "tanker") return ShipClass::Tanker;
  throw ConfigError("unknown ship class '" + text + "' (expected cargo or tanker)");
}

void require_known_keys(const json& j, std::initializer_list<const char*> allowed,
                        const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& item : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw ConfigError(where + ": unknown key '" + item.key() + "'");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

namespace {

template <typename T>
void read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

std::string pol_name(scattering::Polarization p) { return p == scattering::Polarization::VV ? "VV" : "HH"; }

scattering::Polarization parse_pol(const std::string& s) {
  if (s == "VV" || s == "vv") return scattering::Polarization::VV;
  if (s == "HH" || s == "hh") return scattering::Polarization::HH;
  throw ConfigError("radar.polarization must be VV or HH, got '" + s + "'");
}

}  // namespace

scattering::RadarConfig novasar_radar(double incidence_deg) {
  scattering::RadarConfig r;
  r.frequency_hz = 3.2e9;
  r.polarization = scattering::Polarization::VV;
  r.incidence_deg = incidence_deg;
  r.platform_height_m = 580e3;
  r.platform_velocity_mps = 7600.0;
  return r;
}

json ship_to_json(const ShipEntry& s) {
  json j = {{"mmsi", s.mmsi},
            {"class", to_string(s.ship_class)},
            {"length", s.params.length},
            {"beam", s.params.beam},
            {"draft", s.params.draft},
            {"speed", s.params.speed},
            {"heading", s.params.heading}};
  if (s.x) j["x"] = *s.x;
  if (s.y) j["y"] = *s.y;
  return j;
}

ShipEntry ship_from_json(const json& j) {
  require_known_keys(j, {"mmsi", "class", "length", "beam", "draft", "speed", "heading", "x", "y"}, "ship");
  ShipEntry s;
  read(j, "mmsi", s.mmsi, "ship");
  std::string cls = to_string(s.ship_class);
  read(j, "class", cls, "ship");
  s.ship_class = parse_ship_class(cls);
  read(j, "length", s.params.length, "ship");
  read(j, "beam", s.params.beam, "ship");
  read(j, "draft", s.params.draft, "ship");
  read(j, "speed", s.params.speed, "ship");
  read(j, "heading", s.params.heading, "ship");
  if (j.contains("x")) s.x = j.at("x").get<double>();
  if (j.contains("y")) s.y = j.at("y").get<double>();
  return s;
}

json to_json(const SceneConfig& c) {
  json j;
  j["sea"] = {{"wind_speed", c.sea.wind_speed_10m},
              {"wind_direction", c.sea.wind_direction},
              {"fetch_km", c.sea.fetch_km},
              {"salinity", c.sea.salinity_ppt},
              {"temperature", c.sea.temperature_c}};
  if (c.ship) j["ship"] = ship_to_json(*c.ship);
  j["radar"] = {{"frequency_hz", c.radar.frequency_hz},
                {"polarization", pol_name(c.radar.polarization)},
                {"incidence_deg", c.radar.incidence_deg},
                {"platform_height_m", c.radar.platform_height_m},
                {"platform_velocity_mps", c.radar.platform_velocity_mps},
                {"slant_range_m", c.radar.slant_range_m},
                {"looks", c.radar.looks},
                {"azimuth_resolution_m", c.radar.azimuth_resolution_m},
                {"range_resolution_m", c.radar.range_resolution_m}};
  j["grid"] = {{"nx", c.grid.nx}, {"ny", c.grid.ny}, {"dx", c.grid.dx}, {"dy", c.grid.dy},
               {"strict", c.grid.strict}};
  j["spectrum"] = {{"n_k", c.spectrum.n_k}, {"n_theta", c.spectrum.n_theta},
                   {"k_min", c.spectrum.k_min}, {"k_max", c.spectrum.k_max}};
  j["scattering"] = {{"facet_tilt", c.scattering.facet_tilt},
                     {"tilt_bragg_vector", c.scattering.tilt_bragg_vector}};
  if (c.scattering.tilt_sign) {
    j["scattering"]["tilt_sign"] = *c.scattering.tilt_sign == scattering::TiltSign::Plus ? "plus" : "minus";
  }
  j["imaging"] = {{"edge", c.imaging.edge == sar::EdgePolicy::Wrap ? "wrap" : "drop"},
                  {"coherence_time_s", c.imaging.coherence.coherence_time_s},
                  {"radial_velocity_std", c.imaging.coherence.radial_velocity_std},
                  {"velocity_spread_coefficient", c.imaging.coherence.velocity_spread_coefficient},
                  {"speckle", c.imaging.speckle},
                  {"speckle_shape", c.imaging.speckle_shape}};
  j["surrogate"] = {{"turbulent_streak", c.surrogate.turbulent_streak},
                    {"streak_gain", c.surrogate.streak_gain},
                    {"streak_width_m", c.surrogate.streak_width_m},
                    {"streak_length", c.surrogate.streak_length}};
  j["seed"] = c.seed;
  j["time_s"] = c.time_s;
  j["threads"] = c.threads;
  return j;
}

SceneConfig scene_config_from_json(const json& j) {
  require_known_keys(j, {"sea", "ship", "radar", "grid", "spectrum", "scattering", "imaging", "surrogate",
                         "seed", "time_s", "threads"},
                     "scene");
  SceneConfig c;
  if (j.contains("sea")) {
    const json& s = j["sea"];
    require_known_keys(s, {"wind_speed", "wind_direction", "fetch_km", "salinity", "temperature"}, "sea");
    read(s, "wind_speed", c.sea.wind_speed_10m, "sea");
    read(s, "wind_direction", c.sea.wind_direction, "sea");
    read(s, "fetch_km", c.sea.fetch_km, "sea");
    read(s, "salinity", c.sea.salinity_ppt, "sea");
    read(s, "temperature", c.sea.temperature_c, "sea");
  }
  if (j.contains("ship") && !j["ship"].is_null()) c.ship = ship_from_json(j["ship"]);
  if (j.contains("radar")) {
    const json& r = j["radar"];
    require_known_keys(r, {"frequency_hz", "polarization", "incidence_deg", "platform_height_m",
                           "platform_velocity_mps", "slant_range_m", "looks", "azimuth_resolution_m",
                           "range_resolution_m"},
                       "radar");
    read(r, "frequency_hz", c.radar.frequency_hz, "radar");
    std::string pol = pol_name(c.radar.polarization);
    read(r, "polarization", pol, "radar");
    c.radar.polarization = parse_pol(pol);
    read(r, "incidence_deg", c.radar.incidence_deg, "radar");
    read(r, "platform_height_m", c.radar.platform_height_m, "radar");
    read(r, "platform_velocity_mps", c.radar.platform_velocity_mps, "radar");
    read(r, "slant_range_m", c.radar.slant_range_m, "radar");
    read(r, "looks", c.radar.looks, "radar");
    read(r, "azimuth_resolution_m", c.radar.azimuth_resolution_m, "radar");
    read(r, "range_resolution_m", c.radar.range_resolution_m, "radar");
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    require_known_keys(g, {"nx", "ny", "dx", "dy", "strict"}, "grid");
    read(g, "nx", c.grid.nx, "grid");
    read(g, "ny", c.grid.ny, "grid");
    read(g, "dx", c.grid.dx, "grid");
    read(g, "dy", c.grid.dy, "grid");
    read(g, "strict", c.grid.strict, "grid");
  }
  if (j.contains("spectrum")) {
    const json& s = j["spectrum"];
    require_known_keys(s, {"n_k", "n_theta", "k_min", "k_max"}, "spectrum");
    read(s, "n_k", c.spectrum.n_k, "spectrum");
    read(s, "n_theta", c.spectrum.n_theta, "spectrum");
    read(s, "k_min", c.spectrum.k_min, "spectrum");
    read(s, "k_max", c.spectrum.k_max, "spectrum");
  }
  if (j.contains("scattering")) {
    const json& s = j["scattering"];
    require_known_keys(s, {"facet_tilt", "tilt_bragg_vector", "tilt_sign"}, "scattering");
    read(s, "facet_tilt", c.scattering.facet_tilt, "scattering");
    read(s, "tilt_bragg_vector", c.scattering.tilt_bragg_vector, "scattering");
    if (s.contains("tilt_sign")) {
      const std::string t = s["tilt_sign"].get<std::string>();
      if (t == "plus") c.scattering.tilt_sign = scattering::TiltSign::Plus;
      else if (t == "minus") c.scattering.tilt_sign = scattering::TiltSign::Minus;
      else throw ConfigError("scattering.tilt_sign must be plus or minus");
    }
  }
  if (j.contains("imaging")) {
    const json& s = j["imaging"];
    require_known_keys(s, {"edge", "coherence_time_s", "radial_velocity_std", "velocity_spread_coefficient",
                           "speckle", "speckle_shape"},
                       "imaging");
    std::string edge = "wrap";
    read(s, "edge", edge, "imaging");
    if (edge == "wrap") c.imaging.edge = sar::EdgePolicy::Wrap;
    else if (edge == "drop") c.imaging.edge = sar::EdgePolicy::Drop;
    else throw ConfigError("imaging.edge must be wrap or drop");
    read(s, "coherence_time_s", c.imaging.coherence.coherence_time_s, "imaging");
    read(s, "radial_velocity_std", c.imaging.coherence.radial_velocity_std, "imaging");
    read(s, "velocity_spread_coefficient", c.imaging.coherence.velocity_spread_coefficient, "imaging");
    read(s, "speckle", c.imaging.speckle, "imaging");
    read(s, "speckle_shape", c.imaging.speckle_shape, "imaging");
  }
  if (j.contains("surrogate")) {
    const json& s = j["surrogate"];
    require_known_keys(s, {"turbulent_streak", "streak_gain", "streak_width_m", "streak_length"}, "surrogate");
    read(s, "turbulent_streak", c.surrogate.turbulent_streak, "surrogate");
    read(s, "streak_gain", c.surrogate.streak_gain, "surrogate");
    read(s, "streak_width_m", c.surrogate.streak_width_m, "surrogate");
    read(s, "streak_length", c.surrogate.streak_length, "surrogate");
  }
  read(j, "seed", c.seed, "scene");
  read(j, "time_s", c.time_s, "scene");
  read(j, "threads", c.threads, "scene");
  return c;
}

SceneConfig load_scene_config(const std::string& path) {
  try {
    return scene_config_from_json(read_json_file(path));
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

void SceneConfig::validate() const {
  sea.validate();
  radar.validate();
  grid.spec().validate();
  if (ship) ship->params.validate();
  if (!(imaging.speckle_shape > 0.0)) throw DomainError("imaging.speckle_shape must be > 0");
  if (grid.strict) {
    spectrum::check_resolution(grid.spec(), sea);
    if (ship) {
      const double extent = std::min(grid.spec().extent_x(), grid.spec().extent_y());
      if (extent < 4.0 * ship->params.length) {
        std::ostringstream os;
        os << "scene extent " << extent << " m is shorter than four ship lengths ("
           << 4.0 * ship->params.length << " m)";
        throw ConfigError(os.str());
      }
    }
  }
}

}  // namespace wakesim::pipeline
