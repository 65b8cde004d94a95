#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wakesim/dataset_io.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/rng.hpp"
#include "wakesim/scene.hpp"
#include "wakesim/sweep.hpp"

using namespace wakesim;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("wakesim_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string bytes_of(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScalarField2D as_float32(const ScalarField2D& f) {
  ScalarField2D out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out.values()[i] = static_cast<float>(f.values()[i]);
  return out;
}

pipeline::SceneConfig small_scene() {
  auto row = pipeline::nvsim_ship_table()[1];
  pipeline::SceneConfig c;
  c.sea.wind_speed_10m = row.wind_speed;
  c.sea.wind_direction = row.wind_direction;
  c.sea.fetch_km = row.fetch_km;
  c.ship = row.ship;
  c.radar = pipeline::novasar_radar(row.incidence);
  c.grid = {48, 40, 4.0, 4.0, false};
  c.spectrum = {32, 16, 0.0, 0.0};
  c.seed = 99;
  return c;
}

}  // namespace

TEST_CASE("float32 rasters round-trip bit-identically") {
  const auto dir = scratch("raw");
  ScalarField2D f(GridSpec{37, 11, 2.0, 3.0});
  auto rng = RandomStream::derive(4, "raw");
  for (double& v : f.values()) v = std::ldexp(rng.uniform() - 0.3, static_cast<int>(rng.uniform() * 40) - 20);
  f(0, 0) = 0.0;
  f(1, 0) = -0.0;
  io::write_raw_f32(dir / "a.f32", f);
  CHECK(fs::file_size(dir / "a.f32") == 37 * 11 * 4);
  const auto back = io::read_raw_f32(dir / "a.f32", f.grid());
  CHECK(back == as_float32(f));
  // Little-endian on disk regardless of host.
  const std::string b = bytes_of(dir / "a.f32");
  const float expected = static_cast<float>(f(2, 0));
  std::uint32_t u;
  std::memcpy(&u, &expected, 4);
  CHECK(static_cast<unsigned char>(b[8]) == (u & 0xFFu));
  CHECK(static_cast<unsigned char>(b[11]) == (u >> 24));
  CHECK(!fs::exists(dir / "a.f32.part"));
  CHECK_THROWS_AS(io::read_raw_f32(dir / "a.f32", GridSpec{36, 11, 1.0, 1.0}), IoError);
  CHECK_THROWS_AS(io::read_raw_f32(dir / "missing.f32", f.grid()), IoError);
  fs::remove_all(dir);
}

TEST_CASE("quicklook scaling") {
  const auto dir = scratch("pgm");
  ScalarField2D f(GridSpec{5, 2, 1.0, 1.0});
  const double levels[] = {1.0, 0.1, 1e-3, 1e-4, 0.0, 10.0, std::pow(10.0, -1.5), 0.5, 0.2, 1e-2};
  for (std::size_t i = 0; i < 10; ++i) f.values()[i] = levels[i];
  io::write_quicklook(dir / "q.pgm", f);
  const auto q = io::read_pgm(dir / "q.pgm");
  CHECK(q.grid().nx == 5);
  CHECK(q.grid().ny == 2);
  for (std::size_t i = 0; i < 10; ++i) {
    const double db = levels[i] > 0 ? 10 * std::log10(levels[i]) : -1e9;
    const double t = std::min(1.0, std::max(0.0, (db + 30.0) / 30.0));
    CAPTURE(i);
    CHECK(q.values()[i] == std::round(255 * t));
  }
  const std::string header = "P5\n5 2\n255\n";
  CHECK(bytes_of(dir / "q.pgm").substr(0, header.size()) == header);

  io::write_quicklook(dir / "r.pgm", f);
  CHECK(bytes_of(dir / "q.pgm") == bytes_of(dir / "r.pgm"));
  CHECK_THROWS_AS(io::write_quicklook(dir / "s.pgm", f, {0.0, -10.0}), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("a record round-trips and reproduces from its metadata") {
  const auto dir = scratch("record");
  const auto rec = pipeline::simulate_scene(small_scene());
  const auto files = io::write_record(dir, "cargo/218433000/x", rec, {{"record_id", "x"}}, io::OutputFormat::Both);
  CHECK(files["raw"] == "cargo/218433000/x.f32");
  CHECK(files["quicklook"] == "cargo/218433000/x.pgm");
  CHECK(files["meta"] == "cargo/218433000/x.meta");

  const auto loaded = io::read_record(dir / "cargo/218433000/x.meta");
  CHECK(loaded.image == as_float32(rec.image));
  CHECK(loaded.meta["schema"] == "wakesim.record/1");
  CHECK(loaded.meta["label"] == "cargo");
  CHECK(loaded.meta["mmsi"] == "218433000");
  CHECK(loaded.meta["record_id"] == "x");
  CHECK(loaded.meta["raster"]["width"] == 48);
  CHECK(loaded.meta["raster"]["height"] == 40);
  CHECK(loaded.meta["seeds"]["master"] == 99);

  const auto again = pipeline::simulate_scene(pipeline::scene_config_from_json(loaded.meta["config"]));
  CHECK(as_float32(again.image) == loaded.image);

  const auto q1 = bytes_of(dir / "cargo/218433000/x.pgm");
  io::write_record(dir, "y", again, {}, io::OutputFormat::Quicklook);
  CHECK(bytes_of(dir / "y.pgm") == q1);
  CHECK(!fs::exists(dir / "y.f32"));
  CHECK_THROWS_AS(io::read_record(dir / "y.meta"), IoError);
  fs::remove_all(dir);
}

TEST_CASE("JSON lines tolerate a truncated tail") {
  const auto dir = scratch("lines");
  const auto p = dir / "manifest";
  CHECK(io::read_json_lines(p).empty());
  io::append_json_line(p, {{"record_id", "a"}, {"status", "incomplete"}});
  io::append_json_line(p, {{"record_id", "b"}, {"status", "complete"}});
  io::append_json_line(p, {{"record_id", "a"}, {"status", "complete"}});
  {
    std::ofstream out(p, std::ios::app);
    out << "{\"record_id\": \"c\", \"sta";
  }
  const auto lines = io::read_json_lines(p);
  CHECK(lines.size() == 3);
  const auto latest = pipeline::latest_manifest_entries(p);
  REQUIRE(latest.size() == 2);
  CHECK(latest[0]["record_id"] == "a");
  CHECK(latest[0]["status"] == "complete");
  CHECK(latest[1]["record_id"] == "b");
  fs::remove_all(dir);
}

TEST_CASE("output format names") {
  CHECK(io::parse_output_format("raw") == io::OutputFormat::Raw);
  CHECK(io::parse_output_format("quicklook") == io::OutputFormat::Quicklook);
  CHECK(io::parse_output_format("both") == io::OutputFormat::Both);
  CHECK(io::to_string(io::OutputFormat::Both) == "both");
  CHECK_THROWS_AS(io::parse_output_format("png"), ConfigError);
}
