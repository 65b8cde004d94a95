#include "wakesim/dataset_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "wakesim/errors.hpp"

namespace wakesim::io {

namespace fs = std::filesystem;

OutputFormat parse_output_format(const std::string& text) {
  if (text == "raw") return OutputFormat::Raw;
  if (text == "quicklook") return OutputFormat::Quicklook;
  if (text == "both") return OutputFormat::Both;
  throw ConfigError("format must be raw, quicklook or both, got '" + text + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Raw: return "raw";
    case OutputFormat::Quicklook: return "quicklook";
    case OutputFormat::Both: return "both";
  }
  return "raw";
}

namespace {

std::uint32_t to_little(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    v = ((v & 0xFFu) << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
  }
  return v;
}

void ensure_parent(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.parent_path().string() + ": " + ec.message());
  }
}

void write_bytes(const fs::path& path, const char* data, std::size_t n) {
  ensure_parent(path);
  const fs::path tmp = path.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(data, static_cast<std::streamsize>(n));
    out.flush();
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

void write_raw_f32(const fs::path& path, const ScalarField2D& field) {
  std::vector<std::uint32_t> buf(field.size());
  const auto v = field.values();
  for (std::size_t i = 0; i < buf.size(); ++i) {
    buf[i] = to_little(std::bit_cast<std::uint32_t>(static_cast<float>(v[i])));
  }
  write_bytes(path, reinterpret_cast<const char*>(buf.data()), buf.size() * sizeof(std::uint32_t));
}

ScalarField2D read_raw_f32(const fs::path& path, const GridSpec& grid) {
  const std::string bytes = read_all(path);
  if (bytes.size() != grid.size() * 4) {
    throw IoError(path.string() + ": expected " + std::to_string(grid.size() * 4) + " bytes, found " +
                  std::to_string(bytes.size()));
  }
  ScalarField2D out(grid);
  auto v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint32_t u;
    std::memcpy(&u, bytes.data() + 4 * i, 4);
    v[i] = static_cast<double>(std::bit_cast<float>(to_little(u)));
  }
  return out;
}

void write_quicklook(const fs::path& path, const ScalarField2D& field, const QuicklookScale& scale) {
  if (!(scale.db_max > scale.db_min)) throw ConfigError("quicklook: db_max must exceed db_min");
  std::string header = "P5\n" + std::to_string(field.nx()) + " " + std::to_string(field.ny()) + "\n255\n";
  std::string data(header.size() + field.size(), '\0');
  std::copy(header.begin(), header.end(), data.begin());
  const auto v = field.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double db = v[i] > 0.0 ? 10.0 * std::log10(v[i]) : scale.db_min;
    const double t = std::clamp((db - scale.db_min) / (scale.db_max - scale.db_min), 0.0, 1.0);
    data[header.size() + i] = static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * t)));
  }
  write_bytes(path, data.data(), data.size());
}

ScalarField2D read_pgm(const fs::path& path) {
  const std::string bytes = read_all(path);
  std::istringstream in(bytes);
  std::string magic;
  std::size_t w = 0, h = 0, maxval = 0;
  auto token = [&]() {
    std::string t;
    while (in >> std::ws && in.peek() == '#') std::getline(in, t);
    in >> t;
    return t;
  };
  magic = token();
  try {
    w = std::stoul(token());
    h = std::stoul(token());
    maxval = std::stoul(token());
  } catch (const std::exception&) {
    throw IoError(path.string() + ": malformed PGM header");
  }
  if (magic != "P5" || maxval == 0 || maxval > 255 || w == 0 || h == 0) {
    throw IoError(path.string() + ": only 8-bit binary PGM is supported");
  }
  const std::size_t offset = static_cast<std::size_t>(in.tellg()) + 1;
  if (bytes.size() < offset + w * h) throw IoError(path.string() + ": truncated PGM");
  ScalarField2D out(GridSpec{w, h, 1.0, 1.0, 0.0, 0.0});
  auto v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<unsigned char>(bytes[offset + i]);
  return out;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
  const std::string text = j.dump(2) + "\n";
  write_bytes(path, text.data(), text.size());
}

nlohmann::json raster_header(const ScalarField2D& f) {
  const GridSpec& g = f.grid();
  return {{"width", g.nx},   {"height", g.ny},         {"dx", g.dx},
          {"dy", g.dy},      {"origin_x", g.origin_x}, {"origin_y", g.origin_y},
          {"dtype", "float32"}, {"byte_order", "little"}, {"layout", "row-major"}};
}

namespace {

nlohmann::json write_rasters(const fs::path& root, const std::string& stem, const ScalarField2D& image,
                             nlohmann::json& meta, OutputFormat format, const QuicklookScale& scale) {
  nlohmann::json files;
  const std::string name = fs::path(stem).filename().string();
  meta["raster"] = raster_header(image);
  if (format != OutputFormat::Quicklook) {
    write_raw_f32(root / (stem + ".f32"), image);
    files["raw"] = stem + ".f32";
    meta["raster"]["file"] = name + ".f32";
  }
  if (format != OutputFormat::Raw) {
    write_quicklook(root / (stem + ".pgm"), image, scale);
    files["quicklook"] = stem + ".pgm";
    meta["quicklook"] = {{"file", name + ".pgm"}, {"db_min", scale.db_min}, {"db_max", scale.db_max}};
  }
  return files;
}

}  // namespace

nlohmann::json write_record(const fs::path& root, const std::string& stem, const pipeline::SceneRecord& r,
                            const nlohmann::json& extra, OutputFormat format, const QuicklookScale& scale) {
  nlohmann::json meta = {{"schema", kRecordSchema}};
  nlohmann::json files = write_rasters(root, stem, r.image, meta, format, scale);
  meta["config"] = pipeline::to_json(r.config);
  if (r.config.ship) {
    meta["label"] = pipeline::to_string(r.config.ship->ship_class);
    meta["mmsi"] = r.config.ship->mmsi;
  }
  meta.update(pipeline::metadata_to_json(r.meta));
  meta["versions"] = pipeline::module_versions();
  if (extra.is_object()) meta.update(extra);
  write_json(root / (stem + ".meta"), meta);
  files["meta"] = stem + ".meta";
  return files;
}

nlohmann::json write_image(const fs::path& root, const std::string& stem, const ScalarField2D& image,
                           const nlohmann::json& extra, OutputFormat format, const QuicklookScale& scale) {
  nlohmann::json meta = {{"schema", kImageSchema}};
  nlohmann::json files = write_rasters(root, stem, image, meta, format, scale);
  meta["versions"] = pipeline::module_versions();
  if (extra.is_object()) meta.update(extra);
  write_json(root / (stem + ".meta"), meta);
  files["meta"] = stem + ".meta";
  return files;
}

LoadedRecord read_record(const fs::path& meta_path) {
  LoadedRecord out;
  try {
    out.meta = nlohmann::json::parse(read_all(meta_path));
    const auto& r = out.meta.at("raster");
    if (!r.contains("file")) throw IoError(meta_path.string() + ": record has no raw raster");
    GridSpec g{r.at("width").get<std::size_t>(), r.at("height").get<std::size_t>(), r.at("dx").get<double>(),
               r.at("dy").get<double>(), r.value("origin_x", 0.0), r.value("origin_y", 0.0)};
    out.image = read_raw_f32(meta_path.parent_path() / r.at("file").get<std::string>(), g);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(meta_path.string() + ": " + e.what());
  }
  return out;
}

void append_json_line(const fs::path& path, const nlohmann::json& j) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw IoError("cannot open " + path.string() + " for appending");
  out << j.dump() << '\n';
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<nlohmann::json> read_json_lines(const fs::path& path) {
  std::vector<nlohmann::json> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace wakesim::io
