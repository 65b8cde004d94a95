#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "wakesim/field.hpp"
#include "wakesim/scene.hpp"

namespace wakesim::io {

inline constexpr const char* kRecordSchema = "wakesim.record/1";
inline constexpr const char* kImageSchema = "wakesim.image/1";

enum class OutputFormat { Raw, Quicklook, Both };

OutputFormat parse_output_format(const std::string& text);
std::string to_string(OutputFormat f);

/// Fixed dB clip range of the 8-bit quicklook.
struct QuicklookScale {
  double db_min = -30.0;
  double db_max = 0.0;
};

/// Raw float32, little-endian, row-major (rows are ground range).
void write_raw_f32(const std::filesystem::path& path, const ScalarField2D& field);
/// Reads nx*ny float32 values; throws IoError on a size mismatch.
ScalarField2D read_raw_f32(const std::filesystem::path& path, const GridSpec& grid);

/// 8-bit binary PGM of 10 log10(I) linearly mapped from [db_min, db_max] to [0, 255].
void write_quicklook(const std::filesystem::path& path, const ScalarField2D& field,
                     const QuicklookScale& scale = {});
/// Reads a binary (P5) 8-bit PGM as values 0..255 on a unit-spaced grid.
ScalarField2D read_pgm(const std::filesystem::path& path);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Sidecar describing a stored raster.
nlohmann::json raster_header(const ScalarField2D& field);

/// Writes `<stem>.f32` and/or `<stem>.pgm` plus `<stem>.meta`. Returns the
/// file names relative to `root` keyed by "raw", "quicklook", "meta".
nlohmann::json write_record(const std::filesystem::path& root, const std::string& relative_stem,
                            const pipeline::SceneRecord& record, const nlohmann::json& extra,
                            OutputFormat format, const QuicklookScale& scale = {});

/// Same layout as write_record for an image without a scene behind it
/// (augmented crops); `extra` carries its provenance.
nlohmann::json write_image(const std::filesystem::path& root, const std::string& relative_stem,
                           const ScalarField2D& image, const nlohmann::json& extra, OutputFormat format,
                           const QuicklookScale& scale = {});

struct LoadedRecord {
  ScalarField2D image;
  nlohmann::json meta;
};

/// Reads `<stem>.meta` and the raster next to it.
LoadedRecord read_record(const std::filesystem::path& meta_path);

/// Appends one JSON object as a line and flushes.
void append_json_line(const std::filesystem::path& path, const nlohmann::json& j);
/// Reads JSON Lines; a truncated final line (interrupted write) is skipped.
std::vector<nlohmann::json> read_json_lines(const std::filesystem::path& path);

}  // namespace wakesim::io
