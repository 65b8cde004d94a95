// wakesim command-line front end: simulate, sweep, augment, em-table.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "wakesim/augment.hpp"
#include "wakesim/dataset_io.hpp"
#include "wakesim/em_params.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/scene.hpp"
#include "wakesim/sweep.hpp"

namespace fs = std::filesystem;
using namespace wakesim;

namespace {

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::string format = "raw";
  bool resume = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--seed", f.seed, "Master seed (overrides the config)");
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "Image output")->check(CLI::IsMember({"raw", "quicklook", "both"}));
  cmd->add_flag("--resume", f.resume, "Skip records already complete in the manifest");
}

int simulate(const CommonFlags& f) {
  pipeline::SceneConfig cfg = f.config.empty() ? pipeline::SceneConfig{} : pipeline::load_scene_config(f.config);
  if (f.seed) cfg.seed = *f.seed;
  cfg.threads = f.workers;
  const std::string stem = f.config.empty() ? "scene" : fs::path(f.config).stem().string();
  const fs::path out = f.out.empty() ? fs::path(".") : fs::path(f.out);
  const fs::path meta = out / (stem + ".meta");
  if (f.resume && fs::exists(meta)) {
    std::cout << "skipped " << meta.string() << " (exists)\n";
    return 0;
  }
  const auto record = pipeline::simulate_scene(cfg);
  io::write_record(out, stem, record, {{"record_id", stem}}, io::parse_output_format(f.format));
  for (const auto& w : record.meta.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "wrote " << meta.string() << "\n";
  return 0;
}

int sweep(const CommonFlags& f, std::size_t limit, bool quiet) {
  if (f.out.empty()) throw ConfigError("sweep: --out is required");
  const auto cfg = f.config.empty() ? pipeline::nvsim_sweep_config() : pipeline::load_sweep_config(f.config);
  pipeline::SweepOptions opt;
  opt.out_dir = f.out;
  opt.format = io::parse_output_format(f.format);
  opt.workers = f.workers;
  opt.resume = f.resume;
  opt.seed = f.seed.value_or(cfg.base.seed);
  opt.limit = limit;
  if (!quiet) {
    opt.progress = [](std::size_t done, std::size_t total) {
      if (done % 100 == 0 || done == total) std::cerr << "\r" << done << "/" << total << std::flush;
    };
  }
  const auto s = pipeline::run_sweep(cfg, opt);
  if (!quiet) std::cerr << "\n";
  std::cout << "records " << s.total << " written " << s.written << " skipped " << s.skipped << " failed "
            << s.failed << "\n";
  return s.failed == 0 ? 0 : 2;
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::recursive_directory_iterator(in)) {
        const auto ext = e.path().extension();
        if (e.is_regular_file() && (ext == ".meta" || ext == ".pgm")) found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.emplace_back(in);
    }
  }
  return out;
}

int augment(const CommonFlags& f, const std::vector<std::string>& inputs, const std::string& label) {
  if (f.out.empty()) throw ConfigError("augment: --out is required");
  const auto ops = f.config.empty() ? pipeline::AugmentOps{}
                                    : pipeline::augment_ops_from_json(pipeline::read_json_file(f.config));
  const auto files = expand_inputs(inputs);
  std::vector<ScalarField2D> crops;
  std::vector<std::string> labels, mmsi;
  for (const auto& p : files) {
    if (p.extension() == ".pgm") {
      crops.push_back(io::read_pgm(p));
      labels.push_back(label.empty() ? "unlabeled" : label);
      mmsi.emplace_back();
    } else {
      auto r = io::read_record(p);
      crops.push_back(std::move(r.image));
      labels.push_back(!label.empty() ? label : r.meta.value("label", std::string("unlabeled")));
      mmsi.push_back(r.meta.value("mmsi", std::string()));
    }
  }
  const fs::path out = f.out;
  const fs::path manifest = out / "manifest";
  if (fs::exists(manifest) && !f.resume) {
    throw ConfigError(manifest.string() + " already exists; pass --resume to continue that run");
  }
  std::set<std::string> done;
  for (const auto& e : pipeline::latest_manifest_entries(manifest)) {
    if (e.value("status", "") == "complete") done.insert(e["record_id"].get<std::string>());
  }
  const auto format = io::parse_output_format(f.format);
  const std::uint64_t seed = f.seed.value_or(1);
  std::size_t written = 0;
  pipeline::augment_real(crops, ops, seed, [&](pipeline::AugmentedImage&& a) {
    const std::string source = files[a.source].stem().string();
    char id[32];
    std::snprintf(id, sizeof id, "%03zu", a.variant);
    const std::string record_id = source + "-a" + id;
    if (done.count(record_id)) return;
    const std::string stem = labels[a.source] + "/" + source + "/" + record_id;
    nlohmann::json extra = {{"record_id", record_id},
                            {"label", labels[a.source]},
                            {"source", files[a.source].string()},
                            {"transform_chain", a.transform_chain},
                            {"rotation", a.rotation},
                            {"flip", a.flip},
                            {"noise_amplitude", a.noise_amplitude},
                            {"noise_seed", a.noise_seed}};
    if (!mmsi[a.source].empty()) extra["mmsi"] = mmsi[a.source];
    nlohmann::json line = extra;
    line["status"] = "complete";
    line["files"] = io::write_image(out, stem, a.image, extra, format);
    io::append_json_line(manifest, line);
    ++written;
  });
  io::write_json(out / "augment.json",
                 {{"seed", seed}, {"ops", pipeline::to_json(ops)}, {"sources", files.size()},
                  {"multiplicity", ops.multiplicity()}, {"total_records", files.size() * ops.multiplicity()}});
  std::cout << "sources " << files.size() << " multiplicity " << ops.multiplicity() << " written " << written
            << "\n";
  return 0;
}

int em_table(const CommonFlags& f, std::vector<double> freqs_ghz, std::vector<double> salinities,
             std::vector<double> temps) {
  if (!f.config.empty()) {
    const auto j = pipeline::read_json_file(f.config);
    pipeline::require_known_keys(j, {"frequency_ghz", "salinity", "temperature"}, "em-table");
    freqs_ghz = j.value("frequency_ghz", freqs_ghz);
    salinities = j.value("salinity", salinities);
    temps = j.value("temperature", temps);
  }
  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) throw IoError("cannot open " + f.out);
  }
  std::ostream& os = f.out.empty() ? std::cout : file;
  os << "frequency_ghz,salinity_ppt,temperature_c,eps_real,eps_imag\n";
  char buf[160];
  for (double fg : freqs_ghz)
    for (double s : salinities)
      for (double t : temps) {
        const auto e = em::dielectric(fg * 1e9, s, t);
        std::snprintf(buf, sizeof buf, "%g,%g,%g,%.6f,%.6f\n", fg, s, t, e.real, e.imag);
        os << buf;
      }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-band SAR sea surface and Kelvin wake simulator"};
  app.require_subcommand(1);

  CommonFlags sim_flags, sweep_flags, aug_flags, em_flags;
  auto* sim = app.add_subcommand("simulate", "Simulate one scene from a config file");
  add_common(sim, sim_flags);

  auto* sw = app.add_subcommand("sweep", "Generate a parameter-sweep dataset");
  add_common(sw, sweep_flags);
  std::size_t limit = 0;
  bool quiet = false;
  sw->add_option("--limit", limit, "Stop after this many new records");
  sw->add_flag("--quiet", quiet, "No progress output");

  auto* aug = app.add_subcommand("augment", "Rotate, flip and re-noise image crops");
  add_common(aug, aug_flags);
  std::vector<std::string> inputs;
  std::string label;
  aug->add_option("inputs", inputs, "Crop files (.meta with raw raster, or 8-bit .pgm) or directories")
      ->required();
  aug->add_option("--label", label, "Class label for all inputs")->check(CLI::IsMember({"cargo", "tanker"}));

  auto* em_cmd = app.add_subcommand("em-table", "Print the seawater dielectric constant over a grid");
  add_common(em_cmd, em_flags);
  std::vector<double> freqs{1.4, 3.2, 5.3, 9.6}, sal{0.0, 35.0}, temps{0.0, 10.0, 21.0, 30.0};
  em_cmd->add_option("--frequency-ghz", freqs, "Frequencies in GHz");
  em_cmd->add_option("--salinity", sal, "Salinities in ppt");
  em_cmd->add_option("--temperature", temps, "Temperatures in C");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*sim) return simulate(sim_flags);
    if (*sw) return sweep(sweep_flags, limit, quiet);
    if (*aug) return augment(aug_flags, inputs, label);
    if (*em_cmd) return em_table(em_flags, freqs, sal, temps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
