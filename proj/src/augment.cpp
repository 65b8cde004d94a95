#include "wakesim/augment.hpp"

#include <cmath>
#include <cstdio>

#include "wakesim/errors.hpp"
#include "wakesim/rng.hpp"
#include "wakesim/sar_imaging.hpp"
#include "wakesim/scene_config.hpp"

namespace wakesim::pipeline {

std::vector<double> AugmentOps::default_noise_amplitudes() {
  std::vector<double> a(24);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = 0.02 * static_cast<double>(i);
  return a;
}

void AugmentOps::validate() const {
  if (rotations.empty() || flips.empty() || noise_amplitudes.empty()) {
    throw ConfigError("augment: every op list needs at least one entry");
  }
  for (int r : rotations) {
    if (r % 90 != 0) throw ConfigError("augment: rotations must be multiples of 90 degrees");
  }
  for (double a : noise_amplitudes) {
    if (!(a >= 0.0 && a <= 1.0)) throw ConfigError("augment: noise amplitudes must lie in [0, 1]");
  }
  if (!(noise_shape > 0.0)) throw ConfigError("augment: noise shape must be > 0");
}

ScalarField2D rotate_quarter(const ScalarField2D& f, int quarter_turns) {
  const int q = ((quarter_turns % 4) + 4) % 4;
  const GridSpec& g = f.grid();
  if (q == 0) return f;
  if (q == 2) {
    ScalarField2D out(g);
    for (std::size_t iy = 0; iy < g.ny; ++iy)
      for (std::size_t ix = 0; ix < g.nx; ++ix) out(g.nx - 1 - ix, g.ny - 1 - iy) = f(ix, iy);
    return out;
  }
  GridSpec r{g.ny, g.nx, g.dy, g.dx, 0.0, 0.0};
  ScalarField2D out(r);
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    for (std::size_t ix = 0; ix < g.nx; ++ix) {
      if (q == 1) {
        out(g.ny - 1 - iy, ix) = f(ix, iy);  // (x, y) -> (-y, x)
      } else {
        out(iy, g.nx - 1 - ix) = f(ix, iy);  // (x, y) -> (y, -x)
      }
    }
  }
  return out;
}

ScalarField2D flip_horizontal(const ScalarField2D& f) {
  ScalarField2D out(f.grid());
  const std::size_t nx = f.nx();
  for (std::size_t iy = 0; iy < f.ny(); ++iy)
    for (std::size_t ix = 0; ix < nx; ++ix) out(nx - 1 - ix, iy) = f(ix, iy);
  return out;
}

void augment_real(const std::vector<ScalarField2D>& crops, const AugmentOps& ops, std::uint64_t seed,
                  const std::function<void(AugmentedImage&&)>& sink) {
  if (crops.empty()) throw ConfigError("augment: no input crops");
  ops.validate();
  for (std::size_t c = 0; c < crops.size(); ++c) {
    std::size_t variant = 0;
    for (int rot : ops.rotations) {
      const ScalarField2D rotated = rotate_quarter(crops[c], rot / 90);
      for (bool flip : ops.flips) {
        const ScalarField2D base = flip ? flip_horizontal(rotated) : rotated;
        for (double a : ops.noise_amplitudes) {
          AugmentedImage out;
          out.source = c;
          out.variant = variant;
          out.rotation = ((rot % 360) + 360) % 360;
          out.flip = flip;
          out.noise_amplitude = a;
          out.noise_seed =
              derive_seed(seed, "augment/" + std::to_string(c) + "/" + std::to_string(variant));
          out.image = base;
          if (a > 0.0) {
            const auto n = sar::speckle_samples(base.size(), {ops.noise_shape, out.noise_seed});
            auto v = out.image.values();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] *= 1.0 + a * (n[i] - 1.0);
          }
          char chain[64];
          std::snprintf(chain, sizeof chain, "rot%d|%s|noise%.3f", out.rotation, flip ? "flip_h" : "none", a);
          out.transform_chain = chain;
          sink(std::move(out));
          ++variant;
        }
      }
    }
  }
}

std::vector<AugmentedImage> augment_real(const std::vector<ScalarField2D>& crops, const AugmentOps& ops,
                                         std::uint64_t seed) {
  std::vector<AugmentedImage> out;
  out.reserve(crops.size() * ops.multiplicity());
  augment_real(crops, ops, seed, [&](AugmentedImage&& a) { out.push_back(std::move(a)); });
  return out;
}

nlohmann::json to_json(const AugmentOps& ops) {
  return {{"rotations", ops.rotations},
          {"flips", ops.flips},
          {"noise_amplitudes", ops.noise_amplitudes},
          {"noise_shape", ops.noise_shape}};
}

AugmentOps augment_ops_from_json(const nlohmann::json& j) {
  require_known_keys(j, {"rotations", "flips", "noise_amplitudes", "noise_shape"}, "augment");
  AugmentOps ops;
  try {
    if (j.contains("rotations")) ops.rotations = j["rotations"].get<std::vector<int>>();
    if (j.contains("flips")) ops.flips = j["flips"].get<std::vector<bool>>();
    if (j.contains("noise_amplitudes")) ops.noise_amplitudes = j["noise_amplitudes"].get<std::vector<double>>();
    if (j.contains("noise_shape")) ops.noise_shape = j["noise_shape"].get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("augment: ") + e.what());
  }
  ops.validate();
  return ops;
}

}  // namespace wakesim::pipeline
