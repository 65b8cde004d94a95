#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wakesim/field.hpp"

namespace wakesim::pipeline {

/// Op grid applied to every crop: each rotation, then each flip, then each
/// noise amplitude. Multiplicative noise I * (1 + a (n - 1)) uses unit-mean
/// Weibull n, so a = 0 leaves the image unchanged.
struct AugmentOps {
  std::vector<int> rotations{0, 90, 180, 270};  // degrees counter-clockwise, multiples of 90
  std::vector<bool> flips{false, true};         // horizontal (azimuth) mirror
  std::vector<double> noise_amplitudes = default_noise_amplitudes();
  double noise_shape = 1.8;

  std::size_t multiplicity() const { return rotations.size() * flips.size() * noise_amplitudes.size(); }
  void validate() const;

  /// 0, 0.02, ..., 0.46: with four rotations and two flips, 192 variants per crop.
  static std::vector<double> default_noise_amplitudes();
  static AugmentOps identity() { return {{0}, {false}, {0.0}, 1.8}; }
};

struct AugmentedImage {
  ScalarField2D image;
  std::size_t source = 0;
  std::size_t variant = 0;
  int rotation = 0;
  bool flip = false;
  double noise_amplitude = 0.0;
  std::uint64_t noise_seed = 0;
  /// e.g. "rot90|flip_h|noise0.100"
  std::string transform_chain;
};

/// Rotates by quarter_turns * 90 degrees counter-clockwise (x right, y up in index space).
ScalarField2D rotate_quarter(const ScalarField2D& f, int quarter_turns);
ScalarField2D flip_horizontal(const ScalarField2D& f);

/// Streams |crops| * multiplicity outputs to `sink` in (crop, rotation, flip,
/// noise) order. Noise for output v of crop c uses the stream derived from
/// (seed, "augment/c/v").
void augment_real(const std::vector<ScalarField2D>& crops, const AugmentOps& ops, std::uint64_t seed,
                  const std::function<void(AugmentedImage&&)>& sink);

std::vector<AugmentedImage> augment_real(const std::vector<ScalarField2D>& crops, const AugmentOps& ops,
                                         std::uint64_t seed);

nlohmann::json to_json(const AugmentOps& ops);
AugmentOps augment_ops_from_json(const nlohmann::json& j);

}  // namespace wakesim::pipeline
