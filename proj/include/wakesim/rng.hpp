#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace wakesim {

/// Seedable, splittable random source.
///
/// Every consumer draws from its own stream, derived from a master seed and a
/// textual tag with SplitMix64 mixing, so a scene (or one module inside it) can
/// be regenerated in isolation. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; uniform variates are built from the raw
/// 64-bit output rather than std::uniform_real_distribution so results do not
/// depend on the standard library implementation.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream for (master, tag). Distinct tags give statistically independent streams.
  static RandomStream derive(std::uint64_t master, std::string_view tag);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1).
  double uniform_open();

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);
/// FNV-1a over the bytes of `text`.
std::uint64_t hash_tag(std::string_view text);
/// Child seed for (master, tag).
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag);

}  // namespace wakesim
