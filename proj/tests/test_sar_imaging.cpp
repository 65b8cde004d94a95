#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "wakesim/constants.hpp"
#include "wakesim/errors.hpp"
#include "wakesim/rng.hpp"
#include "wakesim/sar_imaging.hpp"

using namespace wakesim;
using namespace wakesim::sar;

namespace {

scattering::RadarConfig radar(double inc = 29.31) {
  scattering::RadarConfig r;
  r.incidence_deg = inc;
  return r;
}

ScalarField2D random_field(const GridSpec& g, std::uint64_t seed, double lo, double hi) {
  ScalarField2D f(g);
  auto rng = RandomStream::derive(seed, "field");
  for (double& v : f.values()) v = lo + (hi - lo) * rng.uniform();
  return f;
}

}  // namespace

TEST_CASE("orbital velocity of simple surfaces") {
  const GridSpec g{32, 32, 2.0, 2.0};
  CHECK(orbital_radial_velocity(std::vector<spectrum::WaveComponent>{}, g, 0.5, 0.0).radial.max() == 0.0);
  CHECK(orbital_radial_velocity(ScalarField2D(g), 0.5, 0.0).radial.max() == 0.0);

  // a = 1 m, omega = 1 rad/s, seen from nadir: U_r is the vertical speed, peak 1 m/s.
  const double k = 2 * kPi * 4 / 64.0;
  std::vector<spectrum::WaveComponent> one{{1.0, k, 0.0, 1.0, 0.0}};
  const auto u = orbital_radial_velocity(one, g, 0.0, 0.0).radial;
  CHECK(std::max(std::abs(u.min()), std::abs(u.max())) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("radial velocity is linear in wave amplitude") {
  const GridSpec g{32, 32, 4.0, 4.0};
  std::vector<spectrum::WaveComponent> c{{0.5, 0.1, 0.05, std::sqrt(9.81 * std::hypot(0.1, 0.05)), 1.0},
                                         {0.2, -0.03, 0.2, std::sqrt(9.81 * std::hypot(0.03, 0.2)), 2.0}};
  auto rms = [&](double scale) {
    auto cc = c;
    for (auto& x : cc) x.amplitude *= scale;
    const auto u = orbital_radial_velocity(cc, g, 0.5, 0.0).radial;
    double s = 0;
    for (double v : u.values()) s += v * v;
    return std::sqrt(s / u.size());
  };
  CHECK(rms(3.0) == doctest::Approx(3.0 * rms(1.0)).epsilon(1e-12));
}

TEST_CASE("spectral and harmonic velocity routes agree") {
  const GridSpec g{64, 48, 4.0, 4.0};
  const double dir = deg_to_rad(20.0);
  std::vector<spectrum::WaveComponent> comps;
  ScalarField2D z(g);
  for (auto [mx, my, a, ph] : {std::tuple{3, 1, 0.4, 0.2}, {5, -2, 0.2, 1.7}, {1, 4, 0.3, -0.6}}) {
    const double kx = 2 * kPi * mx / (g.nx * g.dx), ky = 2 * kPi * my / (g.ny * g.dy);
    comps.push_back({a, kx, ky, std::sqrt(9.81 * std::hypot(kx, ky)), ph});
    for (std::size_t iy = 0; iy < g.ny; ++iy)
      for (std::size_t ix = 0; ix < g.nx; ++ix) z(ix, iy) += a * std::cos(kx * g.x(ix) + ky * g.y(iy) + ph);
  }
  const auto a = orbital_radial_velocity(comps, g, 0.5, 0.0).radial;
  const auto b = orbital_radial_velocity(z, 0.5, dir).radial;
  CHECK(oracle::max_rel_diff(b, a) < 1e-9);
}

TEST_CASE("degraded azimuth resolution") {
  auto r = radar();
  CHECK(degraded_azimuth_resolution(r) == doctest::Approx(r.azimuth_resolution_m));
  auto r4 = r;
  r4.looks = 4;
  CHECK(degraded_azimuth_resolution(r4) >= degraded_azimuth_resolution(r));
  CHECK(degraded_azimuth_resolution(r4) == doctest::Approx(4 * r.azimuth_resolution_m));
  const CoherenceInputs scene{0.1, 0.3, 1.0};
  const double base = degraded_azimuth_resolution(r, scene);
  CHECK(base >= r.azimuth_resolution_m);
  auto slow = r;
  slow.platform_velocity_mps *= 0.5;
  CHECK(degraded_azimuth_resolution(slow, scene) >= base);
  const double lr = r.wavelength() * r.range_to_velocity() / (2 * 0.1);
  const double sp = r.range_to_velocity() * 0.3;
  CHECK(base == doctest::Approx(std::sqrt(36.0 + lr * lr + sp * sp)));
}

TEST_CASE("flat scene identity") {
  const GridSpec g{64, 64, 4.0, 4.0};
  ScalarField2D sigma(g, 1.0), ur(g);
  for (unsigned looks : {1u, 3u}) {
    for (double vel : {7600.0, 3800.0}) {
      auto r = radar();
      r.looks = looks;
      r.platform_velocity_mps = vel;
      for (double tau : {0.0, 0.1}) {
        SarIntegrationOptions o;
        o.coherence.coherence_time_s = tau;
        const auto img = sar_integrate(sigma, {ur}, r, o);
        for (double v : img.intensity.values()) CHECK(std::abs(v - 1.0) < 1e-6);
      }
    }
  }
}

TEST_CASE("a point target lands at x + (R/V) U_r") {
  const GridSpec g{128, 4, 2.0, 2.0};
  ScalarField2D sigma(g), ur(g, 0.25);
  sigma(40, 2) = 1.0;
  const auto r = radar();
  SarIntegrationOptions drop;
  drop.edge = EdgePolicy::Drop;
  const auto img = sar_integrate(sigma, {ur}, r, drop);
  double m0 = 0, m1 = 0, m2 = 0;
  for (std::size_t ix = 0; ix < g.nx; ++ix) {
    const double v = img.intensity(ix, 2);
    m0 += v;
    m1 += v * g.x(ix);
  }
  const double centre = m1 / m0;
  for (std::size_t ix = 0; ix < g.nx; ++ix) m2 += img.intensity(ix, 2) * (g.x(ix) - centre) * (g.x(ix) - centre);
  CHECK(m0 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(centre - g.x(40) - r.range_to_velocity() * 0.25) < 1e-3 * g.dx);
  const double s = kernel_sigma(img.azimuth_resolution_m);
  CHECK(std::sqrt(m2 / m0) == doctest::Approx(std::sqrt(s * s + g.dx * g.dx / 12.0)).epsilon(0.02));
  for (std::size_t iy : {0u, 1u, 3u})
    for (std::size_t ix = 0; ix < g.nx; ++ix) CHECK(img.intensity(ix, iy) == 0.0);
}

TEST_CASE("energy is conserved and matches the double-sum oracle") {
  const GridSpec g{64, 64, 4.0, 4.0};
  const auto sigma = random_field(g, 1, 0.0, 0.05);
  const auto ur = random_field(g, 2, -0.6, 0.6);
  const auto r = radar();
  for (EdgePolicy edge : {EdgePolicy::Wrap, EdgePolicy::Drop}) {
    SarIntegrationOptions o;
    o.edge = edge;
    o.coherence.coherence_time_s = 0.1;
    const auto img = sar_integrate(sigma, {ur}, r, o);
    const auto ref = oracle::sar_double_sum(sigma, ur, r.range_to_velocity(), img.azimuth_resolution_m,
                                            edge == EdgePolicy::Wrap);
    CHECK(oracle::max_rel_diff(img.intensity, ref.image) < 1e-9);
    const double total = sigma.sum();
    if (edge == EdgePolicy::Wrap) {
      CHECK(std::abs(img.intensity.sum() - total) <= 1e-3 * total);
      CHECK(img.dropped_energy == 0.0);
    } else {
      CHECK(img.dropped_energy > 0.0);
      CHECK(img.dropped_energy == doctest::Approx(ref.dropped).epsilon(1e-9));
      CHECK(std::abs(img.intensity.sum() + img.dropped_energy - total) <= 1e-3 * total);
    }
    CHECK(img.edge_crossings > 0);
  }
}

TEST_CASE("velocity bunching only moves energy in azimuth") {
  const GridSpec g{64, 32, 4.0, 4.0};
  const auto sigma = random_field(g, 3, 0.0, 1.0);
  const auto ur = random_field(g, 4, -0.3, 0.3);
  const auto img = sar_integrate(sigma, {ur}, radar());
  for (std::size_t iy = 0; iy < g.ny; ++iy) {
    double a = 0, b = 0;
    for (std::size_t ix = 0; ix < g.nx; ++ix) a += sigma(ix, iy), b += img.intensity(ix, iy);
    CHECK(std::abs(a - b) < 1e-6);
  }
}

TEST_CASE("co-registration is required") {
  CHECK_THROWS_AS(sar_integrate(ScalarField2D(GridSpec{8, 8, 1, 1}), {ScalarField2D(GridSpec{8, 4, 1, 1})}, radar()),
                  ContractError);
}

TEST_CASE("Weibull speckle statistics") {
  const SpeckleParams p{1.8, 11};
  const auto big = speckle_samples(1000000, p);
  double mean = 0.0;
  for (double v : big) mean += v;
  mean /= big.size();
  CHECK(std::abs(mean - 1.0) <= 0.003);

  const auto small = speckle_samples(100000, {1.8, 12});
  const double scale = weibull_unit_mean_scale(1.8);
  const double d = oracle::ks_statistic(small, [&](double x) { return weibull_cdf(x, 1.8, scale); });
  CHECK(oracle::ks_p_value(d, small.size()) > 0.01);
  // A wrong shape must be rejected by the same test.
  const double wrong = oracle::ks_statistic(small, [&](double x) {
    return weibull_cdf(x, 2.2, weibull_unit_mean_scale(2.2));
  });
  CHECK(oracle::ks_p_value(wrong, small.size()) < 0.01);
}

TEST_CASE("unit-mean scale") {
  for (double k : {0.8, 1.0, 1.8, 3.0, 200.0}) {
    // Mean of the Weibull by quadrature of the survival function.
    const double lambda = weibull_unit_mean_scale(k);
    double acc = 0.0;
    const double h = 1e-4;
    for (double x = 0.5 * h; x < 60.0; x += h) acc += (1.0 - weibull_cdf(x, k, lambda)) * h;
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-5));
  }
  CHECK(weibull_unit_mean_scale(1.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(weibull_unit_mean_scale(0.0), DomainError);
}

TEST_CASE("speckle application") {
  const GridSpec g{64, 64, 4.0, 4.0};
  const auto img = random_field(g, 5, 0.01, 0.02);
  const auto a = apply_speckle(img, {1.8, 1}), b = apply_speckle(img, {1.8, 1}), c = apply_speckle(img, {1.8, 2});
  CHECK(a == b);
  CHECK(!(a == c));
  const auto near = apply_speckle(img, {200.0, 3});
  double sq = 0.0;
  for (std::size_t i = 0; i < img.size(); ++i) {
    const double rel = near.values()[i] / img.values()[i] - 1.0;
    sq += rel * rel;
  }
  CHECK(std::sqrt(sq / img.size()) < 0.02);
  CHECK(std::abs(near.mean() / img.mean() - 1.0) < 0.02);
}
