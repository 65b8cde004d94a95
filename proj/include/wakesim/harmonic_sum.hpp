#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wakesim/field.hpp"

namespace wakesim {

/// One plane-wave term Re[c * exp(i (kx x + ky y + phase))].
struct Harmonic {
  double kx = 0.0;
  double ky = 0.0;
  double phase = 0.0;
};

/// Evaluates, for every output m, the field
///
///   f_m(x, y) = sum_n Re[ coefficients[m][n] * exp(i (kx_n x + ky_n y + phase_n)) ]
///
/// on `grid`. Column phasors are shared across outputs, so extra outputs cost
/// one multiply-add per pixel per term. Rows are split across `threads`
/// workers; every pixel is accumulated in term order, so the result does not
/// depend on the thread count.
std::vector<ScalarField2D> sum_harmonics(const GridSpec& grid, std::span<const Harmonic> terms,
                                         std::span<const std::vector<std::complex<double>>> coefficients,
                                         unsigned threads = 1);

/// Runs body(begin, end) over [0, count) split into contiguous chunks on up to
/// `threads` std::threads.
void parallel_rows(std::size_t count, unsigned threads,
                   const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace wakesim
