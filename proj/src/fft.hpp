#pragma once

#include <complex>
#include <vector>

#include "wakesim/field.hpp"

namespace wakesim::detail {

/// Forward 2D DFT of a real field, unnormalized: F[k] = sum_x f[x] exp(-i k.x).
/// Output is row-major ny x nx, matching the field layout.
std::vector<std::complex<double>> fft2_forward(const ScalarField2D& field);

/// Inverse 2D DFT, unnormalized: f[x] = sum_k F[k] exp(+i k.x).
std::vector<std::complex<double>> fft2_inverse(const std::vector<std::complex<double>>& spectrum,
                                               std::size_t nx, std::size_t ny);

/// Angular wavenumber (rad/m) of DFT bin `index` on an axis with n samples at spacing d.
/// Bins above n/2 map to negative wavenumbers.
double fft_wavenumber(std::size_t index, std::size_t n, double d);

/// True when bin index is the unpaired Nyquist bin of an even-length axis.
inline bool is_nyquist_bin(std::size_t index, std::size_t n) { return n % 2 == 0 && index == n / 2; }

}  // namespace wakesim::detail
