#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "wakesim/constants.hpp"

namespace wakesim::detail {
namespace {

// FFTW planning is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {}
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* data;
};

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in, std::size_t nx,
                                      std::size_t ny, int sign) {
  const std::size_t n = nx * ny;
  FftwBuffer buf(n);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), buf.data, buf.data, sign,
                            FFTW_ESTIMATE);
  }
  for (std::size_t i = 0; i < n; ++i) {
    buf.data[i][0] = in[i].real();
    buf.data[i][1] = in[i].imag();
  }
  fftw_execute(plan);
  std::vector<std::complex<double>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {buf.data[i][0], buf.data[i][1]};
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> fft2_forward(const ScalarField2D& field) {
  std::vector<std::complex<double>> in(field.size());
  std::copy(field.values().begin(), field.values().end(), in.begin());
  return run(in, field.nx(), field.ny(), FFTW_FORWARD);
}

std::vector<std::complex<double>> fft2_inverse(const std::vector<std::complex<double>>& spectrum,
                                               std::size_t nx, std::size_t ny) {
  return run(spectrum, nx, ny, FFTW_BACKWARD);
}

double fft_wavenumber(std::size_t index, std::size_t n, double d) {
  const auto i = static_cast<double>(index);
  const auto nn = static_cast<double>(n);
  const double signed_index = (index <= n / 2) ? i : i - nn;
  return kTwoPi * signed_index / (nn * d);
}

}  // namespace wakesim::detail
