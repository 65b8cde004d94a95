#include "wakesim/harmonic_sum.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "wakesim/errors.hpp"

namespace wakesim {

void parallel_rows(std::size_t count, unsigned threads,
                   const std::function<void(std::size_t, std::size_t)>& body) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    body(0, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<ScalarField2D> sum_harmonics(const GridSpec& grid, std::span<const Harmonic> terms,
                                         std::span<const std::vector<std::complex<double>>> coefficients,
                                         unsigned threads) {
  grid.validate();
  for (const auto& c : coefficients) {
    if (c.size() != terms.size()) throw ContractError("sum_harmonics: coefficient count mismatch");
  }
  const std::size_t n_out = coefficients.size();
  const std::size_t nx = grid.nx;
  std::vector<ScalarField2D> out(n_out, ScalarField2D(grid));
  constexpr std::size_t kBlock = 64;

  parallel_rows(grid.ny, threads, [&](std::size_t row_begin, std::size_t row_end) {
    std::vector<double> col_re(kBlock * nx), col_im(kBlock * nx);
    std::vector<double> row_re(kBlock * n_out), row_im(kBlock * n_out);
    for (std::size_t b0 = 0; b0 < terms.size(); b0 += kBlock) {
      const std::size_t nb = std::min(kBlock, terms.size() - b0);
      for (std::size_t n = 0; n < nb; ++n) {
        const double kx = terms[b0 + n].kx;
        for (std::size_t ix = 0; ix < nx; ++ix) {
          const double a = kx * grid.x(ix);
          col_re[n * nx + ix] = std::cos(a);
          col_im[n * nx + ix] = std::sin(a);
        }
      }
      for (std::size_t iy = row_begin; iy < row_end; ++iy) {
        const double y = grid.y(iy);
        for (std::size_t n = 0; n < nb; ++n) {
          const Harmonic& h = terms[b0 + n];
          const std::complex<double> rot = std::polar(1.0, h.ky * y + h.phase);
          for (std::size_t m = 0; m < n_out; ++m) {
            const std::complex<double> f = coefficients[m][b0 + n] * rot;
            row_re[n * n_out + m] = f.real();
            row_im[n * n_out + m] = f.imag();
          }
        }
        for (std::size_t m = 0; m < n_out; ++m) {
          double* acc = out[m].row(iy).data();
          for (std::size_t n = 0; n < nb; ++n) {
            const double fr = row_re[n * n_out + m];
            const double fi = row_im[n * n_out + m];
            const double* cr = &col_re[n * nx];
            const double* ci = &col_im[n * nx];
            for (std::size_t ix = 0; ix < nx; ++ix) acc[ix] += fr * cr[ix] - fi * ci[ix];
          }
        }
      }
    }
  });
  return out;
}

}  // namespace wakesim
