#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wakesim {

/// Uniform sampling lattice. x runs along columns (azimuth), y along rows
/// (ground range). Sample (ix, iy) sits at (origin_x + ix*dx, origin_y + iy*dy).
struct GridSpec {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double dx = 1.0;
  double dy = 1.0;
  double origin_x = 0.0;
  double origin_y = 0.0;

  std::size_t size() const { return nx * ny; }
  double x(std::size_t ix) const { return origin_x + static_cast<double>(ix) * dx; }
  double y(std::size_t iy) const { return origin_y + static_cast<double>(iy) * dy; }
  double extent_x() const { return static_cast<double>(nx) * dx; }
  double extent_y() const { return static_cast<double>(ny) * dy; }
  double center_x() const { return origin_x + 0.5 * static_cast<double>(nx - 1) * dx; }
  double center_y() const { return origin_y + 0.5 * static_cast<double>(ny - 1) * dy; }

  /// Throws ContractError unless nx, ny >= 1 and dx, dy > 0 (finite).
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

/// Real-valued raster (elevation, NRCS, intensity, velocity) on a GridSpec.
/// Row-major: value(ix, iy) = values[iy * nx + ix].
class ScalarField2D {
 public:
  ScalarField2D() = default;
  explicit ScalarField2D(const GridSpec& grid, double fill = 0.0);
  ScalarField2D(const GridSpec& grid, std::vector<double> values);

  const GridSpec& grid() const { return grid_; }
  std::size_t nx() const { return grid_.nx; }
  std::size_t ny() const { return grid_.ny; }
  std::size_t size() const { return values_.size(); }

  double& operator()(std::size_t ix, std::size_t iy) { return values_[iy * grid_.nx + ix]; }
  double operator()(std::size_t ix, std::size_t iy) const { return values_[iy * grid_.nx + ix]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::span<double> row(std::size_t iy) { return {values_.data() + iy * grid_.nx, grid_.nx}; }
  std::span<const double> row(std::size_t iy) const {
    return {values_.data() + iy * grid_.nx, grid_.nx};
  }

  double sum() const;
  double mean() const;
  double variance() const;
  double min() const;
  double max() const;
  bool all_finite() const;

  ScalarField2D& operator+=(const ScalarField2D& other);
  ScalarField2D& operator*=(double s);

  bool operator==(const ScalarField2D&) const = default;

 private:
  GridSpec grid_;
  std::vector<double> values_;
};

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b);

/// Throws ContractError when the two fields are not on identical grids.
void require_same_grid(const ScalarField2D& a, const ScalarField2D& b, const char* what);

}  // namespace wakesim
