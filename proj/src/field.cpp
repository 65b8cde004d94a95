#include "wakesim/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wakesim/errors.hpp"

namespace wakesim {

void GridSpec::validate() const {
  if (nx == 0 || ny == 0) throw ContractError("grid must have at least one sample per axis");
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
    throw ContractError("grid spacing must be positive and finite");
  }
}

ScalarField2D::ScalarField2D(const GridSpec& grid, double fill)
    : grid_(grid), values_(grid.size(), fill) {
  grid_.validate();
}

ScalarField2D::ScalarField2D(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  grid_.validate();
  if (values_.size() != grid_.size()) {
    throw ContractError("field has " + std::to_string(values_.size()) + " values, grid needs " +
                        std::to_string(grid_.size()));
  }
}

double ScalarField2D::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

double ScalarField2D::mean() const {
  return values_.empty() ? 0.0 : sum() / static_cast<double>(values_.size());
}

double ScalarField2D::variance() const {
  if (values_.empty()) return 0.0;
  const double m = mean();
  double acc = 0.0;
  for (double v : values_) acc += (v - m) * (v - m);
  return acc / static_cast<double>(values_.size());
}

double ScalarField2D::min() const { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField2D::max() const { return *std::max_element(values_.begin(), values_.end()); }

bool ScalarField2D::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField2D& ScalarField2D::operator+=(const ScalarField2D& other) {
  require_same_grid(*this, other, "field addition");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ScalarField2D& ScalarField2D::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b) {
  a += b;
  return a;
}

void require_same_grid(const ScalarField2D& a, const ScalarField2D& b, const char* what) {
  if (!(a.grid() == b.grid())) {
    throw ContractError(std::string(what) + ": fields are not on identical grids");
  }
}

}  // namespace wakesim
