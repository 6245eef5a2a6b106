#include "nonstatic/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nonstatic/errors.hpp"

namespace nonstatic {

const char* to_string(Axis axis) noexcept { return axis == Axis::kQ ? "q" : "p"; }

QuadratureGrid::QuadratureGrid(Axis axis, double min, double max, std::size_t n)
    : axis_(axis), min_(min), max_(max), n_(n) {
  if (!(std::isfinite(min) && std::isfinite(max) && max > min) || n < 3) {
    std::ostringstream os;
    os << "quadrature grid needs max > min and n >= 3 (got [" << min << ", " << max
       << "], n = " << n << ")";
    throw DomainError(os.str());
  }
}

std::vector<double> QuadratureGrid::points() const {
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = (*this)[i];
  return x;
}

double trapezoid(std::span<const double> values, double spacing) {
  if (values.size() < 2) return 0.0;
  double sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * spacing;
}

std::complex<double> trapezoid(std::span<const std::complex<double>> values, double spacing) {
  if (values.size() < 2) return {};
  std::complex<double> sum = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
  return sum * spacing;
}

std::vector<double> ComplexField::density() const {
  std::vector<double> d(values.size());
  std::transform(values.begin(), values.end(), d.begin(),
                 [](std::complex<double> v) { return std::norm(v); });
  return d;
}

double ComplexField::mean() const {
  const auto d = density();
  std::vector<double> xd(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) xd[i] = grid[i] * d[i];
  return trapezoid(xd, grid.spacing()) / norm;
}

double ComplexField::variance() const {
  const auto d = density();
  const double m = mean();
  std::vector<double> v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double dx = grid[i] - m;
    v[i] = dx * dx * d[i];
  }
  return trapezoid(v, grid.spacing()) / norm;
}

std::complex<double> overlap(const ComplexField& a, const ComplexField& b) {
  if (a.grid.size() != b.grid.size() || a.grid.min() != b.grid.min() ||
      a.grid.max() != b.grid.max()) {
    throw DomainError("overlap: fields live on different grids");
  }
  std::vector<std::complex<double>> prod(a.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = std::conj(a.values[i]) * b.values[i];
  return trapezoid(prod, a.grid.spacing());
}

std::size_t count_density_zeros(const ComplexField& field) {
  const auto d = field.density();
  std::size_t zeros = 0;
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    if (!(d[i] < d[i - 1] && d[i] < d[i + 1])) continue;
    const double side = 0.5 * (std::sqrt(d[i - 1]) + std::sqrt(d[i + 1]));
    if (std::sqrt(d[i]) <= 0.6 * side) ++zeros;
  }
  return zeros;
}

}  // namespace nonstatic
