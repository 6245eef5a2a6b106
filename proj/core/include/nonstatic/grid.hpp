#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nonstatic {

enum class Axis { kQ, kP };

const char* to_string(Axis axis) noexcept;

/// Uniformly spaced quadrature samples on [min, max].
class QuadratureGrid {
 public:
  /// Throws DomainError unless max > min and n >= 3.
  QuadratureGrid(Axis axis, double min, double max, std::size_t n);

  Axis axis() const noexcept { return axis_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return (max_ - min_) / static_cast<double>(n_ - 1); }
  double operator[](std::size_t i) const noexcept {
    return i + 1 == n_ ? max_ : min_ + static_cast<double>(i) * spacing();
  }
  std::vector<double> points() const;

 private:
  Axis axis_;
  double min_;
  double max_;
  std::size_t n_;
};

/// Trapezoid rule over uniformly spaced samples.
double trapezoid(std::span<const double> values, double spacing);
std::complex<double> trapezoid(std::span<const std::complex<double>> values, double spacing);

/// Complex wave-function samples on a quadrature grid at time t.
struct ComplexField {
  QuadratureGrid grid;
  double t = 0.0;
  std::vector<std::complex<double>> values;
  double norm = 0.0;
  /// Set when the packet center +- 4 sigma is not inside the grid.
  bool narrow_grid = false;

  std::vector<double> density() const;

  /// First and second moments of |psi|^2, normalized by `norm`.
  double mean() const;
  double variance() const;
};

/// <a|b> over a shared grid (trapezoid). Throws DomainError on grid mismatch.
std::complex<double> overlap(const ComplexField& a, const ComplexField& b);

/// Interior zeros of |psi|^2. A strict interior minimum of |psi| counts as a
/// zero when it is V-shaped at the sampling scale: for |psi| ~ |q - q0| the
/// sample nearest q0 is at most half the mean of its neighbours, while a
/// smooth nonzero minimum stays close to that mean.
std::size_t count_density_zeros(const ComplexField& field);

}  // namespace nonstatic
