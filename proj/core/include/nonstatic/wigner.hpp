#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nonstatic/dynamics.hpp"
#include "nonstatic/params.hpp"

namespace nonstatic {

/// Real samples W(q, p) on a rectangular phase-space grid at time t,
/// stored row-major with q as the slow index.
struct PhaseSpaceGrid {
  double q_min = -6.0, q_max = 6.0;
  double p_min = -6.0, p_max = 6.0;
  std::size_t nq = 301, np = 301;
  double t = 0.0;
  std::vector<double> values;
  /// Largest |Im| of the closed-form exponent seen while filling (closed form only).
  double max_imag_residue = 0.0;
  /// Largest self-estimated quadrature error (numeric route only).
  double max_error_estimate = 0.0;

  /// Throws DomainError unless both ranges are nonempty and nq, np >= 2.
  void check_shape() const;
  double q(std::size_t i) const noexcept;
  double p(std::size_t j) const noexcept;
  double dq() const noexcept { return (q_max - q_min) / static_cast<double>(nq - 1); }
  double dp() const noexcept { return (p_max - p_min) / static_cast<double>(np - 1); }
  double& at(std::size_t i, std::size_t j) { return values[i * np + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * np + j]; }

  /// 2D trapezoid of the stored values.
  double integral() const;
  /// Integrals over p (length nq) and over q (length np).
  std::vector<double> marginal_q() const;
  std::vector<double> marginal_p() const;
};

/// Grid of the given shape centred on the packet at t with `widths` standard
/// deviations to spare on each axis.
PhaseSpaceGrid auto_phase_space_grid(const ModelParams& params, const CoherentAmplitude& amp,
                                     double t, std::size_t nq = 301, std::size_t np = 301,
                                     double widths = 6.0);

/// Closed-form Wigner function. Shape and t are taken from `grid`; the
/// amplitude must already be evaluated at grid.t.
PhaseSpaceGrid wigner_closed(const ModelParams& params, const CoherentAmplitude& amp,
                             PhaseSpaceGrid grid, unsigned threads = 1);

struct WignerQuadrature {
  /// y window half-width in units of the position width.
  double window_sigmas = 10.0;
  double tolerance = 1e-7;
  std::size_t initial_points = 64;
  std::size_t max_points = 1u << 16;
};

/// Wigner function from its defining integral over y, sampled from the
/// q-space wave function and refined by step halving until the estimated
/// error is below `quad.tolerance`. Throws AccuracyError otherwise.
PhaseSpaceGrid wigner_numeric(const ModelParams& params, const CoherentAmplitude& amp,
                              PhaseSpaceGrid grid, const WignerQuadrature& quad = {},
                              unsigned threads = 1);

/// Covariance of (q, p) in the state at t.
struct Covariance {
  double qq = 0.0;
  double qp = 0.0;  // (<qp + pq>/2 - <q><p>)
  double pp = 0.0;
  double det() const noexcept { return qq * pp - qp * qp; }
};

Covariance wigner_covariance(const ModelParams& params, double t);

/// Covariance computed from numeric moments of a sampled grid.
Covariance grid_covariance(const PhaseSpaceGrid& grid);

/// Contour summary in normalized coordinates Q = q sqrt(epsilon omega),
/// P = p / sqrt(epsilon omega).
struct EllipseSummary {
  double t = 0.0;
  double center_q = 0.0;
  double center_p = 0.0;
  std::optional<double> angle;  // major-axis orientation in (-pi/2, pi/2]; empty if circular
  double radius_major = 0.0;
  double radius_minor = 0.0;
};

std::vector<EllipseSummary> ellipse_track(const ModelParams& params, double A0, double theta,
                                          std::span<const double> times);

/// Times for the contour centre and for the bar itself to complete one full
/// clockwise turn, measured by tracking the unwrapped angles from t0 on a
/// dense grid and refining the crossing by bisection.
/// `*_sense` is -1 for clockwise (p up, q right) and +1 otherwise.
/// Throws DomainError when A0 = 0 (no centre motion) or for static
/// parameters (circular contour, no bar).
struct RotationPeriods {
  double center = 0.0;
  double bar = 0.0;
  int center_sense = 0;
  int bar_sense = 0;
};

RotationPeriods rotation_periods(const ModelParams& params, double A0, double theta,
                                 std::size_t samples_per_period = 2048);

}  // namespace nonstatic
