#pragma once

#include <numbers>

namespace nonstatic {

enum class C3Sign { kPositive, kNegative };

/// Physical constants and nonstaticity constants of one scenario.
///
/// The auxiliary function is fixed by (c1, c2, c3) with c1*c2 - c3^2 = 1, so
/// only the sign of c3 is stored; its magnitude follows from c1 and c2.
/// Defaults are natural units with the static choice c1 = c2 = 1.
struct ModelParams {
  double epsilon = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  C3Sign c3_sign = C3Sign::kPositive;
  double phi = 0.0;  // [-pi/2, pi/2)
  double t0 = 0.0;

  /// c3 = sign * sqrt(c1 c2 - 1). Clamped at zero when rounding leaves
  /// c1 c2 a hair below one.
  double c3() const noexcept;

  /// Throws ParameterError naming the first violated constraint.
  void validate() const;

  bool is_static() const noexcept { return c1 == 1.0 && c2 == 1.0; }
};

/// Reduces a phase into [-pi/2, pi/2). f(t) has period pi in phi, so the
/// reduced value describes the same auxiliary function.
double wrap_phase(double phi) noexcept;

/// (c1 + c2)/2 ± sqrt(((c1 + c2)/2)^2 - 1): the extrema of f over time.
double f_min(const ModelParams& params) noexcept;
double f_max(const ModelParams& params) noexcept;

inline constexpr double kPi = std::numbers::pi;

}  // namespace nonstatic
