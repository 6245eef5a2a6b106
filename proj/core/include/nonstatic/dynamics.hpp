#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nonstatic/params.hpp"

namespace nonstatic {

enum class CriticalKind { kGeneric, kNode, kBelly };

const char* to_string(CriticalKind kind) noexcept;

/// Auxiliary function and its phase integral at one instant.
struct NonstaticSample {
  double t = 0.0;
  double f = 1.0;
  double fdot = 0.0;
  double fddot = 0.0;
  double zeta = 1.0;  // epsilon * omega / (hbar * f)
  double T = 0.0;     // signed integral of 1/f from t0 to t
  CriticalKind kind = CriticalKind::kGeneric;
};

/// Evaluates f(t) = c1 sin^2 x + c2 cos^2 x + c3 sin 2x with x = omega (t - t0) + phi,
/// together with its closed-form first and second derivatives.
/// `kind` is node (belly) when fdot vanishes at a minimum (maximum) of f.
NonstaticSample eval_f(const ModelParams& params, double t);

/// Measure of nonstaticity sqrt((c1 + c2)^2 - 4) / (2 sqrt 2).
double nonstaticity_measure(const ModelParams& params);

/// T(t) = integral of 1/f from t0 to t, continuous and nondecreasing.
/// Throws DomainError for t < t0.
double phase_integral(const ModelParams& params, double t);

/// Classical solution Q0 cos(omega (t - t0) + theta0) and its momentum.
struct ClassicalState {
  double Q0 = 0.0;
  double theta0 = 0.0;

  double Qcl(const ModelParams& params, double t) const noexcept;
  double Pcl(const ModelParams& params, double t) const noexcept;
};

struct CoherentAmplitude {
  double A0 = 0.0;
  double theta = 0.0;
  std::complex<double> value{0.0, 0.0};
};

/// A(t) = A0 e^{-i theta} e^{-i omega T(t)}. Throws DomainError when A0 < 0.
CoherentAmplitude amplitude(const ModelParams& params, double A0, double theta, double t);

/// Eigenvalue of the generalized annihilation operator evaluated directly
/// from a classical trajectory. `theta` is set so that value = A0 e^{-i(theta + omega T(t))}.
CoherentAmplitude amplitude_from_classical(const ModelParams& params, const ClassicalState& cl,
                                           double t);

/// sqrt(epsilon omega f(t1) / (2 hbar)) Q0 with t1 = t0 + (pi/2 - theta0)/omega.
double classical_modulus(const ModelParams& params, const ClassicalState& cl);

struct CriticalTime {
  double t = 0.0;
  CriticalKind kind = CriticalKind::kGeneric;
};

/// Roots of fdot in [t_from, t_to], classified by the sign of fddot.
/// Static parameters (fdot identically zero) give an empty list.
std::vector<CriticalTime> critical_times(const ModelParams& params, double t_from, double t_to);

/// Phase theta that puts the maximal displacement of the coherent packet on
/// the first belly at or after t0. With this choice nodes coincide with the
/// equilibrium crossings. Throws DomainError for static parameters.
double belly_aligned_theta(const ModelParams& params);

/// Uniform time grid [t_from, t_to] with n >= 2 samples.
std::vector<double> time_grid(double t_from, double t_to, std::size_t n);

}  // namespace nonstatic
