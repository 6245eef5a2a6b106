#include "nonstatic/dynamics.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "nonstatic/errors.hpp"

namespace nonstatic {

const char* to_string(CriticalKind kind) noexcept {
  switch (kind) {
    case CriticalKind::kGeneric: return "generic";
    case CriticalKind::kNode: return "node";
    case CriticalKind::kBelly: return "belly";
  }
  return "generic";
}

namespace {

double angle(const ModelParams& params, double t) noexcept {
  return params.omega * (t - params.t0) + params.phi;
}

// c1 sin^2 x + c2 cos^2 x + c3 sin 2x rewritten with c1 c2 - c3^2 = 1 as a sum
// of two squares, so f stays positive without cancellation.
double f_of_angle(double c1, double c3, double x) noexcept {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double u = s + (c3 / c1) * c;
  return c1 * u * u + c * c / c1;
}

// Continuous antiderivative of 1/f with respect to the angle:
// arctan(c1 tan x + c3) on the branch containing x, shifted by pi per branch.
double unwrapped_antiderivative(double c1, double c3, double x) noexcept {
  const double branch = std::floor((x + kPi / 2) / kPi);
  const double xr = x - branch * kPi;  // [-pi/2, pi/2), cos(xr) >= 0
  return std::atan2(c1 * std::sin(xr) + c3 * std::cos(xr), std::cos(xr)) + branch * kPi;
}

double signed_phase_integral(const ModelParams& params, double t) noexcept {
  const double c3 = params.c3();
  return (unwrapped_antiderivative(params.c1, c3, angle(params, t)) -
          unwrapped_antiderivative(params.c1, c3, params.phi)) /
         params.omega;
}

bool has_nonstaticity(const ModelParams& params) noexcept {
  return params.c1 != params.c2 || params.c3() != 0.0;
}

}  // namespace

NonstaticSample eval_f(const ModelParams& params, double t) {
  params.validate();
  const double c3 = params.c3();
  const double x = angle(params, t);
  const double s2 = std::sin(2 * x);
  const double co2 = std::cos(2 * x);
  const double w = params.omega;

  NonstaticSample s;
  s.t = t;
  s.f = f_of_angle(params.c1, c3, x);
  s.fdot = w * ((params.c1 - params.c2) * s2 + 2 * c3 * co2);
  s.fddot = 2 * w * w * ((params.c1 - params.c2) * co2 - 2 * c3 * s2);
  s.zeta = params.epsilon * w / (params.hbar * s.f);
  s.T = signed_phase_integral(params, t);
  if (has_nonstaticity(params) &&
      std::abs(s.fdot) <= 1e-9 * w * (params.c1 + params.c2)) {
    s.kind = s.fddot > 0 ? CriticalKind::kNode : CriticalKind::kBelly;
  }
  return s;
}

double nonstaticity_measure(const ModelParams& params) {
  params.validate();
  const double sum = params.c1 + params.c2;
  return std::sqrt(std::max(0.0, sum * sum - 4.0)) / (2.0 * std::sqrt(2.0));
}

double phase_integral(const ModelParams& params, double t) {
  params.validate();
  if (!(t >= params.t0)) {
    std::ostringstream os;
    os.precision(17);
    os << "phase_integral requires t >= t0 (t = " << t << ", t0 = " << params.t0 << ")";
    throw DomainError(os.str());
  }
  return signed_phase_integral(params, t);
}

double ClassicalState::Qcl(const ModelParams& params, double t) const noexcept {
  return Q0 * std::cos(params.omega * (t - params.t0) + theta0);
}

double ClassicalState::Pcl(const ModelParams& params, double t) const noexcept {
  return -params.epsilon * params.omega * Q0 * std::sin(params.omega * (t - params.t0) + theta0);
}

CoherentAmplitude amplitude(const ModelParams& params, double A0, double theta, double t) {
  if (!(std::isfinite(A0) && A0 >= 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "amplitude modulus must be finite and >= 0 (A0 = " << A0 << ")";
    throw DomainError(os.str());
  }
  const double phase = theta + params.omega * phase_integral(params, t);
  return {A0, theta, std::polar(A0, -phase)};
}

CoherentAmplitude amplitude_from_classical(const ModelParams& params, const ClassicalState& cl,
                                           double t) {
  const NonstaticSample s = eval_f(params, t);
  const double e = params.epsilon;
  const double w = params.omega;
  const double h = params.hbar;
  const std::complex<double> q_coeff =
      std::sqrt(e * w / (2 * h * s.f)) * std::complex<double>(1.0, -s.fdot / (2 * w));
  const std::complex<double> p_coeff{0.0, std::sqrt(s.f / (2 * e * w * h))};
  const std::complex<double> value = q_coeff * cl.Qcl(params, t) + p_coeff * cl.Pcl(params, t);

  CoherentAmplitude amp;
  amp.value = value;
  amp.A0 = std::abs(value);
  amp.theta = std::remainder(-std::arg(value) - w * s.T, 2 * kPi);
  return amp;
}

double classical_modulus(const ModelParams& params, const ClassicalState& cl) {
  const double t1 = params.t0 + (kPi / 2 - cl.theta0) / params.omega;
  const double f1 = eval_f(params, t1).f;
  return std::sqrt(params.epsilon * params.omega * f1 / (2 * params.hbar)) * std::abs(cl.Q0);
}

std::vector<CriticalTime> critical_times(const ModelParams& params, double t_from, double t_to) {
  params.validate();
  std::vector<CriticalTime> out;
  if (!(t_to > t_from) || !has_nonstaticity(params)) return out;

  const auto fdot = [&](double t) { return eval_f(params, t).fdot; };
  const auto classify = [&](double t) {
    return eval_f(params, t).fddot > 0 ? CriticalKind::kNode : CriticalKind::kBelly;
  };

  // Roots are pi/(2 omega) apart; eight samples per gap bracket each one alone.
  const double step = kPi / (16 * params.omega);
  const auto intervals =
      static_cast<std::int64_t>(std::ceil((t_to - t_from) / step));
  double a = t_from;
  double fa = fdot(a);
  if (fa == 0.0) out.push_back({a, classify(a)});
  for (std::int64_t k = 1; k <= intervals; ++k) {
    const double b = k == intervals ? t_to : t_from + static_cast<double>(k) * step;
    const double fb = fdot(b);
    if (fb == 0.0) {
      out.push_back({b, classify(b)});
    } else if (fa != 0.0 && std::signbit(fa) != std::signbit(fb)) {
      std::uintmax_t max_iter = 200;
      const auto [lo, hi] = boost::math::tools::toms748_solve(
          fdot, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), max_iter);
      const double root = 0.5 * (lo + hi);
      out.push_back({root, classify(root)});
    }
    a = b;
    fa = fb;
  }
  return out;
}

double belly_aligned_theta(const ModelParams& params) {
  params.validate();
  if (!has_nonstaticity(params)) {
    throw DomainError("belly_aligned_theta: static parameters have no bellies");
  }
  const double period = kPi / params.omega;
  for (const CriticalTime& c : critical_times(params, params.t0, params.t0 + period)) {
    if (c.kind == CriticalKind::kBelly) {
      return std::remainder(-params.omega * phase_integral(params, c.t), 2 * kPi);
    }
  }
  throw DomainError("belly_aligned_theta: no belly found within one period");
}

std::vector<double> time_grid(double t_from, double t_to, std::size_t n) {
  if (n < 2 || !(t_to > t_from) || !std::isfinite(t_from) || !std::isfinite(t_to)) {
    throw DomainError("time grid needs n >= 2 and t_to > t_from");
  }
  std::vector<double> t(n);
  const double h = (t_to - t_from) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) t[i] = t_from + static_cast<double>(i) * h;
  t.back() = t_to;
  return t;
}

}  // namespace nonstatic
