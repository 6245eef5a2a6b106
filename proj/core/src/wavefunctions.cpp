#include "nonstatic/wavefunctions.hpp"

#include <cmath>
#include <sstream>

#include "nonstatic/errors.hpp"

namespace nonstatic {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void require_axis(const QuadratureGrid& grid, Axis axis, const char* who) {
  if (grid.axis() != axis) {
    std::ostringstream os;
    os << who << " needs a " << to_string(axis) << " grid";
    throw DomainError(os.str());
  }
}

ComplexField finish(QuadratureGrid grid, double t, std::vector<cplx> values,
                    PacketMoments packet) {
  ComplexField field{grid, t, std::move(values)};
  field.norm = trapezoid(field.density(), grid.spacing());
  field.narrow_grid = packet.center - 4 * packet.sigma < grid.min() ||
                      packet.center + 4 * packet.sigma > grid.max();
  return field;
}

}  // namespace

cplx coherent_q_at(const ModelParams& params, const NonstaticSample& s, cplx A, double q) {
  const double zeta = s.zeta;
  const double eta = s.fdot / (2 * params.omega);
  const cplx exponent = 0.25 * std::log(zeta / kPi) - 0.5 * zeta * cplx(1.0, -eta) * q * q +
                        std::sqrt(2 * zeta) * A * q - 0.5 * std::norm(A) - 0.5 * A * A;
  return std::exp(exponent);
}

cplx coherent_p_at(const ModelParams& params, const NonstaticSample& s, cplx A, double p) {
  const double zeta = s.zeta;
  const double h = params.hbar;
  const double eta = s.fdot / (2 * params.omega);
  const cplx chirp{1.0, -eta};
  // Re(hbar * chirp) = hbar > 0, so the principal root is continuous in t.
  const cplx prefactor = 1.0 / (std::pow(kPi * zeta, 0.25) * std::sqrt(h * chirp));
  const cplx exponent = -(p * p + 2.0 * kI * std::sqrt(2 * zeta) * A * h * p) /
                            (2 * zeta * h * h * chirp) +
                        cplx(1.0, eta) / (2.0 * chirp) * A * A - 0.5 * std::norm(A);
  return prefactor * std::exp(exponent);
}

ComplexField coherent_q(const ModelParams& params, const CoherentAmplitude& amp,
                        const QuadratureGrid& grid, double t) {
  require_axis(grid, Axis::kQ, "coherent_q");
  const NonstaticSample s = eval_f(params, t);
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coherent_q_at(params, s, amp.value, grid[i]);
  return finish(grid, t, std::move(v), packet_moments(params, amp, Axis::kQ, t));
}

ComplexField coherent_p(const ModelParams& params, const CoherentAmplitude& amp,
                        const QuadratureGrid& grid, double t) {
  require_axis(grid, Axis::kP, "coherent_p");
  const NonstaticSample s = eval_f(params, t);
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coherent_p_at(params, s, amp.value, grid[i]);
  return finish(grid, t, std::move(v), packet_moments(params, amp, Axis::kP, t));
}

std::vector<double> hermite_functions(int n, double x) {
  if (n < 0) throw DomainError("hermite_functions: n must be >= 0");
  // Recurrence on the polynomial part only. The working pair is rescaled when
  // it grows large; each stored entry keeps the log scale in force when it was
  // produced, and the Gaussian is applied at the end.
  const std::size_t count = static_cast<std::size_t>(n) + 1;
  std::vector<double> mant(count);
  std::vector<double> log_scale(count, 0.0);
  mant[0] = std::pow(kPi, -0.25);
  if (n >= 1) mant[1] = std::sqrt(2.0) * x * mant[0];
  double prev = mant[0];
  double cur = n >= 1 ? mant[1] : 0.0;
  double running_log = 0.0;
  const double kStep = 150.0 * std::log(10.0);
  for (int k = 1; k < n; ++k) {
    const double kk = k;
    const double next = std::sqrt(2.0 / (kk + 1)) * x * cur - std::sqrt(kk / (kk + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e150) {
      cur *= 1e-150;
      prev *= 1e-150;
      running_log += kStep;
    }
    mant[static_cast<std::size_t>(k) + 1] = cur;
    log_scale[static_cast<std::size_t>(k) + 1] = running_log;
  }
  std::vector<double> h(mant.size());
  const double gauss = -0.5 * x * x;
  for (std::size_t k = 0; k < h.size(); ++k) {
    h[k] = mant[k] == 0.0 ? 0.0 : mant[k] * std::exp(gauss + log_scale[k]);
  }
  return h;
}

ComplexField fock_q(const ModelParams& params, int n, const QuadratureGrid& grid, double t,
                    int n_max) {
  require_axis(grid, Axis::kQ, "fock_q");
  if (n < 0) throw DomainError("fock_q: n must be >= 0");
  if (n > n_max) {
    std::ostringstream os;
    os << "fock_q: n = " << n << " exceeds n_max = " << n_max;
    throw CapabilityError(os.str());
  }
  const NonstaticSample s = eval_f(params, t);
  const double gamma = -params.omega * (n + 0.5) * phase_integral(params, t);
  const double eta = s.fdot / (2 * params.omega);
  const double root_zeta = std::sqrt(s.zeta);
  const double amplitude_scale = std::pow(s.zeta, 0.25);
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double q = grid[i];
    const double h = hermite_functions(n, root_zeta * q)[static_cast<std::size_t>(n)];
    v[i] = amplitude_scale * h * std::exp(kI * (0.5 * s.zeta * eta * q * q + gamma));
  }
  const double width = std::sqrt((2.0 * n + 1.0) / (2.0 * s.zeta));
  return finish(grid, t, std::move(v), {0.0, width});
}

PacketMoments packet_moments(const ModelParams& params, const CoherentAmplitude& amp, Axis axis,
                             double t) {
  const NonstaticSample s = eval_f(params, t);
  const double ew = params.epsilon * params.omega;
  const double h = params.hbar;
  const double eta = s.fdot / (2 * params.omega);
  const cplx A = amp.value;
  if (axis == Axis::kQ) {
    return {std::sqrt(2 * h * s.f / ew) * A.real(), std::sqrt(h * s.f / (2 * ew))};
  }
  return {std::sqrt(2 * h * ew / s.f) * (A.imag() + eta * A.real()),
          std::sqrt(h * ew / (2 * s.f) * (1 + eta * eta))};
}

double auto_bound(const ModelParams& params, double A0, Axis axis, double widths, double floor) {
  params.validate();
  const double fm = f_max(params);
  const double ew = params.epsilon * params.omega;
  const double unit = axis == Axis::kQ ? std::sqrt(params.hbar / ew) : std::sqrt(params.hbar * ew);
  const double reach = (A0 * std::sqrt(2 * fm) + widths * std::sqrt(fm / 2)) * unit;
  return std::max(floor, reach);
}

}  // namespace nonstatic
