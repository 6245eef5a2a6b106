#include "nonstatic/wigner.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <sstream>

#include "nonstatic/errors.hpp"
#include "nonstatic/parallel.hpp"
#include "nonstatic/wavefunctions.hpp"

namespace nonstatic {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

double uniform(double lo, double hi, std::size_t n, std::size_t i) {
  return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

void PhaseSpaceGrid::check_shape() const {
  if (!(q_max > q_min) || !(p_max > p_min) || nq < 2 || np < 2) {
    throw DomainError("phase-space grid needs nonempty ranges and at least 2 samples per axis");
  }
}

double PhaseSpaceGrid::q(std::size_t i) const noexcept { return uniform(q_min, q_max, nq, i); }
double PhaseSpaceGrid::p(std::size_t j) const noexcept { return uniform(p_min, p_max, np, j); }

std::vector<double> PhaseSpaceGrid::marginal_q() const {
  std::vector<double> out(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    out[i] = trapezoid(std::span<const double>(values.data() + i * np, np), dp());
  }
  return out;
}

std::vector<double> PhaseSpaceGrid::marginal_p() const {
  std::vector<double> out(np);
  std::vector<double> column(nq);
  for (std::size_t j = 0; j < np; ++j) {
    for (std::size_t i = 0; i < nq; ++i) column[i] = at(i, j);
    out[j] = trapezoid(column, dq());
  }
  return out;
}

double PhaseSpaceGrid::integral() const { return trapezoid(marginal_q(), dq()); }

PhaseSpaceGrid auto_phase_space_grid(const ModelParams& params, const CoherentAmplitude& amp,
                                     double t, std::size_t nq, std::size_t np, double widths) {
  const PacketMoments mq = packet_moments(params, amp, Axis::kQ, t);
  const PacketMoments mp = packet_moments(params, amp, Axis::kP, t);
  PhaseSpaceGrid g;
  g.t = t;
  g.nq = nq;
  g.np = np;
  g.q_min = mq.center - widths * mq.sigma;
  g.q_max = mq.center + widths * mq.sigma;
  g.p_min = mp.center - widths * mp.sigma;
  g.p_max = mp.center + widths * mp.sigma;
  return g;
}

PhaseSpaceGrid wigner_closed(const ModelParams& params, const CoherentAmplitude& amp,
                             PhaseSpaceGrid grid, unsigned threads) {
  grid.check_shape();
  const NonstaticSample s = eval_f(params, grid.t);
  const double zeta = s.zeta;
  const double rz = std::sqrt(zeta);
  const double h = params.hbar;
  const double eta = s.fdot / (2 * params.omega);
  const cplx A = amp.value;
  const cplx Ac = std::conj(A);
  const cplx q_lin = std::sqrt(2 * zeta) * ((A + Ac) + kI * eta * (A - Ac));
  const cplx p_lin = -kI / h * std::sqrt(2 / zeta) * (A - Ac);
  const double constant = -2 * std::norm(A);
  const double norm = 1.0 / (kPi * h);

  grid.values.assign(grid.nq * grid.np, 0.0);
  std::vector<double> residue(grid.nq, 0.0);
  parallel_for(grid.nq, threads, [&](std::size_t i) {
    const double q = grid.q(i);
    double worst = 0.0;
    for (std::size_t j = 0; j < grid.np; ++j) {
      const double p = grid.p(j);
      const double mixed = rz * eta * q - p / (rz * h);
      const cplx exponent = -zeta * q * q - mixed * mixed + q_lin * q + p_lin * p + constant;
      worst = std::max(worst, std::abs(exponent.imag()));
      grid.at(i, j) = norm * std::exp(exponent.real());
    }
    residue[i] = worst;
  });
  grid.max_imag_residue = 0.0;
  for (double r : residue) grid.max_imag_residue = std::max(grid.max_imag_residue, r);
  return grid;
}

PhaseSpaceGrid wigner_numeric(const ModelParams& params, const CoherentAmplitude& amp,
                              PhaseSpaceGrid grid, const WignerQuadrature& quad,
                              unsigned threads) {
  grid.check_shape();
  const NonstaticSample s = eval_f(params, grid.t);
  const double h = params.hbar;
  const double half_window = quad.window_sigmas / std::sqrt(2 * s.zeta);
  const double norm = 1.0 / (kPi * h);
  const cplx A = amp.value;
  const double eta = s.fdot / (2 * params.omega);
  const double p_abs = std::max(std::abs(grid.p_min), std::abs(grid.p_max));

  // Trapezoid over [-L, L] using g(-y) = conj(g(y)) for
  // g(y) = conj(psi(q + y)) psi(q - y); `half` intervals on each side.
  const auto row_integrals = [&](double q, std::size_t half, std::vector<double>& out) {
    const double step = half_window / static_cast<double>(half);
    std::vector<cplx> g(half + 1);
    for (std::size_t k = 0; k <= half; ++k) {
      const double y = step * static_cast<double>(k);
      g[k] = std::conj(coherent_q_at(params, s, A, q + y)) * coherent_q_at(params, s, A, q - y);
    }
    for (std::size_t j = 0; j < grid.np; ++j) {
      const cplx rotate = std::polar(1.0, 2 * grid.p(j) * step / h);
      cplx phase = rotate;
      double sum = g[0].real();
      for (std::size_t k = 1; k < half; ++k) {
        sum += 2 * (g[k] * phase).real();
        phase *= rotate;
      }
      sum += (g[half] * phase).real();
      out[j] = norm * step * sum;
    }
  };

  grid.values.assign(grid.nq * grid.np, 0.0);
  std::vector<double> row_error(grid.nq, 0.0);
  parallel_for(grid.nq, threads, [&](std::size_t i) {
    const double q = grid.q(i);
    // Step doubling cannot detect aliasing: when the integrand's wavenumber
    // times the step is a multiple of 2 pi, halving the step aliases the same
    // way. Start below the Nyquist step. The phase of g(y) e^{2ipy/hbar} is
    // linear in y, and the Gaussian envelope adds about 13 sqrt(zeta) of
    // bandwidth at the e^{-40} level.
    const double k_max = 2 * p_abs / h + 2 * s.zeta * std::abs(eta * q) +
                         2 * std::sqrt(2 * s.zeta) * std::abs(A);
    const double nyquist_step = 2 * kPi / (k_max + 13 * std::sqrt(s.zeta));
    std::size_t half = std::max<std::size_t>(quad.initial_points / 2, 4);
    half = std::max(half, static_cast<std::size_t>(std::ceil(half_window / nyquist_step)));
    std::vector<double> coarse(grid.np), fine(grid.np);
    row_integrals(q, half, coarse);
    double err = std::numeric_limits<double>::infinity();
    while (2 * half <= quad.max_points / 2) {
      row_integrals(q, 2 * half, fine);
      err = 0.0;
      for (std::size_t j = 0; j < grid.np; ++j) err = std::max(err, std::abs(fine[j] - coarse[j]));
      if (err < quad.tolerance) {
        std::copy(fine.begin(), fine.end(),
                  grid.values.begin() + static_cast<std::ptrdiff_t>(i * grid.np));
        row_error[i] = err;
        return;
      }
      half *= 2;
      std::swap(coarse, fine);
    }
    std::ostringstream os;
    os.precision(3);
    os << "wigner_numeric: quadrature did not reach " << quad.tolerance << " at q = " << q
       << " (estimate " << err << ")";
    throw AccuracyError(os.str(), err);
  });
  grid.max_error_estimate = 0.0;
  for (double e : row_error) grid.max_error_estimate = std::max(grid.max_error_estimate, e);
  return grid;
}

Covariance wigner_covariance(const ModelParams& params, double t) {
  const NonstaticSample s = eval_f(params, t);
  const double ew = params.epsilon * params.omega;
  const double h = params.hbar;
  const double eta = s.fdot / (2 * params.omega);
  // Read off the quadratic form of the closed-form exponent:
  // -zeta dq^2 - (zeta eta hbar dq - dp)^2 / (zeta hbar^2).
  return {h * s.f / (2 * ew), 0.5 * h * eta, h * ew * (1 + eta * eta) / (2 * s.f)};
}

Covariance grid_covariance(const PhaseSpaceGrid& grid) {
  const double total = grid.integral();
  PhaseSpaceGrid moment = grid;
  const auto integrate = [&](auto&& weight) {
    for (std::size_t i = 0; i < grid.nq; ++i)
      for (std::size_t j = 0; j < grid.np; ++j)
        moment.at(i, j) = weight(grid.q(i), grid.p(j)) * grid.at(i, j);
    return moment.integral() / total;
  };
  const double mq = integrate([](double q, double) { return q; });
  const double mp = integrate([](double, double p) { return p; });
  Covariance c;
  c.qq = integrate([&](double q, double) { return (q - mq) * (q - mq); });
  c.pp = integrate([&](double, double p) { return (p - mp) * (p - mp); });
  c.qp = integrate([&](double q, double p) { return (q - mq) * (p - mp); });
  return c;
}

namespace {

struct NormalizedContour {
  double center_q, center_p;
  double a, b, d;  // covariance [[a, b], [b, d]]
};

NormalizedContour normalized_contour(const ModelParams& params, double A0, double theta,
                                     double t) {
  const CoherentAmplitude amp = amplitude(params, A0, theta, t);
  const double scale = std::sqrt(params.epsilon * params.omega);
  const Covariance c = wigner_covariance(params, t);
  return {packet_moments(params, amp, Axis::kQ, t).center * scale,
          packet_moments(params, amp, Axis::kP, t).center / scale, c.qq * scale * scale, c.qp,
          c.pp / (scale * scale)};
}

double bar_angle(const NormalizedContour& c) { return 0.5 * std::atan2(2 * c.b, c.a - c.d); }
double center_angle(const NormalizedContour& c) { return std::atan2(c.center_p, c.center_q); }

// Nearest representative of `angle` (mod `turn`) to `reference`.
double unwrap_near(double angle, double reference, double turn) {
  return angle + turn * std::round((reference - angle) / turn);
}

// Time after t0 at which the unwrapped angle first moves a full 2 pi away from
// its starting value; `turn` is the angle's own ambiguity (2 pi or pi).
std::pair<double, int> full_turn_time(const ModelParams& params,
                                      const std::function<double(double)>& raw_angle,
                                      double turn, std::size_t samples_per_period) {
  const double period = 2 * kPi / params.omega;
  const double step = period / static_cast<double>(samples_per_period);
  const double start = raw_angle(params.t0);
  double prev_t = params.t0;
  double prev = start;
  const std::size_t limit = 2 * samples_per_period;
  for (std::size_t k = 1; k <= limit; ++k) {
    const double t = params.t0 + static_cast<double>(k) * step;
    const double cur = unwrap_near(raw_angle(t), prev, turn);
    if (std::abs(cur - start) >= 2 * kPi) {
      const int sense = cur < start ? -1 : 1;
      const double target = start + sense * 2 * kPi;
      double lo = prev_t, hi = t, lo_val = prev;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = unwrap_near(raw_angle(mid), lo_val, turn);
        if ((v - target) * sense >= 0) {  // already past the full turn
          hi = mid;
        } else {
          lo = mid;
          lo_val = v;
        }
      }
      return {0.5 * (lo + hi) - params.t0, sense};
    }
    prev = cur;
    prev_t = t;
  }
  throw DomainError("rotation did not complete a full turn within two periods");
}

}  // namespace

std::vector<EllipseSummary> ellipse_track(const ModelParams& params, double A0, double theta,
                                          std::span<const double> times) {
  params.validate();
  if (times.size() < 2) throw DomainError("ellipse_track needs at least two times");
  std::vector<EllipseSummary> out;
  out.reserve(times.size());
  for (double t : times) {
    const NormalizedContour c = normalized_contour(params, A0, theta, t);
    const double mean = 0.5 * (c.a + c.d);
    const double spread = std::hypot(0.5 * (c.a - c.d), c.b);
    EllipseSummary e;
    e.t = t;
    e.center_q = c.center_q;
    e.center_p = c.center_p;
    e.radius_major = std::sqrt(mean + spread);
    e.radius_minor = std::sqrt(std::max(0.0, mean - spread));
    if (spread > 1e-12 * mean) e.angle = bar_angle(c);
    out.push_back(e);
  }
  return out;
}

RotationPeriods rotation_periods(const ModelParams& params, double A0, double theta,
                                 std::size_t samples_per_period) {
  params.validate();
  if (!(A0 > 0.0)) throw DomainError("rotation_periods: centre rotation needs A0 > 0");
  if (params.is_static()) throw DomainError("rotation_periods: static contour has no bar");
  if (samples_per_period < 16) samples_per_period = 16;

  const auto centre = [&](double t) {
    return center_angle(normalized_contour(params, A0, theta, t));
  };
  const auto bar = [&](double t) { return bar_angle(normalized_contour(params, A0, theta, t)); };
  const auto [tc, sc] = full_turn_time(params, centre, 2 * kPi, samples_per_period);
  const auto [tb, sb] = full_turn_time(params, bar, kPi, samples_per_period);
  return {tc, tb, sc, sb};
}

}  // namespace nonstatic

