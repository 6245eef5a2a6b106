#include "nonstatic/validate.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <limits>

#include "nonstatic/errors.hpp"
#include "nonstatic/observables.hpp"
#include "nonstatic/wavefunctions.hpp"
#include "nonstatic/wigner.hpp"

namespace nonstatic::cli {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkip: return "skip";
    case CheckStatus::kInfo: return "info";
  }
  return "unknown";
}

namespace {

class Suite {
 public:
  explicit Suite(double scale) : scale_(scale) {}

  /// Passes when value <= tolerance * scale.
  void at_most(std::string name, double value, double tolerance) {
    const double tol = tolerance * scale_;
    results_.push_back({std::move(name), value, tol,
                        value <= tol ? CheckStatus::kPass : CheckStatus::kFail});
  }
  void skip(std::string name) { results_.push_back({std::move(name), 0.0, 0.0, CheckStatus::kSkip}); }
  void info(std::string name, double value) {
    results_.push_back({std::move(name), value, 0.0, CheckStatus::kInfo});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  double scale_;
  std::vector<CheckResult> results_;
};

double inverse_f_integral(const ModelParams& p, double a, double b) {
  const auto g = [&](double t) {
    const double x = p.omega * (t - p.t0) + p.phi;
    const double s = std::sin(x), c = std::cos(x);
    return 1.0 / (p.c1 * s * s + p.c2 * c * c + p.c3() * 2 * s * c);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, a, b, 12, 1e-12);
}

}  // namespace

std::vector<CheckResult> validate_scenario(const Scenario& s) {
  const ModelParams& p = s.params;
  const double hbar = p.hbar;
  const auto times = time_grid(s.t_from, s.t_to, s.nt);
  // The tightest tolerance below is 1e-12; scaled under a few ulps it can
  // no longer be certified in double precision.
  const double tightest = 1e-12 * s.tol_scale;
  if (tightest < 4 * std::numeric_limits<double>::epsilon()) {
    throw AccuracyError("--tol-scale requests tolerances below double precision", tightest);
  }
  Suite suite(s.tol_scale);

  suite.info("nonstaticity_D", nonstaticity_measure(p));
  suite.at_most("c3_constraint", std::abs(p.c1 * p.c2 - p.c3() * p.c3() - 1.0),
                1e-12 * std::max(1.0, p.c1 * p.c2));
  suite.at_most("f_extrema_product", std::abs(f_min(p) * f_max(p) - 1.0), 1e-12);

  double f_lowest = std::numeric_limits<double>::infinity();
  double residual = 0, t_err = 0, modulus = 0, energy = 0, static_energy = 0;
  double product_floor = 0, identity = 0, bogo = 0, det = 0;
  const double scale = p.omega * p.omega * f_max(p);
  double T_ref = s.t_from > p.t0 ? inverse_f_integral(p, p.t0, s.t_from) : 0.0;
  double t_prev = times.front();
  const double e0 = energies(p, amplitude(p, s.a0, s.theta, times.front()), times.front()).Etot;
  for (double t : times) {
    const NonstaticSample x = eval_f(p, t);
    f_lowest = std::min(f_lowest, x.f);
    residual = std::max(residual, std::abs(x.fddot - x.fdot * x.fdot / (2 * x.f) +
                                           2 * p.omega * p.omega * (x.f - 1 / x.f)) / scale);
    T_ref += inverse_f_integral(p, t_prev, t);
    t_prev = t;
    t_err = std::max(t_err, std::abs(x.T - T_ref));

    const CoherentAmplitude amp = amplitude(p, s.a0, s.theta, t);
    modulus = std::max(modulus, std::abs(std::abs(amp.value) - s.a0));
    const Energies e = energies(p, amp, t);
    energy = std::max(energy, std::abs(e.Etot - e0));
    static_energy = std::max(static_energy,
                             std::abs(e.Etot - hbar * p.omega * (s.a0 * s.a0 + 0.5)));

    const Fluctuations fl = fluctuations(p, t);
    product_floor = std::max(product_floor, hbar / 2 - fl.product);
    const BogoliubovPair bp = bogoliubov(p, t);
    identity = std::max(identity, std::abs(std::norm(bp.mu) - std::norm(bp.nu) - 1.0) / std::norm(bp.mu));
    const Fluctuations fb = fluctuations_from_bogoliubov(p, bp);
    bogo = std::max({bogo, std::abs(fb.dq - fl.dq) / fl.dq, std::abs(fb.dp - fl.dp) / fl.dp});
    det = std::max(det, std::abs(wigner_covariance(p, t).det() / (hbar * hbar / 4) - 1.0));
  }

  suite.at_most("f_positive", f_lowest > 0 ? 0.0 : 1.0, 0.0);
  suite.at_most("ode_residual", residual, 1e-8);
  suite.at_most("phase_integral", t_err, 1e-8);
  suite.at_most("amplitude_modulus", modulus, 1e-10);
  suite.at_most("energy_conservation", energy / std::abs(e0), 1e-10);
  if (p.is_static()) {
    suite.at_most("static_energy", static_energy, 1e-12 * std::max(1.0, std::abs(e0)));
  } else {
    suite.skip("static_energy");
  }
  suite.at_most("uncertainty_lower_bound", std::max(0.0, product_floor), 1e-12 * hbar);

  double at_critical = 0;
  const auto roots = critical_times(p, s.t_from, s.t_to);
  for (const CriticalTime& c : roots) {
    at_critical = std::max(at_critical, std::abs(fluctuations(p, c.t).product - hbar / 2));
  }
  if (p.is_static()) {
    suite.at_most("uncertainty_at_critical_times", std::abs(fluctuations(p, s.t_from).product - hbar / 2), 1e-10 * hbar);
  } else if (roots.empty()) {
    suite.skip("uncertainty_at_critical_times");
  } else {
    suite.at_most("uncertainty_at_critical_times", at_critical, 1e-10 * hbar);
  }
  suite.at_most("bogoliubov_identity", identity, 1e-10);
  suite.at_most("bogoliubov_fluctuations", bogo, 1e-10);
  suite.at_most("wigner_determinant", det, 1e-10);

  try {
    double q0 = mandel_q(p, amplitude(p, s.a0, s.theta, times.front()), times.front());
    double spread = 0;
    for (double t : times) spread = std::max(spread, std::abs(mandel_q(p, amplitude(p, s.a0, s.theta, t), t) - q0));
    suite.at_most("mandel_q_constant", spread / std::max(1.0, std::abs(q0)), 1e-8);
    if (p.is_static()) suite.at_most("mandel_q_static_zero", std::abs(q0), 1e-12);
  } catch (const StatisticsError&) {
    suite.skip("mandel_q_constant");
  }

  const double t = s.t_from;
  const CoherentAmplitude amp = amplitude(p, s.a0, s.theta, t);
  const QuadratureGrid qg(Axis::kQ, s.q_min, s.q_max, s.nq);
  const QuadratureGrid pg(Axis::kP, s.p_min, s.p_max, s.np);
  const ComplexField psi_q = coherent_q(p, amp, qg, t);
  const ComplexField psi_p = coherent_p(p, amp, pg, t);
  suite.at_most("q_norm", std::abs(psi_q.norm - 1.0), 1e-6);
  suite.at_most("p_norm", std::abs(psi_p.norm - 1.0), 1e-6);

  double fourier = 0;
  const PacketMoments pm = packet_moments(p, amp, Axis::kP, t);
  const NonstaticSample xs = eval_f(p, t);
  for (int k = -10; k <= 10; ++k) {
    const double pv = pm.center + 0.4 * k * pm.sigma;
    std::complex<double> sum = 0;
    for (std::size_t i = 0; i < qg.size(); ++i) {
      const double w = (i == 0 || i + 1 == qg.size()) ? 0.5 : 1.0;
      sum += w * psi_q.values[i] * std::exp(std::complex<double>(0, -pv * qg[i] / hbar));
    }
    sum *= qg.spacing() / std::sqrt(2 * kPi * hbar);
    fourier = std::max(fourier, std::abs(sum - coherent_p_at(p, xs, amp.value, pv)));
  }
  suite.at_most("p_fourier", fourier, 1e-6);

  // A tilted ellipse is thinner than its axis widths by the uncertainty
  // product; keep three points per conditional width across +-8 widths.
  const double ratio = fluctuations(p, t).product / (hbar / 2);
  const auto wn_points = static_cast<std::size_t>(std::clamp(std::ceil(48 * ratio), 161.0, 2001.0));
  const auto w = wigner_closed(p, amp, auto_phase_space_grid(p, amp, t, wn_points, wn_points, 8.0), s.threads);
  suite.at_most("wigner_normalization", std::abs(w.integral() - 1.0), 1e-6);
  suite.at_most("wigner_real", w.max_imag_residue, 1e-10);
  const auto small = auto_phase_space_grid(p, amp, t, 15, 15, 4.0);
  const auto wc = wigner_closed(p, amp, small, s.threads);
  WignerQuadrature quad;
  quad.tolerance *= s.tol_scale;
  const auto wn = wigner_numeric(p, amp, small, quad, s.threads);
  double wdiff = 0;
  for (std::size_t k = 0; k < wc.values.size(); ++k) wdiff = std::max(wdiff, std::abs(wc.values[k] - wn.values[k]));
  suite.at_most("wigner_closed_vs_numeric", wdiff, 1e-6);

  const double fb = auto_bound(p, std::sqrt(21.0), Axis::kQ);
  const QuadratureGrid fg(Axis::kQ, -fb, fb, 2401);
  std::vector<ComplexField> fock;
  for (int n = 0; n <= 10; ++n) fock.push_back(fock_q(p, n, fg, t));
  double ortho = 0;
  for (int m = 0; m <= 10; ++m) {
    for (int n = m; n <= 10; ++n) {
      ortho = std::max(ortho, std::abs(overlap(fock[m], fock[n]) - (m == n ? 1.0 : 0.0)));
    }
  }
  suite.at_most("fock_orthonormality", ortho, 1e-6);
  return suite.take();
}

}  // namespace nonstatic::cli
