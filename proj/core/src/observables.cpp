#include "nonstatic/observables.hpp"

#include <cmath>
#include <sstream>

#include "nonstatic/errors.hpp"
#include "nonstatic/parallel.hpp"

namespace nonstatic {

namespace {
using cplx = std::complex<double>;
}

Energies energies(const ModelParams& params, const CoherentAmplitude& amp, double t) {
  const NonstaticSample s = eval_f(params, t);
  const double hw = params.hbar * params.omega;
  const double eta = s.fdot / (2 * params.omega);
  const cplx A = amp.value;
  const cplx plus{1.0, eta};
  const double modsq = std::norm(A);

  Energies e;
  e.Ek = -hw / (4 * s.f) *
         (2 * (plus * plus * A * A).real() - (1 + eta * eta) * (2 * modsq + 1));
  e.Ep = 0.25 * hw * s.f * (2 * (A * A).real() + 2 * modsq + 1);
  e.Etot = e.Ek + e.Ep;
  return e;
}

Fluctuations fluctuations(const ModelParams& params, double t) {
  const NonstaticSample s = eval_f(params, t);
  const double ew = params.epsilon * params.omega;
  const double h = params.hbar;
  const double eta = s.fdot / (2 * params.omega);
  Fluctuations out;
  out.dq = std::sqrt(h * s.f / (2 * ew));
  out.dp = std::sqrt(h * ew / (2 * s.f) * (1 + eta * eta));
  out.product = 0.5 * h * std::sqrt(1 + eta * eta);
  return out;
}

BogoliubovPair bogoliubov(const ModelParams& params, double t) {
  const NonstaticSample s = eval_f(params, t);
  const double root_f = std::sqrt(s.f);
  const cplx common = cplx(1.0, -s.fdot / (2 * params.omega)) / (2 * root_f);
  return {common + 0.5 * root_f, common - 0.5 * root_f};
}

Fluctuations fluctuations_from_bogoliubov(const ModelParams& params, const BogoliubovPair& bp) {
  const cplx diff = bp.mu - bp.nu;
  if (std::abs(diff.imag()) > 1e-12 || !(diff.real() > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "mu - nu = (" << diff.real() << ", " << diff.imag() << ") is not real and positive";
    throw AccuracyError(os.str(), std::abs(diff.imag()));
  }
  const double ew = params.epsilon * params.omega;
  const double h = params.hbar;
  Fluctuations out;
  out.dq = std::sqrt(h / (2 * ew)) * diff.real();
  out.dp = std::sqrt(h * ew / 2) * std::abs(bp.mu + bp.nu);
  out.product = out.dq * out.dp;
  return out;
}

PhotonStatistics photon_statistics(const BogoliubovPair& bp, cplx A) {
  const double mm = std::norm(bp.mu);
  const double nn = std::norm(bp.nu);
  const double aa = std::norm(A);
  // mu nu A*^2 + c.c.
  const double cross = 2 * (bp.mu * bp.nu * std::conj(A) * std::conj(A)).real();
  PhotonStatistics st;
  st.mean = (mm + nn) * aa - cross + nn;
  st.variance = (mm * mm + 6 * mm * nn + nn * nn) * aa - 2 * (mm + nn) * cross + 2 * mm * nn;
  return st;
}

double mandel_q(const ModelParams& params, const CoherentAmplitude& amp, double t) {
  const PhotonStatistics st = photon_statistics(bogoliubov(params, t), amp.value);
  if (!(st.mean > 1e-14)) {
    throw StatisticsError("Mandel Q undefined: mean photon number is zero (A0 = 0, nu = 0)");
  }
  return (st.variance - st.mean) / st.mean;
}

ObservableSeries observable_series(const ModelParams& params, double A0, double theta,
                                   std::span<const double> times, unsigned threads) {
  params.validate();
  const std::size_t n = times.size();
  ObservableSeries out;
  out.times.assign(times.begin(), times.end());
  out.Ek.resize(n);
  out.Ep.resize(n);
  out.Etot.resize(n);
  out.dq.resize(n);
  out.dp.resize(n);
  out.product.resize(n);
  std::vector<double> q(n);
  std::vector<char> q_defined(n, 1);

  parallel_for(n, threads, [&](std::size_t i) {
    const double t = times[i];
    const CoherentAmplitude amp = amplitude(params, A0, theta, t);
    const Energies e = energies(params, amp, t);
    out.Ek[i] = e.Ek;
    out.Ep[i] = e.Ep;
    out.Etot[i] = e.Etot;
    const Fluctuations fl = fluctuations(params, t);
    out.dq[i] = fl.dq;
    out.dp[i] = fl.dp;
    out.product[i] = fl.product;
    try {
      q[i] = mandel_q(params, amp, t);
    } catch (const StatisticsError&) {
      q_defined[i] = 0;
    }
  });

  bool all_defined = true;
  for (char d : q_defined) all_defined = all_defined && d;
  if (all_defined) out.Qmandel = std::move(q);
  return out;
}

}  // namespace nonstatic
