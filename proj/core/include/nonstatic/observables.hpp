#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nonstatic/dynamics.hpp"
#include "nonstatic/params.hpp"

namespace nonstatic {

struct Energies {
  double Ek = 0.0;  // electric, <p^2>/(2 epsilon)
  double Ep = 0.0;  // magnetic, epsilon omega^2 <q^2>/2
  double Etot = 0.0;
};

/// Quantum energies of the coherent state with eigenvalue amp.value at t.
Energies energies(const ModelParams& params, const CoherentAmplitude& amp, double t);

struct Fluctuations {
  double dq = 0.0;
  double dp = 0.0;
  double product = 0.0;
};

Fluctuations fluctuations(const ModelParams& params, double t);

/// Coefficients of A = mu a + nu a^dagger relative to the standard ladder operators.
struct BogoliubovPair {
  std::complex<double> mu{1.0, 0.0};
  std::complex<double> nu{0.0, 0.0};
};

BogoliubovPair bogoliubov(const ModelParams& params, double t);

/// dq and dp rebuilt from (mu - nu) and |mu + nu|. (mu - nu) is real and
/// positive by construction; a residual imaginary part above 1e-12 throws
/// AccuracyError.
Fluctuations fluctuations_from_bogoliubov(const ModelParams& params, const BogoliubovPair& bp);

/// <a^dagger a> and its variance in |A>.
struct PhotonStatistics {
  double mean = 0.0;
  double variance = 0.0;
};

PhotonStatistics photon_statistics(const BogoliubovPair& bp, std::complex<double> A);

/// Mandel Q of the standard photon number. Throws StatisticsError when the
/// mean photon number vanishes.
double mandel_q(const ModelParams& params, const CoherentAmplitude& amp, double t);

/// Time series of every observable on `times`, evaluated in parallel over
/// samples with deterministic assembly. Qmandel is left empty when the
/// statistics are undefined (A0 = 0 in the static case).
struct ObservableSeries {
  std::vector<double> times;
  std::vector<double> Ek, Ep, Etot;
  std::vector<double> dq, dp, product;
  std::vector<double> Qmandel;
};

ObservableSeries observable_series(const ModelParams& params, double A0, double theta,
                                   std::span<const double> times, unsigned threads = 1);

}  // namespace nonstatic
