#pragma once

#include <cstddef>
#include <vector>

#include "nonstatic/dynamics.hpp"
#include "nonstatic/grid.hpp"
#include "nonstatic/params.hpp"

namespace nonstatic {

inline constexpr int kDefaultFockMax = 50;

/// <q|A> of the nonstatic coherent state. Grid axis must be q.
ComplexField coherent_q(const ModelParams& params, const CoherentAmplitude& amp,
                        const QuadratureGrid& grid, double t);

/// <p|A>, the closed-form Fourier transform of coherent_q. Grid axis must be p.
ComplexField coherent_p(const ModelParams& params, const CoherentAmplitude& amp,
                        const QuadratureGrid& grid, double t);

/// Point evaluations used by the Wigner integral and the Fourier oracles.
std::complex<double> coherent_q_at(const ModelParams& params, const NonstaticSample& s,
                                   std::complex<double> A, double q);
std::complex<double> coherent_p_at(const ModelParams& params, const NonstaticSample& s,
                                   std::complex<double> A, double p);

/// Fock-state wave function <q|Psi_n> with phase gamma_n(t) = -omega (n + 1/2) T(t).
/// Throws CapabilityError when n > n_max.
ComplexField fock_q(const ModelParams& params, int n, const QuadratureGrid& grid, double t,
                    int n_max = kDefaultFockMax);

/// Orthonormal Hermite functions h_0..h_n at x:
/// h_n(x) = pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2}, by the normalized
/// three-term recurrence.
std::vector<double> hermite_functions(int n, double x);

/// Packet center and width along the axis, from the closed forms.
struct PacketMoments {
  double center = 0.0;
  double sigma = 0.0;
};
PacketMoments packet_moments(const ModelParams& params, const CoherentAmplitude& amp, Axis axis,
                             double t);

/// Symmetric bounds covering the packet at every time with the given number
/// of widths to spare. Never narrower than +-`floor`.
double auto_bound(const ModelParams& params, double A0, Axis axis, double widths = 8.0,
                  double floor = 12.0);

}  // namespace nonstatic
