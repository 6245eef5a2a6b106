#include <cmath>
#include <random>

#include "doctest.h"
#include "nonstatic/dynamics.hpp"
#include "nonstatic/errors.hpp"
#include "oracles.hpp"

using namespace nonstatic;
using oracle::make_params;

TEST_SUITE("params") {
  TEST_CASE("c3 follows the constraint") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
      const ModelParams p = oracle::random_params(rng);
      const double c3 = p.c3();
      CHECK(std::abs(p.c1 * p.c2 - c3 * c3 - 1.0) <= 1e-12 * p.c1 * p.c2);
    }
    ModelParams neg = make_params(5, 2);
    neg.c3_sign = C3Sign::kNegative;
    CHECK(neg.c3() == doctest::Approx(-3.0).epsilon(1e-15));
  }

  TEST_CASE("validation names the violated constraint") {
    ModelParams p = make_params(0.5, 1.0);
    try {
      p.validate();
      FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
      CHECK(e.constraint() == "c1*c2 >= 1");
      CHECK(e.kind() == ErrorKind::kParameterDomain);
    }
    p = make_params(1, 1);
    p.omega = 0.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p = make_params(1, 1);
    p.phi = kPi / 2;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p.phi = -kPi / 2;
    CHECK_NOTHROW(p.validate());
    p = make_params(-1, -1);
    CHECK_THROWS_AS(p.validate(), ParameterError);
  }

  TEST_CASE("wrap_phase reduces into [-pi/2, pi/2) without changing f") {
    for (double phi : {-7.0, -kPi / 2, -1.0, 0.0, 1.3, kPi / 2, 4.0, 10.0}) {
      const double r = wrap_phase(phi);
      CHECK(r >= -kPi / 2);
      CHECK(r < kPi / 2);
      ModelParams a = make_params(5, 2);
      a.phi = r;
      // f depends on phi only through sin^2, cos^2 and sin 2phi: period pi.
      ModelParams raw = a;
      raw.phi = phi;
      CHECK(oracle::f_literal(raw, 0.37) == doctest::Approx(eval_f(a, 0.37).f).epsilon(1e-12));
    }
  }

  TEST_CASE("f extrema multiply to one") {
    for (auto [c1, c2] : {std::pair{1.0, 1.0}, {5.0, 2.0}, {1.0, 100.0}, {20.0, 0.1}}) {
      const ModelParams p = make_params(c1, c2);
      CHECK(f_min(p) * f_max(p) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(f_min(p) > 0.0);
    }
  }
}

TEST_SUITE("eval_f") {
  TEST_CASE("static limit") {
    const ModelParams p = make_params(1, 1);
    for (double t : {0.0, 0.3, 5.0, -2.0}) {
      const NonstaticSample s = eval_f(p, t);
      CHECK(s.f == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(std::abs(s.fdot) <= 1e-15);
      CHECK(s.kind == CriticalKind::kGeneric);
    }
  }

  TEST_CASE("f(t0) = c2 when phi = 0") {
    CHECK(eval_f(make_params(5, 2), 0.0).f == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("f(pi/4) against 50-digit evaluation") {
    const ModelParams p = make_params(5, 2);
    const double oracle_value = oracle::f_multiprecision(p, kPi / 4);
    CHECK(oracle_value == doctest::Approx(6.5).epsilon(1e-15));
    CHECK(eval_f(p, kPi / 4).f == doctest::Approx(oracle_value).epsilon(1e-14));
  }

  TEST_CASE("matches the literal formula and 50-digit values at random points") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> time(-20, 20);
    for (int i = 0; i < 500; ++i) {
      const ModelParams p = oracle::random_params(rng);
      const double t = time(rng);
      const double f = eval_f(p, t).f;
      CHECK(f == doctest::Approx(oracle::f_multiprecision(p, t)).epsilon(1e-12));
    }
  }

  TEST_CASE("ODE residual, positivity and period at random samples") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> time(-50, 50);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const ModelParams p = oracle::random_params(rng);
      const double t = time(rng);
      const NonstaticSample s = eval_f(p, t);
      const double w = p.omega;
      worst = std::max(worst, std::abs(s.fddot - s.fdot * s.fdot / (2 * s.f) +
                                       2 * w * w * (s.f - 1 / s.f)));
      CHECK(s.f >= f_min(p) * (1 - 1e-12));
      CHECK(s.f <= f_max(p) * (1 + 1e-12));
      CHECK(s.zeta * s.f * p.hbar == doctest::Approx(p.epsilon * p.omega).epsilon(1e-12));
      const double shifted = eval_f(p, t + kPi / w).f;
      CHECK(std::abs(shifted - s.f) <= 1e-10 * std::max(1.0, s.f));
    }
    CHECK(worst <= 1e-8);
  }

  TEST_CASE("derivatives agree with finite differences of the literal formula") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const ModelParams p = oracle::random_params(rng, 0.5, 5.0);
      const double t = 0.1 * i;
      const double h = 1e-5;
      const double fd = (oracle::f_literal(p, t + h) - oracle::f_literal(p, t - h)) / (2 * h);
      const double fdd = (oracle::f_literal(p, t + h) - 2 * oracle::f_literal(p, t) +
                          oracle::f_literal(p, t - h)) / (h * h);
      const NonstaticSample s = eval_f(p, t);
      CHECK(s.fdot == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
      CHECK(s.fddot == doctest::Approx(fdd).epsilon(1e-4).scale(10.0));
    }
  }

  TEST_CASE("closed form follows the nonlinear ODE integrated numerically") {
    for (auto [c1, c2] : {std::pair{5.0, 2.0}, {2.0, 1.0}, {10.0, 10.0}}) {
      const ModelParams p = make_params(c1, c2, 0.3);
      for (double t : {0.5, 2.0, 7.0}) {
        CHECK(oracle::ode_f(p, t) == doctest::Approx(eval_f(p, t).f).epsilon(1e-6));
      }
    }
  }

  TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(eval_f(make_params(0.5, 1.0), 0.0), ParameterError);
  }
}

TEST_SUITE("nonstaticity_measure") {
  TEST_CASE("D for three reference pairs") {
    CHECK(nonstaticity_measure(make_params(1, 1)) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(nonstaticity_measure(make_params(5, 2)) - 2.37) <= 0.005);
    CHECK(std::abs(nonstaticity_measure(make_params(1, 100)) - 35.70) <= 0.005);
  }

  TEST_CASE("zero only for the static pair") {
    CHECK(nonstaticity_measure(make_params(1.0001, 1)) > 0.0);
    CHECK(nonstaticity_measure(make_params(0.5, 2)) > 0.0);
  }
}

TEST_SUITE("phase_integral") {
  TEST_CASE("static limit and empty integral") {
    const ModelParams s = make_params(1, 1, 0.0, 1.0, 0.4);
    CHECK(phase_integral(s, 3.4) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(phase_integral(make_params(5, 2), 0.0) == 0.0);
  }

  TEST_CASE("t before t0 is a domain error") {
    CHECK_THROWS_AS(phase_integral(make_params(5, 2, 0, 1, 1.0), 0.5), DomainError);
  }

  TEST_CASE("T(2 pi) for (5, 2) against Gauss-Kronrod") {
    const ModelParams p = make_params(5, 2);
    const double reference = oracle::integral_inverse_f(p, 0.0, 2 * kPi);
    // A full pi-period advances T by exactly pi/omega.
    CHECK(reference == doctest::Approx(2 * kPi).epsilon(1e-12));
    CHECK(std::abs(phase_integral(p, 2 * kPi) - reference) <= 1e-8);
  }

  TEST_CASE("closed form vs quadrature over random parameters and times") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> offset(0.0, 20.0);
    for (int i = 0; i < 40; ++i) {
      ModelParams p = oracle::random_params(rng, 0.2, 30.0);
      p.t0 = offset(rng) - 10.0;
      const double t = p.t0 + offset(rng);
      CHECK(std::abs(phase_integral(p, t) - oracle::integral_inverse_f(p, p.t0, t)) <= 1e-8);
    }
  }

  TEST_CASE("phi at the edge of its range") {
    const ModelParams p = make_params(5, 2, -kPi / 2);
    for (double t : {0.0, 0.1, 1.0, kPi, 9.0}) {
      CHECK(std::abs(phase_integral(p, t) - oracle::integral_inverse_f(p, 0.0, t)) <= 1e-8);
    }
  }

  TEST_CASE("strictly increasing across branch points") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.05, 100.0);
      double prev = phase_integral(p, p.t0);
      for (int k = 1; k <= 4000; ++k) {
        const double t = p.t0 + k * (3 * kPi / p.omega) / 4000;
        const double cur = phase_integral(p, t);
        CHECK(cur > prev);
        prev = cur;
      }
    }
  }

  TEST_CASE("exactly at a pole of the tangent") {
    // x = omega (t - t0) + phi = pi/2 at t = pi/2 for phi = 0, omega = 1.
    const ModelParams p = make_params(5, 2);
    const double at = phase_integral(p, kPi / 2);
    CHECK(std::abs(at - oracle::integral_inverse_f(p, 0, kPi / 2)) <= 1e-8);
    CHECK(std::abs(phase_integral(p, kPi / 2 - 1e-12) - at) <= 1e-9);
    CHECK(std::abs(phase_integral(p, kPi / 2 + 1e-12) - at) <= 1e-9);
  }
}

TEST_SUITE("amplitude") {
  TEST_CASE("initial value and static rotation") {
    const ModelParams p = make_params(5, 2);
    const CoherentAmplitude a = amplitude(p, 1.5, 0.7, 0.0);
    CHECK(std::abs(a.value - std::polar(1.5, -0.7)) <= 1e-15);
    const ModelParams s = make_params(1, 1);
    for (double t : {0.0, 1.0, 7.5}) {
      CHECK(std::abs(amplitude(s, 2.0, 0.0, t).value - std::polar(2.0, -t)) <= 1e-12);
    }
  }

  TEST_CASE("negative modulus is a domain error") {
    CHECK_THROWS_AS(amplitude(make_params(1, 1), -0.1, 0.0, 0.0), DomainError);
  }

  TEST_CASE("modulus is constant") {
    std::mt19937_64 rng(13);
    const ModelParams p = make_params(5, 2);
    std::uniform_real_distribution<double> time(0.0, 10 * 2 * kPi);
    for (int i = 0; i < 1000; ++i) {
      CHECK(std::abs(std::abs(amplitude(p, 1.3, 0.2, time(rng)).value) - 1.3) <= 1e-10);
    }
  }

  TEST_CASE("phase rate equals -omega / f") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      const ModelParams p = oracle::random_params(rng, 0.3, 10.0);
      for (int k = 1; k < 50; ++k) {
        const double t = p.t0 + 0.13 * k;
        const double h = 1e-5;
        const auto a = amplitude(p, 1.0, 0.0, t + h).value;
        const auto b = amplitude(p, 1.0, 0.0, t - h).value;
        const double rate = std::arg(a / b) / (2 * h);
        CHECK(std::abs(rate + p.omega / oracle::f_literal(p, t)) <= 1e-6 * std::max(1.0, p.omega / oracle::f_literal(p, t)));
      }
    }
  }

  TEST_CASE("phase is continuous on a fine grid") {
    const ModelParams p = make_params(1, 100);
    const double step = kPi / (4 * p.omega * f_max(p)) / 2;
    auto prev = amplitude(p, 1.0, 0.0, 0.0).value;
    for (int k = 1; k < 20000; ++k) {
      const auto cur = amplitude(p, 1.0, 0.0, k * step).value;
      CHECK(std::abs(std::arg(cur / prev)) < kPi / 2);
      prev = cur;
    }
  }
}

TEST_SUITE("amplitude_from_classical") {
  TEST_CASE("vacuum and static limits") {
    CHECK(amplitude_from_classical(make_params(5, 2), {0.0, 0.3}, 1.0).A0 == 0.0);
    const auto a = amplitude_from_classical(make_params(1, 1), {std::sqrt(2.0), 0.0}, 0.0);
    CHECK(a.A0 == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("modulus of the direct form equals the simple form at random times") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> time(-10.0, 30.0);
    for (int trial = 0; trial < 5; ++trial) {
      const ModelParams p = trial == 0 ? make_params(5, 2) : oracle::random_params(rng);
      const ClassicalState cl{trial == 0 ? 1.0 : 0.3 + trial, trial == 0 ? 0.0 : 0.4 * trial};
      const double expected = classical_modulus(p, cl);
      for (int i = 0; i < 100; ++i) {
        CHECK(std::abs(amplitude_from_classical(p, cl, time(rng)).A0 - expected) <= 1e-10 * std::max(1.0, expected));
      }
    }
  }

  TEST_CASE("agrees with the phase-integral route once theta is fitted at t0") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      ModelParams p = oracle::random_params(rng, 0.3, 15.0);
      p.t0 = 0.7;
      const ClassicalState cl{1.1, 0.3 * trial};
      const CoherentAmplitude start = amplitude_from_classical(p, cl, p.t0);
      for (int k = 0; k < 60; ++k) {
        const double t = p.t0 + 0.21 * k;
        const auto direct = amplitude_from_classical(p, cl, t).value;
        const auto evolved = amplitude(p, start.A0, start.theta, t).value;
        CHECK(std::abs(direct - evolved) <= 1e-9 * std::max(1.0, start.A0));
      }
    }
  }
}

TEST_SUITE("critical_times") {
  TEST_CASE("static case has none") {
    CHECK(critical_times(make_params(1, 1), 0.0, 10.0).empty());
    CHECK(critical_times(make_params(5, 2), 1.0, 1.0).empty());
  }

  TEST_CASE("(5, 2): spacing, alternation and accuracy") {
    const ModelParams p = make_params(5, 2);
    const auto roots = critical_times(p, 0.0, 4 * kPi);
    REQUIRE(roots.size() == 8);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      // tan(2x) = 2 c3 / (c2 - c1) fixes the roots independently.
      const double x = roots[i].t;
      CHECK(std::abs(std::sin(2 * x) * (p.c1 - p.c2) + 2 * p.c3() * std::cos(2 * x)) <= 1e-12 * 10);
      const double f0 = oracle::f_literal(p, x);
      if (roots[i].kind == CriticalKind::kNode) {
        CHECK(f0 == doctest::Approx(f_min(p)).epsilon(1e-12));
      } else {
        CHECK(f0 == doctest::Approx(f_max(p)).epsilon(1e-12));
      }
      if (i > 0) {
        CHECK(roots[i].t - roots[i - 1].t == doctest::Approx(kPi / 2).epsilon(1e-10));
        CHECK(roots[i].kind != roots[i - 1].kind);
      }
    }
  }

  TEST_CASE("roots against the analytic solution for random parameters") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const ModelParams p = oracle::random_params(rng);
      const double delta = std::atan2(2 * p.c3(), p.c1 - p.c2);  // fdot ~ sin(2x + delta)
      const auto roots = critical_times(p, p.t0, p.t0 + 2 * kPi / p.omega);
      CHECK(roots.size() >= 4);
      for (const CriticalTime& r : roots) {
        const double x = p.omega * (r.t - p.t0) + p.phi;
        const double k = std::round((2 * x + delta) / kPi);
        const double exact_x = (k * kPi - delta) / 2;
        CHECK(std::abs(x - exact_x) / p.omega <= 1e-10);
        CHECK(eval_f(p, r.t).kind == r.kind);
      }
    }
  }

  TEST_CASE("belly-aligned theta puts the displacement peak on a belly") {
    const ModelParams p = make_params(4, 1);
    const double theta = belly_aligned_theta(p);
    for (const CriticalTime& c : critical_times(p, 0.0, 2 * kPi)) {
      const auto A = amplitude(p, 1.0, theta, c.t).value;
      if (c.kind == CriticalKind::kBelly) {
        CHECK(std::abs(A.imag()) <= 1e-10);
      } else {
        CHECK(std::abs(A.real()) <= 1e-10);
      }
    }
    CHECK_THROWS_AS(belly_aligned_theta(make_params(1, 1)), DomainError);
  }
}

TEST_CASE("time_grid endpoints and errors") {
  const auto t = time_grid(0.0, 1.0, 11);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 1.0);
  CHECK(t[5] == doctest::Approx(0.5));
  CHECK_THROWS_AS(time_grid(0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(time_grid(1.0, 1.0, 5), DomainError);
}
