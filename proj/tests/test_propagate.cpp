#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "xgate/equiv.hpp"
#include "xgate/propagate.hpp"

#include <cmath>
#include <numbers>

using namespace xgate;

namespace {

constexpr double kPi = std::numbers::pi;

const PulseParams kFig2{1000.0, -100.0, 20.0, 20.0, 200.0};

}  // namespace

TEST_CASE("propagate over an empty window is the identity") {
  const Unitary4 u = propagate(kFig2, PropagatorConfig{0.0, 0, Scheme::MidpointExponential});
  CHECK((u.matrix() - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("static exchange reduces to the constant-Hamiltonian evolution") {
  PulseParams p = kFig2;
  p.J1 = 0.0;
  const double t_end = 0.9;
  const Unitary4 u = propagate(p, PropagatorConfig{t_end});
  const Matrix4cd closed = hermitian_exp(hamiltonian_at(p, 0.0), t_end);
  CHECK((u.matrix() - closed).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("midpoint steps agree with the series-exponential oracle") {
  const double t_end = 0.02;
  const int steps = 40;
  const Matrix4cd fast = propagate_interval(kFig2, 0.0, t_end, steps);
  Matrix4cd slow = Matrix4cd::Identity();
  const double dt = t_end / steps;
  for (int k = 0; k < steps; ++k) {
    const Matrix4cd h = hamiltonian_at(kFig2, (k + 0.5) * dt);
    slow = oracles::series_unitary_exp(h, dt) * slow;
  }
  CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("trace endpoint equals propagate exactly and the grid is uniform") {
  const PropagatorConfig config{0.25, 500, Scheme::MidpointExponential};
  const EvolutionTrace trace = propagate_trace(kFig2, config);
  const Unitary4 direct = propagate(kFig2, config);
  REQUIRE(trace.unitaries.size() == 501);
  CHECK((trace.unitaries.back().matrix() - direct.matrix()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((trace.unitaries.front().matrix() - Matrix4cd::Identity()).cwiseAbs().maxCoeff() == 0.0);
  const double dt = config.t_end / config.steps;
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    CHECK(trace.times[k] == doctest::Approx(k * dt).epsilon(1e-13));
  }
}

TEST_CASE("every recorded point is unitary and conserves the S_z blocks") {
  const EvolutionTrace trace = propagate_trace(kFig2, PropagatorConfig{0.4, 2000});
  for (const auto& u : trace.unitaries) {
    CHECK(unitarity_error(u.matrix()) < 1e-10);
    CHECK(std::abs(std::abs(u.matrix()(0, 0)) - 1.0) < 1e-9);
    CHECK(std::abs(std::abs(u.matrix()(3, 3)) - 1.0) < 1e-9);
    CHECK(std::abs(u.matrix()(0, 1)) == 0.0);
    CHECK(std::abs(u.matrix()(1, 0)) == 0.0);
    CHECK(std::abs(u.matrix()(2, 3)) == 0.0);
  }
}

TEST_CASE("midpoint scheme converges at order two") {
  const double t_end = 0.5;
  const Matrix4cd ref = propagate_interval(kFig2, 0.0, t_end, 64000);
  const double e1 = (propagate_interval(kFig2, 0.0, t_end, 2000) - ref).cwiseAbs().maxCoeff();
  const double e2 = (propagate_interval(kFig2, 0.0, t_end, 4000) - ref).cwiseAbs().maxCoeff();
  const double order = std::log2(e1 / e2);
  CHECK(order > 1.8);
  CHECK(order < 2.2);
}

TEST_CASE("cf4 scheme converges at order four and beats midpoint") {
  const double t_end = 0.5;
  const Matrix4cd ref = propagate_interval(kFig2, 0.0, t_end, 32000, Scheme::CommutatorFree4);
  const double e1 =
      (propagate_interval(kFig2, 0.0, t_end, 500, Scheme::CommutatorFree4) - ref)
          .cwiseAbs()
          .maxCoeff();
  const double e2 =
      (propagate_interval(kFig2, 0.0, t_end, 1000, Scheme::CommutatorFree4) - ref)
          .cwiseAbs()
          .maxCoeff();
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.5);
  CHECK(order < 4.5);

  const double e_mid =
      (propagate_interval(kFig2, 0.0, t_end, 1000, Scheme::MidpointExponential) - ref)
          .cwiseAbs()
          .maxCoeff();
  CHECK(e2 < 0.01 * e_mid);
}

TEST_CASE("propagation composes phase-coherently across a split") {
  const double t_end = 0.6;
  const int steps = 4096;
  const Matrix4cd whole = propagate_interval(kFig2, 0.0, t_end, steps);
  const Matrix4cd first = propagate_interval(kFig2, 0.0, 0.5 * t_end, steps / 2);
  const Matrix4cd second = propagate_interval(kFig2, 0.5 * t_end, t_end, steps / 2);
  CHECK((second * first - whole).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("step doubling contracts at the expected rate") {
  // At the default 0.05-rad step bound the endpoint moves by ~1e-5 under
  // doubling; each further doubling contracts the delta by ~4x (order 2),
  // so 32x the default steps lands below 1e-8.
  const int base = default_steps(kFig2, 1.1);
  const double d1 = step_doubling_delta(kFig2, PropagatorConfig{1.1, base});
  CHECK(d1 < 3e-5);
  const double d2 = step_doubling_delta(kFig2, PropagatorConfig{1.1, 2 * base});
  CHECK(d2 < 0.3 * d1);
  const double d32 = step_doubling_delta(kFig2, PropagatorConfig{1.1, 32 * base});
  CHECK(d32 < 1e-8);
}

TEST_CASE("rotating frame transform: identity at t = 0, exact cancellation for J = 0") {
  PulseParams zeeman_only = kFig2;
  zeeman_only.J0 = 0.0;
  zeeman_only.J1 = 0.0;
  const EvolutionTrace lab = propagate_trace(zeeman_only, PropagatorConfig{0.5, 1000});
  const EvolutionTrace rot = to_rotating_frame(lab, zeeman_only);
  CHECK((rot.unitaries.front().matrix() - lab.unitaries.front().matrix())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  for (const auto& u : rot.unitaries) {
    CHECK((u.matrix() - Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("far-detuned rotating evolution peaks near the first gate time") {
  // omega = 400 with J0 = J1 = 20: the first root of
  // J0 t + (J1/omega) sin(omega t) = pi sits at pi/20.
  PulseParams p = kFig2;
  p.omega = 400.0;
  const double tau0 = oracles::bisect(
      [&](double t) { return p.J0 * t + (p.J1 / p.omega) * std::sin(p.omega * t) - kPi; }, 0.01,
      0.3);
  CHECK(tau0 == doctest::Approx(kPi / 20.0).epsilon(1e-9));

  const int points = 3000;
  const double t_end = 0.25;
  const EvolutionTrace rot =
      to_rotating_frame(propagate_trace(p, PropagatorConfig{t_end, points}), p);
  Matrix4cd target = Matrix4cd::Identity();
  target(1, 1) = complexd(0.0, 1.0);
  target(2, 2) = complexd(0.0, 1.0);

  double best_t = 0.0, best_f = 0.0;
  for (std::size_t k = 0; k < rot.unitaries.size(); ++k) {
    const double f = fidelity(target, rot.unitaries[k].matrix());
    if (f > best_f) {
      best_f = f;
      best_t = rot.times[k];
    }
  }
  CHECK(best_f > 0.99);
  CHECK(std::abs(best_t - tau0) < 2e-3);
}

TEST_CASE("default_steps respects the step bound") {
  const int n = default_steps(kFig2, 1.0);
  const double hnorm = 1000.0 + 100.0 + 40.0;
  CHECK(n >= static_cast<int>(hnorm / 0.05));
  CHECK(default_steps(kFig2, 0.0) == 1);
}

TEST_CASE("scheme names round-trip") {
  CHECK(scheme_from_string("midpoint") == Scheme::MidpointExponential);
  CHECK(scheme_from_string("cf4") == Scheme::CommutatorFree4);
  CHECK_FALSE(scheme_from_string("rk4").has_value());
}
