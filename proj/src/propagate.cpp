#include "xgate/propagate.hpp"

#include <cmath>
#include <stdexcept>

namespace xgate {

namespace {

const complexd kI(0.0, 1.0);

// Running product split along the conserved-S_z blocks: two corner phases
// and the central 2x2 block.
struct BlockState {
  complexd up{1.0, 0.0};
  complexd dn{1.0, 0.0};
  Matrix2cd central = Matrix2cd::Identity();

  Matrix4cd assemble() const {
    Matrix4cd u = Matrix4cd::Zero();
    u(0, 0) = up;
    u(3, 3) = dn;
    u.block<2, 2>(1, 1) = central;
    return u;
  }
};

// Exact exp(-i h dt) for the central block h = c0*I + cx*sigma_x + cz*sigma_z.
Matrix2cd central_exp(double c0, double cx, double cz, double dt) {
  const double r = std::hypot(cx, cz);
  const complexd common = std::polar(1.0, -c0 * dt);
  Matrix2cd m;
  if (r == 0.0) {
    m << common, 0.0, 0.0, common;
    return m;
  }
  const double theta = r * dt;
  const double c = std::cos(theta);
  const complexd sx = -kI * std::sin(theta) * (cx / r);
  const complexd sz = -kI * std::sin(theta) * (cz / r);
  m << common * (c + sz), common * sx, common * sx, common * (c - sz);
  return m;
}

// Central-block generator coefficients at exchange value j:
// h_c = -(j/2) I - dB sigma_z + (j/2) sigma_x.
struct CentralCoeffs {
  double c0, cx, cz;
};

CentralCoeffs central_coeffs(const PulseParams& p, double j) {
  return {-0.5 * j, 0.5 * j, -p.dB};
}

template <typename Recorder>
Matrix4cd run_propagation(const PulseParams& p, double t0, double t1, int steps, Scheme scheme,
                          Recorder&& record) {
  if (steps < 1) throw std::invalid_argument("propagate: steps must be >= 1");
  if (!(t1 >= t0)) throw std::invalid_argument("propagate: interval must have t1 >= t0");
  const double dt = (t1 - t0) / steps;

  BlockState state;
  record(0, state);

  // The corner generators are +-B, time independent.
  const complexd corner_up = std::polar(1.0, -p.B * dt);
  const complexd corner_dn = std::polar(1.0, p.B * dt);

  // Gauss nodes and weights of the two-exponential order-4 scheme.
  const double root3 = std::sqrt(3.0);
  const double c1 = 0.5 - root3 / 6.0;
  const double c2 = 0.5 + root3 / 6.0;
  const double w1 = 0.25 - root3 / 6.0;
  const double w2 = 0.25 + root3 / 6.0;

  for (int k = 0; k < steps; ++k) {
    const double ta = t0 + k * dt;
    Matrix2cd step;
    switch (scheme) {
      case Scheme::MidpointExponential: {
        const auto cc = central_coeffs(p, exchange_at(p, ta + 0.5 * dt));
        step = central_exp(cc.c0, cc.cx, cc.cz, dt);
        break;
      }
      case Scheme::CommutatorFree4: {
        const double j1 = exchange_at(p, ta + c1 * dt);
        const double j2 = exchange_at(p, ta + c2 * dt);
        // exp(-i dt (w1 H1 + w2 H2)) * exp(-i dt (w2 H1 + w1 H2)), the
        // later-time-weighted factor on the left.
        const auto ca = central_coeffs(p, 2.0 * (w2 * j1 + w1 * j2));
        const auto cb = central_coeffs(p, 2.0 * (w1 * j1 + w2 * j2));
        const Matrix2cd first = central_exp(0.5 * ca.c0, 0.5 * ca.cx, 0.5 * ca.cz, dt);
        const Matrix2cd second = central_exp(0.5 * cb.c0, 0.5 * cb.cx, 0.5 * cb.cz, dt);
        step = second * first;
        break;
      }
    }
    state.central = step * state.central;
    state.up *= corner_up;
    state.dn *= corner_dn;
    record(k + 1, state);
  }
  return state.assemble();
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::MidpointExponential: return "midpoint";
    case Scheme::CommutatorFree4: return "cf4";
  }
  return "?";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
  if (name == "midpoint") return Scheme::MidpointExponential;
  if (name == "cf4") return Scheme::CommutatorFree4;
  return std::nullopt;
}

int default_steps(const PulseParams& p, double t_end) {
  const double hnorm = std::abs(p.B) + std::abs(p.dB) + 2.0 * std::abs(p.J0);
  const double needed = t_end * hnorm / 0.05;
  if (!(needed >= 1.0)) return 1;
  if (needed > 5e7) throw std::invalid_argument("propagate: configuration needs too many steps");
  return static_cast<int>(std::ceil(needed));
}

Matrix4cd propagate_interval(const PulseParams& p, double t0, double t1, int steps,
                             Scheme scheme) {
  return run_propagation(p, t0, t1, steps, scheme, [](int, const BlockState&) {});
}

Unitary4 propagate(const PulseParams& p, const PropagatorConfig& config) {
  const int steps = config.steps > 0 ? config.steps : default_steps(p, config.t_end);
  return Unitary4(propagate_interval(p, 0.0, config.t_end, steps, config.scheme));
}

EvolutionTrace propagate_trace(const PulseParams& p, const PropagatorConfig& config) {
  const int steps = config.steps > 0 ? config.steps : default_steps(p, config.t_end);
  EvolutionTrace trace;
  trace.times.reserve(steps + 1);
  trace.unitaries.reserve(steps + 1);
  run_propagation(p, 0.0, config.t_end, steps, config.scheme,
                  [&](int k, const BlockState& s) {
                    trace.times.push_back(config.t_end * k / steps);
                    trace.unitaries.emplace_back(s.assemble());
                  });
  return trace;
}

EvolutionTrace to_rotating_frame(const EvolutionTrace& trace, const PulseParams& p) {
  EvolutionTrace out;
  out.times = trace.times;
  out.unitaries.reserve(trace.unitaries.size());
  for (std::size_t k = 0; k < trace.unitaries.size(); ++k) {
    const Matrix4cd r = rotating_frame_at(p, trace.times[k]);
    out.unitaries.emplace_back(Matrix4cd(r * trace.unitaries[k].matrix()));
  }
  return out;
}

double step_doubling_delta(const PulseParams& p, const PropagatorConfig& config) {
  const int steps = config.steps > 0 ? config.steps : default_steps(p, config.t_end);
  const Matrix4cd coarse = propagate_interval(p, 0.0, config.t_end, steps, config.scheme);
  const Matrix4cd fine = propagate_interval(p, 0.0, config.t_end, 2 * steps, config.scheme);
  return (fine - coarse).cwiseAbs().maxCoeff();
}

}  // namespace xgate
