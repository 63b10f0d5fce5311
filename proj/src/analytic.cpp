#include "xgate/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace xgate {

namespace {

const complexd kI(0.0, 1.0);

// The resonant-drive derivation rotates against the gradient term, so the
// bookkeeping frequency carries the sign of dB; the drive itself is even in
// omega. For dB < 0 this swaps which central row is dressed with a_+.
double signed_omega(const PulseParams& p) { return p.dB < 0.0 ? -p.omega : p.omega; }

}  // namespace

const char* to_string(GateFamily f) {
  switch (f) {
    case GateFamily::CzResPlus: return "cz_res_plus";
    case GateFamily::CzResMinus: return "cz_res_minus";
    case GateFamily::IswapPlus: return "iswap_plus";
    case GateFamily::IswapMinus: return "iswap_minus";
    case GateFamily::CzNresPlus: return "cz_nres_plus";
    case GateFamily::CzNresMinus: return "cz_nres_minus";
    case GateFamily::CzConst: return "cz_const";
  }
  return "?";
}

std::optional<GateFamily> family_from_string(std::string_view name) {
  for (GateFamily f : {GateFamily::CzResPlus, GateFamily::CzResMinus, GateFamily::IswapPlus,
                       GateFamily::IswapMinus, GateFamily::CzNresPlus, GateFamily::CzNresMinus,
                       GateFamily::CzConst}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

double phase_a(const PulseParams& p, double t, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("phase_a: sign must be +1 or -1");
  return 0.5 * ((p.J0 + sign * p.omega) * t + (p.J1 / p.omega) * std::sin(p.omega * t));
}

Unitary4 u_res(const PulseParams& p, double t) {
  const double ws = signed_omega(p);
  const double drive = 0.5 * (p.J1 / p.omega) * std::sin(p.omega * t);
  const double ap = 0.5 * (p.J0 + ws) * t + drive;
  const double am = 0.5 * (p.J0 - ws) * t + drive;
  const double c = std::cos(0.25 * p.J1 * t);
  const double s = std::sin(0.25 * p.J1 * t);
  Matrix4cd u = Matrix4cd::Zero();
  u(0, 0) = std::polar(1.0, -p.B * t);
  u(1, 1) = std::polar(1.0, ap) * c;
  u(1, 2) = -kI * std::polar(1.0, ap) * s;
  u(2, 1) = -kI * std::polar(1.0, am) * s;
  u(2, 2) = std::polar(1.0, am) * c;
  u(3, 3) = std::polar(1.0, p.B * t);
  return Unitary4(u);
}

Unitary4 u_nonres(const PulseParams& p, double t) {
  const double a = p.J0 * t + (p.J1 / p.omega) * std::sin(p.omega * t);
  Matrix4cd u = Matrix4cd::Zero();
  u(0, 0) = 1.0;
  u(1, 1) = std::polar(1.0, 0.5 * a);
  u(2, 2) = std::polar(1.0, 0.5 * a);
  u(3, 3) = 1.0;
  return Unitary4(u);
}

Unitary4 target_gate(GateFamily family, double t, const PulseParams& p) {
  Matrix4cd u = Matrix4cd::Zero();
  switch (family) {
    case GateFamily::CzResPlus:
    case GateFamily::CzResMinus: {
      const complexd sgn = (family == GateFamily::CzResPlus) ? kI : -kI;
      const double ws = signed_omega(p);
      u(0, 0) = std::polar(1.0, -p.B * t);
      u(1, 1) = sgn * std::polar(1.0, 0.5 * ws * t);
      u(2, 2) = sgn * std::polar(1.0, -0.5 * ws * t);
      u(3, 3) = std::polar(1.0, p.B * t);
      break;
    }
    case GateFamily::IswapPlus:
    case GateFamily::IswapMinus: {
      const complexd sgn = (family == GateFamily::IswapPlus) ? kI : -kI;
      const double ws = signed_omega(p);
      u(0, 0) = std::polar(1.0, -p.B * t);
      u(1, 2) = sgn * std::polar(1.0, 0.5 * ws * t);
      u(2, 1) = sgn * std::polar(1.0, -0.5 * ws * t);
      u(3, 3) = std::polar(1.0, p.B * t);
      break;
    }
    case GateFamily::CzNresPlus:
    case GateFamily::CzConst:
      u(0, 0) = 1.0;
      u(1, 1) = kI;
      u(2, 2) = kI;
      u(3, 3) = 1.0;
      break;
    case GateFamily::CzNresMinus:
      u(0, 0) = 1.0;
      u(1, 1) = -kI;
      u(2, 2) = -kI;
      u(3, 3) = 1.0;
      break;
  }
  return Unitary4(u);
}

InvariantPair res_invariants(const PulseParams& p, double t) {
  const double phase = p.J0 * t + (p.J1 / p.omega) * std::sin(p.omega * t);
  const complexd alpha = std::polar(1.0, -phase);
  const double beta = std::cos(0.5 * p.J1 * t);
  const complexd g1 = 0.25 * alpha * std::pow(1.0 + beta / alpha, 2);
  const complexd g2 = 0.5 / alpha + 0.5 * alpha + 2.0 * beta;
  return {g1, g2.real()};
}

InvariantPair nonres_invariants(const PulseParams& p, double t) {
  const double half = 0.5 * (p.J0 * t + (p.J1 / p.omega) * std::sin(p.omega * t));
  const double c = std::cos(half);
  return {complexd(c * c, 0.0), 2.0 + std::cos(2.0 * half)};
}

}  // namespace xgate
