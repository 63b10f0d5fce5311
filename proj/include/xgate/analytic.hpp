#pragma once

#include "xgate/equiv.hpp"
#include "xgate/model.hpp"

#include <optional>
#include <string_view>

namespace xgate {

/// The canonical target-gate families. The four *_res families live in the
/// lab frame and depend on the gate time; the non-resonant CZs and the
/// constant-exchange CZ are fixed diagonal gates in the rotating frame.
enum class GateFamily {
  CzResPlus,
  CzResMinus,
  IswapPlus,
  IswapMinus,
  CzNresPlus,
  CzNresMinus,
  CzConst,
};

const char* to_string(GateFamily f);
std::optional<GateFamily> family_from_string(std::string_view name);

/// Lab-frame family (time-dependent target) vs rotating-frame family
/// (constant diagonal target).
inline bool is_resonant_family(GateFamily f) {
  return f == GateFamily::CzResPlus || f == GateFamily::CzResMinus ||
         f == GateFamily::IswapPlus || f == GateFamily::IswapMinus;
}

/// a_pm(t) = ((J0 +- omega) t + (J1/omega) sin(omega t)) / 2.
/// `sign` must be +1 or -1.
double phase_a(const PulseParams& p, double t, int sign);

/// Closed-form resonant-drive evolution: corner phases exp(-+ i B t) and a
/// central block that Rabi-rotates at J1/4 dressed with the a_pm phases.
/// The dressing follows the signed resonance omega = 2 dB, so for dB < 0
/// the |ud> row carries a_- and the |du> row a_+ (the drive itself is even
/// in omega). Valid near |omega| = 2|dB| with J0, J1 << omega; validity is
/// advisory (see rwa_validity / on_resonance), never enforced here.
Unitary4 u_res(const PulseParams& p, double t);

/// Closed-form far-detuned evolution in the rotating frame:
/// diag(1, exp(iA/2), exp(iA/2), 1) with A(t) = J0 t + (J1/omega) sin(omega t).
Unitary4 u_nonres(const PulseParams& p, double t);

/// The family's target matrix at gate time t. The *_res families carry the
/// corner phases exp(-+ i B t) and central phases exp(+- i omega t / 2) with
/// the same signed omega as u_res; the nres/const families are
/// diag(1, +-i, +-i, 1) independent of t.
Unitary4 target_gate(GateFamily family, double t, const PulseParams& p);

/// Makhlin invariants of u_res from the closed forms
///   alpha = exp(-i (J0 t + (J1/omega) sin(omega t))),  beta = cos(J1 t / 2),
///   G1 = alpha (1 + beta/alpha)^2 / 4,  G2 = (alpha + 1/alpha)/2 + 2 beta.
InvariantPair res_invariants(const PulseParams& p, double t);

/// Makhlin invariants of u_nonres:
///   G1 = cos^2(J0 t/2 + (J1/2omega) sin(omega t)),
///   G2 = 2 + cos(J0 t + (J1/omega) sin(omega t)).
InvariantPair nonres_invariants(const PulseParams& p, double t);

}  // namespace xgate
