#pragma once

#include "xgate/analytic.hpp"

#include <optional>
#include <vector>

namespace xgate {

/// A solved resonant gate recipe: tau is the smallest positive root of
///   J0 tau + (2 m pi / (omega tau)) sin(omega tau) = n pi
/// with the drive amplitude J1 = 2 m pi / tau kept within J1 <= J0.
/// (n odd, m even) recipes are CZ-class, (n even, m odd) are iSWAP-class;
/// the sign is fixed by the parity bookkeeping n = 1 + 2 n1, m = 2 m1
/// (CZ+ for n1 + m1 even) and n = 2 n2, m = 1 + 2 m2 (iSWAP+ for n2 + m2
/// odd), validated against the signed targets.
struct GateSolutionRes {
  int n = 0;
  int m = 0;
  double tau = 0.0;       ///< gate time, us
  double j1 = 0.0;        ///< drive amplitude 2 m pi / tau, rad/us
  GateFamily family = GateFamily::CzResPlus;
  double residual = 0.0;  ///< |f(tau)| of the gate condition
};

/// A solved non-resonant (far-detuned) gate recipe: tau_n is the unique
/// root of J0 tau + (J1/omega) sin(omega tau) = (2n + 1) pi.
struct GateSolutionNres {
  int n = 0;
  double tau = 0.0;
  GateFamily family = GateFamily::CzNresPlus;  ///< plus for n even, minus for n odd
  double residual = 0.0;
};

/// Gate family selected by the (n, m) parity rules, or nothing when the
/// parity corresponds to neither a CZ nor an iSWAP recipe.
std::optional<GateFamily> resonant_family(int n, int m);

/// Solve the resonant gate conditions for given integers (n, m). Returns
/// the smallest positive root compatible with J1 <= J0, or nothing when no
/// such root exists in the search window or the parity selects no gate.
std::optional<GateSolutionRes> solve_resonant(double J0, double omega, int n, int m,
                                              double tol = 1e-12);

enum class GateKindFilter { All, Cz, Iswap };

/// All valid recipes with n <= max_n, m <= max_m, sorted ascending by tau
/// (ties by (n, m) lexicographic).
std::vector<GateSolutionRes> enumerate_resonant(double J0, double omega,
                                                GateKindFilter filter = GateKindFilter::All,
                                                int max_n = 20, int max_m = 8);

/// Solve the non-resonant gate condition for index n >= 0. A solution
/// always exists for J0 > 0, |J1| <= J0; the left-hand side is
/// non-decreasing, so the root is unique.
GateSolutionNres solve_nonresonant(double J0, double J1, double omega, int n,
                                   double tol = 1e-12);

}  // namespace xgate
