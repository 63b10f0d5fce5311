#pragma once

#include "xgate/matrix.hpp"

namespace xgate {

/// Makhlin local invariants of a two-qubit unitary. G1 is complex in
/// general; the imaginary part of G2 vanishes for unitary input and is
/// checked, then discarded. Anchor values: identity (1, 3), CZ (0, 1),
/// iSWAP (0, -1).
struct InvariantPair {
  complexd g1;
  double g2 = 0.0;
};

enum class GateKind { Identity, Cz, Iswap, Other };

const char* to_string(GateKind k);

/// Result of classifying a unitary against the three anchor invariant
/// pairs. `distance` is max(|G1 - G1*|, |G2 - G2*|) to the nearest class,
/// reported even when the verdict is Other.
struct GateClass {
  GateKind kind = GateKind::Other;
  double distance = 0.0;
};

/// Average gate fidelity F = (d + |Tr(ideal^dag actual)|^2) / (d(d+1)) with
/// d = 4. Invariant under a global phase of either argument; symmetric;
/// range [0.2, 1] for unitary arguments.
inline double fidelity(const Matrix4cd& ideal, const Matrix4cd& actual) {
  const complexd tr = (ideal.adjoint() * actual).trace();
  return (4.0 + std::norm(tr)) / 20.0;
}

/// The magic (Bell) basis transform Q used by makhlin_invariants.
const Matrix4cd& magic_basis();

/// Makhlin invariants via the magic-basis form m = (Q^dag U Q)^T (Q^dag U Q):
///   G1 = tr(m)^2 / (16 det U),   G2 = (tr(m)^2 - tr(m^2)) / (4 det U).
/// Determinant-normalized, so plain U(4) input is fine. Invariant under
/// single-qubit operations on either side and under global phase.
InvariantPair makhlin_invariants(const Unitary4& u);

/// Nearest of {Identity, CZ, iSWAP} if within tol in both invariants, else
/// Other. Ties break to the smaller distance, then to the listed order.
GateClass classify_gate(const Unitary4& u, double tol = 1e-6);

}  // namespace xgate
