#include "xgate/equiv.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xgate {

const char* to_string(GateKind k) {
  switch (k) {
    case GateKind::Identity: return "identity";
    case GateKind::Cz: return "cz";
    case GateKind::Iswap: return "iswap";
    case GateKind::Other: return "other";
  }
  return "other";
}

const Matrix4cd& magic_basis() {
  static const Matrix4cd q = [] {
    const double s = 1.0 / std::sqrt(2.0);
    const complexd i(0.0, 1.0);
    Matrix4cd m;
    // Columns: (|uu> + |dd>)/sqrt2, -i(|uu> - |dd>)/sqrt2,
    //          (|ud> - |du>)/sqrt2, -i(|ud> + |du>)/sqrt2.
    m << s, -i * s, 0.0, 0.0,
         0.0, 0.0, s, -i * s,
         0.0, 0.0, -s, -i * s,
         s, i * s, 0.0, 0.0;
    return m;
  }();
  return q;
}

InvariantPair makhlin_invariants(const Unitary4& u) {
  const Matrix4cd& q = magic_basis();
  const Matrix4cd ub = q.adjoint() * u.matrix() * q;
  const Matrix4cd m = ub.transpose() * ub;
  const complexd tr = m.trace();
  const complexd tr2 = (m * m).trace();
  const complexd det = u.matrix().determinant();
  const complexd g1 = tr * tr / (16.0 * det);
  const complexd g2 = (tr * tr - tr2) / (4.0 * det);
  if (!(std::abs(g2.imag()) <= 1e-9)) {
    throw std::runtime_error("makhlin_invariants: Im(G2) exceeds tolerance; input not unitary?");
  }
  return {g1, g2.real()};
}

GateClass classify_gate(const Unitary4& u, double tol) {
  const InvariantPair inv = makhlin_invariants(u);
  struct Anchor {
    GateKind kind;
    complexd g1;
    double g2;
  };
  static const std::array<Anchor, 3> anchors = {{
      {GateKind::Identity, complexd(1.0, 0.0), 3.0},
      {GateKind::Cz, complexd(0.0, 0.0), 1.0},
      {GateKind::Iswap, complexd(0.0, 0.0), -1.0},
  }};

  GateKind best = GateKind::Other;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const auto& a : anchors) {
    const double d = std::max(std::abs(inv.g1 - a.g1), std::abs(inv.g2 - a.g2));
    if (d < best_dist) {
      best_dist = d;
      best = a.kind;
    }
  }
  if (best_dist <= tol) return {best, best_dist};
  return {GateKind::Other, best_dist};
}

}  // namespace xgate
