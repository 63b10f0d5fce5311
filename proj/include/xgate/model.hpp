#pragma once

#include "xgate/matrix.hpp"

#include <optional>
#include <stdexcept>

namespace xgate {

// All frequencies are angular, in rad/us. Basis ordering throughout the
// toolkit: |uu>, |ud>, |du>, |dd>, with the spin at site 1 first. The local
// fields are B - dB at site 1 and B + dB at site 2.

/// Device and drive parameters for an oscillating exchange pulse
/// J(t) = J0 + J1 cos(omega t).
struct PulseParams {
  double B = 0.0;      ///< homogeneous Zeeman term, rad/us
  double dB = 0.0;     ///< gradient term, rad/us (may be negative)
  double J0 = 0.0;     ///< static exchange, rad/us
  double J1 = 0.0;     ///< drive amplitude, rad/us
  double omega = 0.0;  ///< drive angular frequency, rad/us
};

/// Boundary validation: J0 >= 0, |J1| <= J0, omega > 0, everything finite.
/// Internal noise averaging evaluates shifted copies (J0 -> J0 + J) that may
/// transiently violate the drive constraint; those go unvalidated.
inline void validate(const PulseParams& p) {
  if (!(std::isfinite(p.B) && std::isfinite(p.dB) && std::isfinite(p.J0) &&
        std::isfinite(p.J1) && std::isfinite(p.omega))) {
    throw std::invalid_argument("PulseParams: all parameters must be finite");
  }
  if (!(p.J0 >= 0.0)) throw std::invalid_argument("PulseParams: J0 must be >= 0");
  if (!(std::abs(p.J1) <= p.J0)) {
    throw std::invalid_argument("PulseParams: |J1| must be <= J0 (total exchange >= 0)");
  }
  if (!(p.omega > 0.0)) throw std::invalid_argument("PulseParams: omega must be > 0");
}

/// Instantaneous exchange J(t) = J0 + J1 cos(omega t).
inline double exchange_at(const PulseParams& p, double t) {
  return p.J0 + p.J1 * std::cos(p.omega * t);
}

/// Two-spin Hamiltonian at time t:
///   H = B(S1z + S2z) + dB(S2z - S1z) + J(t)(S1.S2 - 1/4),
/// spin-1/2 operators S = sigma/2. Exactly Hermitian by construction, and
/// block diagonal (the |uu> and |dd> states couple to nothing).
inline Matrix4cd hamiltonian_at(const PulseParams& p, double t) {
  const double j = exchange_at(p, t);
  Matrix4cd h = Matrix4cd::Zero();
  h(0, 0) = p.B;
  h(1, 1) = -p.dB - 0.5 * j;
  h(2, 2) = p.dB - 0.5 * j;
  h(3, 3) = -p.B;
  h(1, 2) = 0.5 * j;
  h(2, 1) = 0.5 * j;
  return h;
}

/// Diagonal generator K of the rotating frame R(t) = exp(i K t), assigning
/// each spin its own local Zeeman frequency (B - dB to spin 1, B + dB to
/// spin 2). With J = 0 the transformed Hamiltonian i R' R^dag + R H R^dag
/// vanishes identically.
inline Matrix4cd rotating_frame_generator(const PulseParams& p) {
  Matrix4cd k = Matrix4cd::Zero();
  k(0, 0) = p.B;
  k(1, 1) = -p.dB;
  k(2, 2) = p.dB;
  k(3, 3) = -p.B;
  return k;
}

/// R(t) = exp(i K t), diagonal phases.
inline Matrix4cd rotating_frame_at(const PulseParams& p, double t) {
  Matrix4cd r = Matrix4cd::Zero();
  r(0, 0) = std::polar(1.0, p.B * t);
  r(1, 1) = std::polar(1.0, -p.dB * t);
  r(2, 2) = std::polar(1.0, p.dB * t);
  r(3, 3) = std::polar(1.0, -p.B * t);
  return r;
}

/// The three dimensionless ratios controlling the far-detuned rotating wave
/// approximation: |J0/(4 dB)|, |J1/(8 dB + 4 omega)|, |J1/(8 dB - 4 omega)|.
/// A ratio whose denominator vanishes is resonant and left unset.
struct RwaRatios {
  std::optional<double> static_term;  ///< |J0 / (4 dB)|
  std::optional<double> sum_term;     ///< |J1 / (8 dB + 4 omega)|
  std::optional<double> diff_term;    ///< |J1 / (8 dB - 4 omega)|

  /// All ratios defined and below the threshold (default 0.1).
  bool all_below(double threshold = 0.1) const {
    return static_term && sum_term && diff_term && *static_term < threshold &&
           *sum_term < threshold && *diff_term < threshold;
  }
};

inline RwaRatios rwa_validity(const PulseParams& p) {
  RwaRatios r;
  const double d0 = 4.0 * p.dB;
  const double dp = 8.0 * p.dB + 4.0 * p.omega;
  const double dm = 8.0 * p.dB - 4.0 * p.omega;
  if (d0 != 0.0) r.static_term = std::abs(p.J0 / d0);
  if (p.J0 == 0.0 && d0 == 0.0) r.static_term = 0.0;
  if (dp != 0.0) r.sum_term = std::abs(p.J1 / dp);
  if (p.J1 == 0.0 && dp == 0.0) r.sum_term = 0.0;
  if (dm != 0.0) r.diff_term = std::abs(p.J1 / dm);
  if (p.J1 == 0.0 && dm == 0.0) r.diff_term = 0.0;
  return r;
}

/// True when the drive sits on the exchange resonance |omega| = 2 |dB|
/// (relative tolerance on the mismatch).
inline bool on_resonance(const PulseParams& p, double rel_tol = 1e-9) {
  return std::abs(std::abs(p.omega) - 2.0 * std::abs(p.dB)) <=
         rel_tol * std::max(std::abs(p.omega), 2.0 * std::abs(p.dB));
}

}  // namespace xgate
