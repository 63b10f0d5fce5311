#pragma once

#include "xgate/analytic.hpp"
#include "xgate/propagate.hpp"

#include <string>
#include <vector>

namespace xgate {

/// Quasistatic Gaussian charge noise on the static exchange: per run the
/// shift J ~ N(0, sigma^2) is added to J0 (J1 and omega are unaffected).
struct NoiseModel {
  double sigma = 0.0;   ///< standard deviation, rad/us
  int quad_order = 41;  ///< Gauss-Hermite order; odd, so the zero node is included
};

void validate(const NoiseModel& m);

enum class Frame { Lab, Rotating };
enum class Evolution { Numeric, Analytic };

/// Frame in which a family's fidelity is defined: lab for the resonant
/// families, rotating for the non-resonant and constant-exchange CZs.
inline Frame frame_for(GateFamily f) {
  return is_resonant_family(f) ? Frame::Lab : Frame::Rotating;
}

/// Gauss-Hermite nodes and weights for weight function exp(-x^2)
/// (Golub-Welsch). Nodes ascending; weights sum to sqrt(pi).
void gauss_hermite(int order, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

/// Noise-averaged fidelity F_N(tau, X(tau)) = E_J[ F(U'(tau, J0+J), X(tau)) ]
/// by Gauss-Hermite quadrature. `frame` must match the family (lab for
/// resonant, rotating otherwise). evolution = Numeric uses the converged
/// propagator, Analytic uses u_res / u_nonres.
double noisy_fidelity(const PulseParams& p, GateFamily family, double tau,
                      const NoiseModel& noise, Frame frame, Evolution evolution);

/// Change of noisy_fidelity when the quadrature order is doubled (to the
/// next odd order, 2n + 1). Values above ~1e-6 mean the requested order does
/// not resolve the integrand.
double quadrature_doubling_delta(const PulseParams& p, GateFamily family, double tau,
                                 const NoiseModel& noise, Frame frame, Evolution evolution);

/// Closed-form decay (3 + 2 exp(-sigma^2 tau^2 / 8)) / 5 followed by the
/// noisy fidelity of every exact gate recipe under this noise model.
double analytic_noise_decay(double tau, double sigma);

/// One column of a noise sweep: a gate recipe evaluated at its gate time.
struct SweepRecipe {
  std::string label;
  GateFamily family = GateFamily::CzConst;
  double tau = 0.0;
  PulseParams params;
};

/// F_N per (recipe, sigma/J0 ratio); values(i, j) is ratio i, recipe j.
struct NoiseSweepTable {
  std::vector<double> ratios;
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
};

/// Deterministic sweep of noisy_fidelity over a sigma/J0 grid, numeric
/// evolution by default. Cells are evaluated on a worker pool (capped by
/// XGATE_THREADS) and merged in order.
NoiseSweepTable noise_sweep(const std::vector<SweepRecipe>& recipes,
                            const std::vector<double>& sigma_over_j0,
                            int quad_order = 41,
                            Evolution evolution = Evolution::Numeric);

}  // namespace xgate
