#include "xgate/noise.hpp"

#include "xgate/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xgate {

void validate(const NoiseModel& m) {
  if (!(m.sigma >= 0.0) || !std::isfinite(m.sigma)) {
    throw std::invalid_argument("NoiseModel: sigma must be finite and >= 0");
  }
  if (m.quad_order < 1 || m.quad_order % 2 == 0) {
    throw std::invalid_argument("NoiseModel: quad_order must be a positive odd integer");
  }
}

void gauss_hermite(int order, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  if (order == 1) {
    nodes = Eigen::VectorXd::Zero(1);
    weights = Eigen::VectorXd::Constant(1, sqrt_pi);
    return;
  }
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
  for (int k = 1; k < order; ++k) {
    const double beta = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  nodes = es.eigenvalues();
  weights.resize(order);
  for (int k = 0; k < order; ++k) {
    const double v0 = es.eigenvectors()(0, k);
    weights(k) = sqrt_pi * v0 * v0;
  }
}

namespace {

// F(U'(tau, J0 + shift), X(tau)) for one quadrature node.
double shifted_fidelity(const PulseParams& p, GateFamily family, double tau,
                        const Matrix4cd& target, Frame frame, Evolution evolution,
                        double shift, int steps) {
  PulseParams shifted = p;
  shifted.J0 += shift;
  Matrix4cd u;
  switch (evolution) {
    case Evolution::Analytic:
      u = is_resonant_family(family) ? u_res(shifted, tau).matrix()
                                     : u_nonres(shifted, tau).matrix();
      break;
    case Evolution::Numeric:
      u = propagate_interval(shifted, 0.0, tau, steps);
      if (frame == Frame::Rotating) u = rotating_frame_at(shifted, tau) * u;
      break;
  }
  return fidelity(target, u);
}

}  // namespace

double noisy_fidelity(const PulseParams& p, GateFamily family, double tau,
                      const NoiseModel& noise, Frame frame, Evolution evolution) {
  validate(noise);
  if (!(tau >= 0.0)) throw std::invalid_argument("noisy_fidelity: tau must be >= 0");
  if (frame_for(family) != frame) {
    throw std::invalid_argument(
        "noisy_fidelity: resonant families require the lab frame, non-resonant families "
        "the rotating frame");
  }

  const Matrix4cd target = target_gate(family, tau, p).matrix();
  // The discretization is fixed from the unshifted parameters so every node
  // sees the same grid.
  const int steps = std::max(1, default_steps(p, tau));

  if (noise.sigma == 0.0) {
    return shifted_fidelity(p, family, tau, target, frame, evolution, 0.0, steps);
  }

  Eigen::VectorXd nodes, weights;
  gauss_hermite(noise.quad_order, nodes, weights);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const double scale = std::numbers::sqrt2 * noise.sigma;

  double acc = 0.0;
  for (int k = 0; k < noise.quad_order; ++k) {
    acc += weights(k) * inv_sqrt_pi *
           shifted_fidelity(p, family, tau, target, frame, evolution, scale * nodes(k), steps);
  }
  return acc;
}

double quadrature_doubling_delta(const PulseParams& p, GateFamily family, double tau,
                                 const NoiseModel& noise, Frame frame, Evolution evolution) {
  const double coarse = noisy_fidelity(p, family, tau, noise, frame, evolution);
  const NoiseModel finer{noise.sigma, 2 * noise.quad_order + 1};
  const double fine = noisy_fidelity(p, family, tau, finer, frame, evolution);
  return std::abs(fine - coarse);
}

double analytic_noise_decay(double tau, double sigma) {
  if (!(tau >= 0.0) || !(sigma >= 0.0)) {
    throw std::invalid_argument("analytic_noise_decay: tau and sigma must be >= 0");
  }
  const double st = sigma * tau;
  return (3.0 + 2.0 * std::exp(-0.125 * st * st)) / 5.0;
}

NoiseSweepTable noise_sweep(const std::vector<SweepRecipe>& recipes,
                            const std::vector<double>& sigma_over_j0, int quad_order,
                            Evolution evolution) {
  for (double r : sigma_over_j0) {
    if (!(r >= 0.0)) throw std::invalid_argument("noise_sweep: ratios must be >= 0");
  }
  NoiseSweepTable table;
  table.ratios = sigma_over_j0;
  table.labels.reserve(recipes.size());
  for (const auto& r : recipes) table.labels.push_back(r.label);
  table.values.resize(static_cast<Eigen::Index>(sigma_over_j0.size()),
                      static_cast<Eigen::Index>(recipes.size()));

  const std::size_t cells = sigma_over_j0.size() * recipes.size();
  parallel_for(cells, [&](std::size_t cell) {
    const std::size_t i = cell / recipes.size();
    const std::size_t j = cell % recipes.size();
    const SweepRecipe& rec = recipes[j];
    const NoiseModel model{sigma_over_j0[i] * rec.params.J0, quad_order};
    table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
        noisy_fidelity(rec.params, rec.family, rec.tau, model, frame_for(rec.family),
                       evolution);
  });
  return table;
}

}  // namespace xgate
