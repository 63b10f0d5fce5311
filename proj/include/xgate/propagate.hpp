#pragma once

#include "xgate/matrix.hpp"
#include "xgate/model.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace xgate {

/// Time-stepping scheme for the time-ordered exponential.
enum class Scheme {
  MidpointExponential,  ///< exact exponential of the midpoint Hamiltonian, order 2
  CommutatorFree4,      ///< two-exponential commutator-free scheme, order 4
};

const char* to_string(Scheme s);
std::optional<Scheme> scheme_from_string(std::string_view name);

/// Discretization for propagate(). steps == 0 picks default_steps(), sized
/// so that dt * max|H| <= 0.05 rad.
struct PropagatorConfig {
  double t_end = 0.0;
  int steps = 0;
  Scheme scheme = Scheme::MidpointExponential;
};

/// Step count satisfying the default bound dt * (|B| + |dB| + 2 J0) <= 0.05.
int default_steps(const PulseParams& p, double t_end);

/// Dense output of a propagation: unitaries[k] is the evolution from t=0 to
/// times[k]; unitaries[0] is the identity.
struct EvolutionTrace {
  std::vector<double> times;
  std::vector<Unitary4> unitaries;
};

/// Time-ordered evolution of hamiltonian_at over [t0, t1] with the given
/// number of steps. The drive stays phase coherent: H is always evaluated at
/// absolute time. Returns the raw matrix; unitary to roundoff.
Matrix4cd propagate_interval(const PulseParams& p, double t0, double t1, int steps,
                             Scheme scheme = Scheme::MidpointExponential);

/// Evolution operator U(t_end) from t = 0.
Unitary4 propagate(const PulseParams& p, const PropagatorConfig& config);

/// As propagate, recording the running product after every step. The
/// endpoint is bit-identical to propagate() at the same discretization.
EvolutionTrace propagate_trace(const PulseParams& p, const PropagatorConfig& config);

/// Pointwise frame change U(t) -> R(t) U(t) with R from
/// rotating_frame_generator; R(0) = 1 so no right factor is needed.
EvolutionTrace to_rotating_frame(const EvolutionTrace& trace, const PulseParams& p);

/// Max-norm change of the endpoint when the step count is doubled. The
/// default configuration targets deltas below 1e-8.
double step_doubling_delta(const PulseParams& p, const PropagatorConfig& config);

}  // namespace xgate
