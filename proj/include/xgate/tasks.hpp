#pragma once

#include "xgate/gatesolve.hpp"
#include "xgate/noise.hpp"

#include <string>
#include <utility>
#include <vector>

namespace xgate {

// Task-level builders behind the CLI. Every builder validates its inputs
// up front, computes the full result in memory, and only then hands the
// bytes back, so a failed run never leaves a partial output file.

/// One fidelity-trace column: a numeric evolution of `params` compared row
/// by row against the family's target. Resonant families compare in the lab
/// frame against time-dependent targets, non-resonant families in the
/// rotating frame against the fixed diagonal targets.
struct TraceColumn {
  std::string label;
  PulseParams params;
  GateFamily family = GateFamily::CzConst;
};

struct TraceRequest {
  std::vector<TraceColumn> columns;
  double t_end = 1.2;
  int points = 2000;  ///< row count is points + 1 (t = 0 included)
  int steps = 0;      ///< 0 = auto; otherwise rounded up to a multiple of points
  Scheme scheme = Scheme::MidpointExponential;
};

std::string fidelity_trace_csv(const TraceRequest& req);

/// Raw evolution operator per grid point, 12-significant-digit re/im pairs.
struct EvolveRequest {
  PulseParams params;
  Frame frame = Frame::Lab;
  double t_end = 1.0;
  int points = 2000;
  int steps = 0;
  Scheme scheme = Scheme::MidpointExponential;
};

std::string evolve_csv(const EvolveRequest& req);

struct SolveGatesRequest {
  double J0 = 20.0;
  double omega = 200.0;
  GateKindFilter filter = GateKindFilter::All;
  int max_n = 20;
  int max_m = 8;
  bool include_nres = false;
  double J1 = 0.0;     ///< drive amplitude for the non-resonant condition
  int nres_max_n = 3;  ///< solve n = 0 .. nres_max_n
};

std::string solve_gates_csv(const SolveGatesRequest& req);

struct NoiseSweepRequest {
  std::vector<SweepRecipe> recipes;
  std::vector<double> ratios;
  int quad_order = 41;
  Evolution evolution = Evolution::Numeric;
};

std::string noise_sweep_csv(const NoiseSweepRequest& req);

/// The bundled example datasets fig2, fig3 and fig4 (fidelity traces for the
/// resonant and non-resonant drives, and the noise sweep), each with a JSON
/// manifest recording every parameter used. Returns (filename, content)
/// pairs.
std::vector<std::pair<std::string, std::string>> reproduce(const std::string& figure_id);

/// The parameter set and recipes behind the fig4 noise sweep; exposed so
/// tests and the sweep CLI default agree on one definition.
std::vector<SweepRecipe> fig4_recipes();

}  // namespace xgate
