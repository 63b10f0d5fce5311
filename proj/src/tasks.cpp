#include "xgate/tasks.hpp"

#include "xgate/csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace xgate {

namespace {

constexpr double kPi = std::numbers::pi;

using ordered_json = nlohmann::ordered_json;

bool same_params(const PulseParams& a, const PulseParams& b) {
  return a.B == b.B && a.dB == b.dB && a.J0 == b.J0 && a.J1 == b.J1 && a.omega == b.omega;
}

int trace_substeps(const PulseParams& p, double t_end, int points, int steps) {
  if (steps > 0) return (steps + points - 1) / points;
  return std::max(1, (default_steps(p, t_end) + points - 1) / points);
}

// Propagation sampled at exactly points+1 uniform grid times.
std::vector<Unitary4> sampled_trace(const PulseParams& p, double t_end, int points,
                                    int substeps, Scheme scheme) {
  PropagatorConfig config{t_end, points * substeps, scheme};
  EvolutionTrace full = propagate_trace(p, config);
  std::vector<Unitary4> out;
  out.reserve(points + 1);
  for (int k = 0; k <= points; ++k) out.push_back(full.unitaries[k * substeps]);
  return out;
}

ordered_json params_json(const PulseParams& p) {
  return ordered_json{{"B", p.B}, {"dB", p.dB}, {"J0", p.J0}, {"J1", p.J1}, {"omega", p.omega}};
}

}  // namespace

std::string fidelity_trace_csv(const TraceRequest& req) {
  if (req.columns.empty()) throw std::invalid_argument("fidelity-trace: no families requested");
  if (!(req.t_end > 0.0)) throw std::invalid_argument("fidelity-trace: t_end must be > 0");
  if (req.points < 1) throw std::invalid_argument("fidelity-trace: points must be >= 1");
  for (const auto& col : req.columns) validate(col.params);

  // One propagation per distinct parameter set; columns share it.
  std::vector<std::vector<Unitary4>> traces;
  std::vector<int> trace_of_column(req.columns.size());
  std::vector<PulseParams> trace_params;
  for (std::size_t c = 0; c < req.columns.size(); ++c) {
    int found = -1;
    for (std::size_t t = 0; t < trace_params.size(); ++t) {
      if (same_params(trace_params[t], req.columns[c].params)) {
        found = static_cast<int>(t);
        break;
      }
    }
    if (found < 0) {
      const PulseParams& p = req.columns[c].params;
      const int sub = trace_substeps(p, req.t_end, req.points, req.steps);
      traces.push_back(sampled_trace(p, req.t_end, req.points, sub, req.scheme));
      trace_params.push_back(p);
      found = static_cast<int>(traces.size()) - 1;
    }
    trace_of_column[c] = found;
  }

  std::vector<std::string> header{"time_us"};
  for (const auto& col : req.columns) header.push_back(col.label);
  CsvBuilder csv(header);

  for (int k = 0; k <= req.points; ++k) {
    const double t = req.t_end * k / req.points;
    std::vector<double> row{t};
    for (std::size_t c = 0; c < req.columns.size(); ++c) {
      const TraceColumn& col = req.columns[c];
      const Matrix4cd& u = traces[trace_of_column[c]][k].matrix();
      double f;
      if (is_resonant_family(col.family)) {
        f = fidelity(target_gate(col.family, t, col.params).matrix(), u);
      } else {
        const Matrix4cd rotated = rotating_frame_at(col.params, t) * u;
        f = fidelity(target_gate(col.family, t, col.params).matrix(), rotated);
      }
      row.push_back(f);
    }
    csv.add_numeric_row(row);
  }
  return csv.str();
}

std::string evolve_csv(const EvolveRequest& req) {
  validate(req.params);
  if (!(req.t_end > 0.0)) throw std::invalid_argument("evolve: t_end must be > 0");
  if (req.points < 1) throw std::invalid_argument("evolve: points must be >= 1");

  const int sub = trace_substeps(req.params, req.t_end, req.points, req.steps);
  std::vector<Unitary4> trace = sampled_trace(req.params, req.t_end, req.points, sub, req.scheme);

  std::vector<std::string> header{"time_us"};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      header.push_back("re_u" + std::to_string(i) + std::to_string(j));
      header.push_back("im_u" + std::to_string(i) + std::to_string(j));
    }
  }
  CsvBuilder csv(header);

  for (int k = 0; k <= req.points; ++k) {
    const double t = req.t_end * k / req.points;
    Matrix4cd u = trace[k].matrix();
    if (req.frame == Frame::Rotating) u = rotating_frame_at(req.params, t) * u;
    std::vector<double> row{t};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        row.push_back(u(i, j).real());
        row.push_back(u(i, j).imag());
      }
    }
    csv.add_numeric_row(row);
  }
  return csv.str();
}

std::string solve_gates_csv(const SolveGatesRequest& req) {
  struct Row {
    double tau;
    std::vector<std::string> cells;
  };
  std::vector<Row> rows;

  for (const auto& sol : enumerate_resonant(req.J0, req.omega, req.filter, req.max_n, req.max_m)) {
    rows.push_back({sol.tau,
                    {to_string(sol.family), std::to_string(sol.n), std::to_string(sol.m),
                     format_double(sol.tau), format_double(sol.j1), format_double(sol.residual)}});
  }
  if (req.include_nres) {
    for (int n = 0; n <= req.nres_max_n; ++n) {
      const auto sol = solve_nonresonant(req.J0, req.J1, req.omega, n);
      rows.push_back({sol.tau,
                      {to_string(sol.family), std::to_string(sol.n), "",
                       format_double(sol.tau), format_double(req.J1),
                       format_double(sol.residual)}});
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.tau < b.tau; });

  CsvBuilder csv({"family", "n", "m", "tau_us", "j1", "residual"});
  for (const auto& row : rows) csv.add_row(row.cells);
  return csv.str();
}

std::string noise_sweep_csv(const NoiseSweepRequest& req) {
  if (req.recipes.empty()) throw std::invalid_argument("noise-sweep: no recipes given");
  if (req.ratios.empty()) throw std::invalid_argument("noise-sweep: empty sigma grid");
  for (const auto& rec : req.recipes) validate(rec.params);

  const NoiseSweepTable table = noise_sweep(req.recipes, req.ratios, req.quad_order,
                                            req.evolution);

  std::vector<std::string> header{"sigma_over_J0"};
  for (const auto& label : table.labels) header.push_back(label);
  CsvBuilder csv(header);
  for (std::size_t i = 0; i < table.ratios.size(); ++i) {
    std::vector<double> row{table.ratios[i]};
    for (Eigen::Index j = 0; j < table.values.cols(); ++j) {
      row.push_back(table.values(static_cast<Eigen::Index>(i), j));
    }
    csv.add_numeric_row(row);
  }
  return csv.str();
}

std::vector<SweepRecipe> fig4_recipes() {
  // Resonant recipes from the gate conditions at J0 = 20, omega = 200; the
  // non-resonant CZ at omega = 270 (tau_0 ~ 0.1598 us) and the constant
  // exchange at tau_0 = pi/J0 for reference.
  const PulseParams base{1000.0, -100.0, 20.0, 0.0, 200.0};

  PulseParams cz_res = base;
  cz_res.J1 = 16.0;
  const auto cz_sol = solve_resonant(cz_res.J0, cz_res.omega, 5, 2);
  PulseParams iswap = base;
  iswap.J1 = 20.0;
  const auto iswap_sol = solve_resonant(iswap.J0, iswap.omega, 2, 1);
  if (!cz_sol || !iswap_sol) throw std::logic_error("fig4: resonant recipes must solve");

  PulseParams nres = base;
  nres.J1 = 20.0;
  nres.omega = 270.0;
  const auto nres_sol = solve_nonresonant(nres.J0, nres.J1, nres.omega, 0);

  PulseParams constant = base;
  constant.J1 = 0.0;
  constant.omega = 270.0;
  const auto const_sol = solve_nonresonant(constant.J0, 0.0, constant.omega, 0);

  return {
      {"f_cz_res_minus", GateFamily::CzResMinus, cz_sol->tau, cz_res},
      {"f_iswap_plus", GateFamily::IswapPlus, iswap_sol->tau, iswap},
      {"f_cz_nres_plus", GateFamily::CzNresPlus, nres_sol.tau, nres},
      {"f_cz_const", GateFamily::CzConst, const_sol.tau, constant},
  };
}

namespace {

std::vector<std::pair<std::string, std::string>> reproduce_fig2() {
  const PulseParams base{1000.0, -100.0, 20.0, 0.0, 200.0};
  struct Entry {
    GateFamily family;
    int n, m;
  };
  const std::vector<Entry> entries = {
      {GateFamily::CzResPlus, 7, 2},
      {GateFamily::CzResMinus, 5, 2},
      {GateFamily::IswapPlus, 2, 1},
      {GateFamily::IswapMinus, 4, 1},
  };

  TraceRequest req;
  req.t_end = 1.2;
  req.points = 2000;
  ordered_json man_columns = ordered_json::array();
  for (const auto& e : entries) {
    const auto sol = solve_resonant(base.J0, base.omega, e.n, e.m);
    if (!sol || sol->family != e.family) throw std::logic_error("fig2: recipe must solve");
    PulseParams p = base;
    p.J1 = sol->j1;
    const std::string label = std::string("f_") + to_string(e.family);
    req.columns.push_back({label, p, e.family});
    man_columns.push_back(ordered_json{{"column", label},
                                       {"family", to_string(e.family)},
                                       {"n", sol->n},
                                       {"m", sol->m},
                                       {"J1", sol->j1},
                                       {"tau_us", sol->tau},
                                       {"params", params_json(p)}});
  }

  ordered_json manifest{{"figure", "fig2"},
                        {"task", "fidelity-trace"},
                        {"t_end_us", req.t_end},
                        {"points", req.points},
                        {"scheme", to_string(req.scheme)},
                        {"base_params", params_json(base)},
                        {"columns", man_columns}};
  return {{"fig2_fidelity_trace.csv", fidelity_trace_csv(req)},
          {"fig2_manifest.json", manifest.dump(2) + "\n"}};
}

std::vector<std::pair<std::string, std::string>> reproduce_fig3() {
  const PulseParams base{1000.0, -100.0, 20.0, 20.0, 270.0};

  TraceRequest req;
  req.t_end = 0.9;
  req.points = 2000;
  for (double omega : {270.0, 400.0}) {
    PulseParams p = base;
    p.omega = omega;
    const std::string suffix = "_w" + std::to_string(static_cast<int>(omega));
    req.columns.push_back({"f_cz_nres_plus" + suffix, p, GateFamily::CzNresPlus});
    req.columns.push_back({"f_cz_nres_minus" + suffix, p, GateFamily::CzNresMinus});
  }
  PulseParams constant = base;
  constant.J1 = 0.0;
  req.columns.push_back({"f_cz_const_plus", constant, GateFamily::CzNresPlus});
  req.columns.push_back({"f_cz_const_minus", constant, GateFamily::CzNresMinus});

  ordered_json man_columns = ordered_json::array();
  for (const auto& col : req.columns) {
    man_columns.push_back(ordered_json{{"column", col.label},
                                       {"family", to_string(col.family)},
                                       {"params", params_json(col.params)}});
  }
  ordered_json manifest{{"figure", "fig3"},
                        {"task", "fidelity-trace"},
                        {"t_end_us", req.t_end},
                        {"points", req.points},
                        {"scheme", to_string(req.scheme)},
                        {"frequencies", {270.0, 400.0}},
                        {"constant_exchange_reference", true},
                        {"columns", man_columns}};
  return {{"fig3_fidelity_trace.csv", fidelity_trace_csv(req)},
          {"fig3_manifest.json", manifest.dump(2) + "\n"}};
}

std::vector<std::pair<std::string, std::string>> reproduce_fig4() {
  NoiseSweepRequest req;
  req.recipes = fig4_recipes();
  for (int i = 0; i <= 40; ++i) req.ratios.push_back(0.005 * i);
  req.quad_order = 41;
  req.evolution = Evolution::Numeric;

  ordered_json man_recipes = ordered_json::array();
  for (const auto& rec : req.recipes) {
    man_recipes.push_back(ordered_json{{"column", rec.label},
                                       {"family", to_string(rec.family)},
                                       {"tau_us", rec.tau},
                                       {"params", params_json(rec.params)}});
  }
  ordered_json manifest{{"figure", "fig4"},
                        {"task", "noise-sweep"},
                        {"sigma_over_J0", {0.0, 0.2}},
                        {"grid_points", 41},
                        {"quad_order", req.quad_order},
                        {"evolution", "numeric"},
                        {"recipes", man_recipes}};
  return {{"fig4_noise_sweep.csv", noise_sweep_csv(req)},
          {"fig4_manifest.json", manifest.dump(2) + "\n"}};
}

}  // namespace

std::vector<std::pair<std::string, std::string>> reproduce(const std::string& figure_id) {
  if (figure_id == "fig2") return reproduce_fig2();
  if (figure_id == "fig3") return reproduce_fig3();
  if (figure_id == "fig4") return reproduce_fig4();
  throw std::invalid_argument("reproduce: unknown figure id '" + figure_id +
                              "' (expected fig2, fig3 or fig4)");
}

}  // namespace xgate
