// xgate: simulation and calibration CLI for two-qubit gates driven by an
// oscillating exchange interaction between two spin qubits.
//
// All frequencies are angular, in rad/us. Output CSVs use a fixed format
// (12 significant digits) so identical configurations give identical bytes.

#include "xgate/csv.hpp"
#include "xgate/parallel.hpp"
#include "xgate/tasks.hpp"

#include <CLI11.hpp>

#include <algorithm>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct ParamOptions {
  xgate::PulseParams params{1000.0, -100.0, 20.0, 20.0, 200.0};

  void attach(CLI::App* cmd) {
    cmd->add_option("--B", params.B, "homogeneous Zeeman term, rad/us")
        ->capture_default_str();
    cmd->add_option("--dB", params.dB, "gradient term, rad/us")->capture_default_str();
    cmd->add_option("--J0", params.J0, "static exchange, rad/us")->capture_default_str();
    cmd->add_option("--J1", params.J1, "drive amplitude, rad/us")->capture_default_str();
    cmd->add_option("--omega", params.omega, "drive angular frequency, rad/us")
        ->capture_default_str();
  }
};

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

void warn_rwa(const xgate::PulseParams& p, bool resonant_intent) {
  const auto ratios = xgate::rwa_validity(p);
  if (resonant_intent) {
    if (!xgate::on_resonance(p, 1e-6)) {
      std::cerr << "warning: resonant-family targets requested but |omega| != 2|dB|\n";
    }
    return;
  }
  if (!ratios.static_term || !ratios.sum_term || !ratios.diff_term) {
    std::cerr << "warning: far-detuned validity ratio undefined: resonant denominator\n";
  } else if (!ratios.all_below(0.1)) {
    std::cerr << "warning: far-detuned validity ratios ("
              << *ratios.static_term << ", " << *ratios.sum_term << ", " << *ratios.diff_term
              << ") not all below 0.1\n";
  }
}

std::vector<double> parse_ratio_grid(double lo, double hi, int count) {
  if (count < 1) throw CLI::ValidationError("--grid-points must be >= 1");
  if (!(hi >= lo) || !(lo >= 0.0)) throw CLI::ValidationError("invalid sigma ratio range");
  std::vector<double> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "xgate: two-qubit gates from an oscillating exchange interaction.\n"
      "Computes exact time evolution, closed-form approximations, gate-time\n"
      "recipes via Makhlin invariants, and fidelity under quasistatic charge\n"
      "noise. All frequencies are angular (rad/us); times are in us.\n"
      "XGATE_THREADS caps the worker pool for sweeps."};
  app.require_subcommand(1);
  app.fallthrough(true);
  app.set_config("--config", "", "read options from an INI-style config file");
  app.footer("Datasets: `xgate reproduce fig2|fig3|fig4` writes the bundled example\n"
             "data (fidelity traces and the noise sweep) plus a JSON manifest.");

  std::string out_path = "-";
  int steps_override = 0;
  int quad_order = 41;
  bool check_convergence = false;

  // ---- fidelity-trace ----------------------------------------------------
  auto* trace_cmd = app.add_subcommand(
      "fidelity-trace", "numeric fidelity vs time against one or more target families");
  ParamOptions trace_params;
  trace_params.attach(trace_cmd);
  std::vector<std::string> family_names{"iswap_plus"};
  double trace_t_end = 1.2;
  int trace_points = 2000;
  trace_cmd->add_option("--families", family_names,
                        "target families (cz_res_plus, cz_res_minus, iswap_plus, iswap_minus, "
                        "cz_nres_plus, cz_nres_minus, cz_const)")
      ->delimiter(',')
      ->capture_default_str();
  trace_cmd->add_option("--t-end", trace_t_end, "trace window, us")->capture_default_str();
  trace_cmd->add_option("--points", trace_points, "grid intervals (rows = points + 1)")
      ->capture_default_str();
  trace_cmd->add_option("--steps", steps_override,
                        "propagator steps (0 = auto; rounded up to a multiple of --points)");
  trace_cmd->add_flag("--check-convergence", check_convergence,
                      "verify the step-doubling delta is below 1e-8");
  trace_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)")
      ->capture_default_str();

  // ---- evolve --------------------------------------------------------------
  auto* evolve_cmd =
      app.add_subcommand("evolve", "raw evolution operator per grid point, re/im columns");
  ParamOptions evolve_params;
  evolve_params.attach(evolve_cmd);
  std::string frame_name = "lab";
  double evolve_t_end = 1.0;
  int evolve_points = 2000;
  evolve_cmd->add_option("--frame", frame_name, "lab or rotating")->capture_default_str();
  evolve_cmd->add_option("--t-end", evolve_t_end, "evolution window, us")->capture_default_str();
  evolve_cmd->add_option("--points", evolve_points, "grid intervals (rows = points + 1)")
      ->capture_default_str();
  evolve_cmd->add_option("--steps", steps_override, "propagator steps (0 = auto)");
  evolve_cmd->add_flag("--check-convergence", check_convergence,
                       "verify the step-doubling delta is below 1e-8");
  evolve_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)")
      ->capture_default_str();

  // ---- solve-gates ---------------------------------------------------------
  auto* solve_cmd = app.add_subcommand(
      "solve-gates", "enumerate gate recipes from the resonant/non-resonant conditions");
  xgate::SolveGatesRequest solve_req;
  std::string filter_name = "all";
  solve_cmd->add_option("--J0", solve_req.J0, "static exchange, rad/us")->capture_default_str();
  solve_cmd->add_option("--omega", solve_req.omega, "drive angular frequency, rad/us")
      ->capture_default_str();
  solve_cmd->add_option("--family", filter_name, "recipe filter: all, cz or iswap")
      ->capture_default_str();
  solve_cmd->add_option("--max-n", solve_req.max_n, "largest n to scan")->capture_default_str();
  solve_cmd->add_option("--max-m", solve_req.max_m, "largest m to scan")->capture_default_str();
  solve_cmd->add_flag("--nres", solve_req.include_nres,
                      "also list non-resonant CZ gate times (uses --J1)");
  solve_cmd->add_option("--J1", solve_req.J1, "drive amplitude for --nres rows, rad/us")
      ->capture_default_str();
  solve_cmd->add_option("--nres-max-n", solve_req.nres_max_n, "largest non-resonant index n")
      ->capture_default_str();
  solve_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)")
      ->capture_default_str();

  // ---- noise-sweep -----------------------------------------------------------
  auto* noise_cmd = app.add_subcommand(
      "noise-sweep", "noise-averaged fidelity over a sigma/J0 grid for the fig4 recipes");
  double ratio_lo = 0.0, ratio_hi = 0.2;
  int ratio_points = 41;
  std::string evolution_name = "numeric";
  noise_cmd->add_option("--ratio-min", ratio_lo, "smallest sigma/J0")->capture_default_str();
  noise_cmd->add_option("--ratio-max", ratio_hi, "largest sigma/J0")->capture_default_str();
  noise_cmd->add_option("--grid-points", ratio_points, "number of grid points")
      ->capture_default_str();
  noise_cmd->add_option("--quad-order", quad_order, "Gauss-Hermite order (odd)")
      ->capture_default_str();
  noise_cmd->add_option("--evolution", evolution_name, "numeric or analytic")
      ->capture_default_str();
  noise_cmd->add_flag("--check-convergence", check_convergence,
                      "verify doubling the quadrature order moves no value by more than 1e-6");
  noise_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)")
      ->capture_default_str();

  // ---- reproduce ------------------------------------------------------------
  auto* repro_cmd =
      app.add_subcommand("reproduce", "write a bundled example dataset and its manifest");
  std::string figure_id;
  std::string out_dir = ".";
  repro_cmd->add_option("figure", figure_id, "fig2, fig3 or fig4")->required();
  repro_cmd->add_option("--out-dir", out_dir, "output directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (trace_cmd->parsed()) {
      xgate::TraceRequest req;
      req.t_end = trace_t_end;
      req.points = trace_points;
      req.steps = steps_override;
      bool any_resonant = false, any_detuned = false;
      for (const auto& name : family_names) {
        const auto family = xgate::family_from_string(name);
        if (!family) throw std::invalid_argument("unknown family: " + name);
        req.columns.push_back({"f_" + name, trace_params.params, *family});
        (xgate::is_resonant_family(*family) ? any_resonant : any_detuned) = true;
      }
      if (any_resonant) warn_rwa(trace_params.params, true);
      if (any_detuned) warn_rwa(trace_params.params, false);
      if (check_convergence) {
        xgate::PropagatorConfig config{trace_t_end, steps_override, req.scheme};
        const double delta = xgate::step_doubling_delta(trace_params.params, config);
        if (!(delta < 1e-8)) {
          std::cerr << "error: propagation not converged, step-doubling delta = " << delta
                    << " (raise --steps)\n";
          return 1;
        }
      }
      write_output(out_path, xgate::fidelity_trace_csv(req));
    } else if (evolve_cmd->parsed()) {
      xgate::EvolveRequest req;
      req.params = evolve_params.params;
      req.t_end = evolve_t_end;
      req.points = evolve_points;
      req.steps = steps_override;
      if (frame_name == "lab") {
        req.frame = xgate::Frame::Lab;
      } else if (frame_name == "rotating") {
        req.frame = xgate::Frame::Rotating;
      } else {
        throw std::invalid_argument("unknown frame: " + frame_name);
      }
      if (check_convergence) {
        xgate::PropagatorConfig config{evolve_t_end, steps_override, req.scheme};
        const double delta = xgate::step_doubling_delta(req.params, config);
        if (!(delta < 1e-8)) {
          std::cerr << "error: propagation not converged, step-doubling delta = " << delta
                    << " (raise --steps)\n";
          return 1;
        }
      }
      write_output(out_path, xgate::evolve_csv(req));
    } else if (solve_cmd->parsed()) {
      if (filter_name == "all") {
        solve_req.filter = xgate::GateKindFilter::All;
      } else if (filter_name == "cz") {
        solve_req.filter = xgate::GateKindFilter::Cz;
      } else if (filter_name == "iswap") {
        solve_req.filter = xgate::GateKindFilter::Iswap;
      } else {
        throw std::invalid_argument("unknown family filter: " + filter_name);
      }
      write_output(out_path, xgate::solve_gates_csv(solve_req));
    } else if (noise_cmd->parsed()) {
      xgate::NoiseSweepRequest req;
      req.recipes = xgate::fig4_recipes();
      req.ratios = parse_ratio_grid(ratio_lo, ratio_hi, ratio_points);
      req.quad_order = quad_order;
      if (evolution_name == "numeric") {
        req.evolution = xgate::Evolution::Numeric;
      } else if (evolution_name == "analytic") {
        req.evolution = xgate::Evolution::Analytic;
      } else {
        throw std::invalid_argument("unknown evolution: " + evolution_name);
      }
      if (check_convergence && !req.ratios.empty()) {
        const double worst_ratio = *std::max_element(req.ratios.begin(), req.ratios.end());
        for (const auto& rec : req.recipes) {
          const xgate::NoiseModel model{worst_ratio * rec.params.J0, req.quad_order};
          const double delta = xgate::quadrature_doubling_delta(
              rec.params, rec.family, rec.tau, model, xgate::frame_for(rec.family),
              req.evolution);
          if (!(delta <= 1e-6)) {
            std::cerr << "error: quadrature not converged for " << rec.label
                      << ", order-doubling delta = " << delta << " (raise --quad-order)\n";
            return 1;
          }
        }
      }
      write_output(out_path, xgate::noise_sweep_csv(req));
    } else if (repro_cmd->parsed()) {
      for (const auto& [name, content] : xgate::reproduce(figure_id)) {
        write_output(out_dir + "/" + name, content);
        std::cerr << "wrote " << out_dir << "/" << name << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
