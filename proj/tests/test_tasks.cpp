#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xgate/csv.hpp"
#include "xgate/tasks.hpp"

#include <numbers>
#include <sstream>

using namespace xgate;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

TEST_CASE("format_double: 12 significant digits, plain decimal point") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.005) == "0.005");
  CHECK(format_double(kPi) == "3.14159265359");
  CHECK(format_double(-0.25) == "-0.25");
  CHECK(format_double(80.0 / 7.0) == "11.4285714286");
}

TEST_CASE("CsvBuilder enforces the row shape and terminates every row") {
  CsvBuilder csv({"a", "b"});
  csv.add_numeric_row({1.0, 2.0});
  CHECK(csv.str() == "a,b\n1,2\n");
  CHECK_THROWS_AS(csv.add_numeric_row({1.0}), std::invalid_argument);
}

TEST_CASE("solve_gates_csv lists the shortest recipes first") {
  SolveGatesRequest req;
  req.J0 = 20.0;
  req.omega = 200.0;
  req.filter = GateKindFilter::All;
  req.max_n = 9;
  req.max_m = 4;
  const std::string csv = solve_gates_csv(req);
  const auto lines = split_lines(csv);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "family,n,m,tau_us,j1,residual");

  // first row: the (2,1) iSWAP+ at pi/10
  const auto first = split_cells(lines[1]);
  CHECK(first[0] == "iswap_plus");
  CHECK(first[1] == "2");
  CHECK(first[2] == "1");
  CHECK(std::stod(first[3]) == doctest::Approx(kPi / 10.0).epsilon(1e-9));

  // every row satisfies j1 <= J0
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cells = split_cells(lines[k]);
    CHECK(std::stod(cells[4]) <= 20.0 + 1e-9);
  }

  // the first CZ row is the (5,2) recipe at pi/4
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cells = split_cells(lines[k]);
    if (cells[0].rfind("cz_res", 0) == 0) {
      CHECK(cells[1] == "5");
      CHECK(cells[2] == "2");
      CHECK(std::stod(cells[3]) == doctest::Approx(kPi / 4.0).epsilon(1e-9));
      break;
    }
  }
}

TEST_CASE("solve_gates_csv can append non-resonant rows") {
  SolveGatesRequest req;
  req.J0 = 20.0;
  req.omega = 270.0;
  req.max_n = 2;
  req.max_m = 1;
  req.include_nres = true;
  req.J1 = 20.0;
  req.nres_max_n = 1;
  const auto lines = split_lines(solve_gates_csv(req));
  bool found = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto cells = split_cells(lines[k]);
    if (cells[0] == "cz_nres_plus") {
      found = true;
      CHECK(cells[2].empty());
      CHECK(std::stod(cells[3]) == doctest::Approx(0.1598169850).epsilon(1e-6));
    }
  }
  CHECK(found);
}

TEST_CASE("fidelity_trace_csv: t = 0 row and shape") {
  TraceRequest req;
  req.t_end = 0.02;
  req.points = 4;
  PulseParams p{1000.0, -100.0, 20.0, 20.0, 270.0};
  req.columns.push_back({"f_cz_nres_plus", p, GateFamily::CzNresPlus});
  const auto lines = split_lines(fidelity_trace_csv(req));
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "time_us,f_cz_nres_plus");
  const auto row0 = split_cells(lines[1]);
  CHECK(std::stod(row0[0]) == 0.0);
  // F(1, diag(1,i,i,1)) = 0.6
  CHECK(std::stod(row0[1]) == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("fidelity_trace_csv is byte-stable across runs") {
  TraceRequest req;
  req.t_end = 0.05;
  req.points = 10;
  const PulseParams p{1000.0, -100.0, 20.0, 20.0, 200.0};
  req.columns.push_back({"f_iswap_plus", p, GateFamily::IswapPlus});
  const std::string a = fidelity_trace_csv(req);
  const std::string b = fidelity_trace_csv(req);
  CHECK(a == b);
}

TEST_CASE("evolve_csv starts at the identity and honors the rotating frame") {
  EvolveRequest req;
  req.params = PulseParams{1000.0, -100.0, 0.0, 0.0, 200.0};
  req.frame = Frame::Rotating;
  req.t_end = 0.03;
  req.points = 3;
  const auto lines = split_lines(evolve_csv(req));
  REQUIRE(lines.size() == 5);
  const auto header = split_cells(lines[0]);
  REQUIRE(header.size() == 33);
  CHECK(header[1] == "re_u00");
  CHECK(header[32] == "im_u33");
  // J = 0 in the rotating frame: every row is the identity matrix.
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto cells = split_cells(lines[r]);
    CHECK(std::stod(cells[1]) == doctest::Approx(1.0).epsilon(1e-9));   // re u00
    CHECK(std::stod(cells[2]) == doctest::Approx(0.0).scale(1).epsilon(1e-9));  // im u00
    CHECK(std::stod(cells[11]) == doctest::Approx(1.0).epsilon(1e-9));  // re u11
  }
}

TEST_CASE("invalid requests are rejected before any output is produced") {
  TraceRequest empty;
  empty.columns.clear();
  CHECK_THROWS_AS(fidelity_trace_csv(empty), std::invalid_argument);

  TraceRequest bad;
  bad.columns.push_back({"x", PulseParams{0.0, 0.0, 10.0, 20.0, 200.0}, GateFamily::CzConst});
  CHECK_THROWS_AS(fidelity_trace_csv(bad), std::invalid_argument);  // |J1| > J0

  CHECK_THROWS_AS(reproduce("fig9"), std::invalid_argument);
}

TEST_CASE("constant-exchange trace peaks at odd multiples of pi/J0") {
  TraceRequest req;
  req.t_end = 0.55;
  req.points = 1100;
  const PulseParams p{1000.0, -100.0, 20.0, 0.0, 270.0};
  req.columns.push_back({"f_plus", p, GateFamily::CzNresPlus});
  req.columns.push_back({"f_minus", p, GateFamily::CzNresMinus});
  const auto lines = split_lines(fidelity_trace_csv(req));

  const auto peak_near = [&](std::size_t col, double lo, double hi) {
    double best_t = 0.0, best_f = 0.0;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto cells = split_cells(lines[k]);
      const double t = std::stod(cells[0]);
      if (t < lo || t > hi) continue;
      const double f = std::stod(cells[col]);
      if (f > best_f) {
        best_f = f;
        best_t = t;
      }
    }
    return std::pair{best_t, best_f};
  };

  // J1 = 0: gate times are exactly (2n+1) pi / J0; the plus family peaks at
  // n even, the minus family at n odd.
  const auto [t0, f0] = peak_near(1, 0.05, 0.25);
  CHECK(t0 == doctest::Approx(kPi / 20.0).epsilon(0.03));
  CHECK(f0 > 0.99);
  // maxima lose height over time as the neglected detuning shift builds up
  const auto [t1, f1] = peak_near(2, 0.35, 0.55);
  CHECK(t1 == doctest::Approx(3.0 * kPi / 20.0).epsilon(0.03));
  CHECK(f1 > 0.97);
  CHECK(f1 < f0);
}

TEST_CASE("numeric cz_const noise column follows the closed-form decay") {
  // The numeric evolution carries a noiseless deficit of ~2.5e-3 against
  // the ideal diag(1,i,i,1), so the raw column tracks the closed form only
  // at that level; the measured bound is frozen here.
  NoiseSweepRequest req;
  req.recipes = {fig4_recipes()[3]};  // cz_const at tau_0 = pi/20
  req.ratios = {0.0, 0.1};
  req.quad_order = 21;
  req.evolution = Evolution::Numeric;
  const auto lines = split_lines(noise_sweep_csv(req));
  REQUIRE(lines.size() == 3);
  const double tau = kPi / 20.0;
  const double f0 = std::stod(split_cells(lines[1])[1]);
  const double f1 = std::stod(split_cells(lines[2])[1]);
  CHECK(std::abs(f0 - analytic_noise_decay(tau, 0.0)) < 5e-3);
  CHECK(std::abs(f1 - analytic_noise_decay(tau, 2.0)) < 5e-3);
  // the decay RATIO matches the closed form much more closely
  CHECK(f1 / f0 == doctest::Approx(analytic_noise_decay(tau, 2.0)).epsilon(5e-4));
}

TEST_CASE("reproduce manifests record the parameters used") {
  const auto fig2 = reproduce("fig2");
  REQUIRE(fig2.size() == 2);
  CHECK(fig2[0].first == "fig2_fidelity_trace.csv");
  CHECK(fig2[1].first == "fig2_manifest.json");
  const std::string& manifest = fig2[1].second;
  for (const char* needle :
       {"\"B\": 1000.0", "\"dB\": -100.0", "\"J0\": 20.0", "\"omega\": 200.0",
        "cz_res_plus", "cz_res_minus", "iswap_plus", "iswap_minus", "11.4285714285"}) {
    CAPTURE(needle);
    CHECK(manifest.find(needle) != std::string::npos);
  }

  const auto fig3 = reproduce("fig3");
  const std::string& man3 = fig3[1].second;
  CHECK(man3.find("270.0") != std::string::npos);
  CHECK(man3.find("400.0") != std::string::npos);
  CHECK(man3.find("\"J1\": 0.0") != std::string::npos);  // constant-exchange reference
}

TEST_CASE("fig4 recipes carry the solver gate times") {
  const auto recipes = fig4_recipes();
  REQUIRE(recipes.size() == 4);
  CHECK(recipes[0].label == "f_cz_res_minus");
  CHECK(recipes[0].tau == doctest::Approx(kPi / 4.0).epsilon(1e-9));
  CHECK(recipes[1].tau == doctest::Approx(kPi / 10.0).epsilon(1e-9));
  CHECK(recipes[2].tau == doctest::Approx(0.1598169850).epsilon(1e-8));
  CHECK(recipes[3].tau == doctest::Approx(kPi / 20.0).epsilon(1e-9));
  CHECK(recipes[3].params.J1 == 0.0);
}
