#include "xgate/gatesolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xgate {

namespace {

constexpr double kPi = std::numbers::pi;

// Bisect f on a sign-changing bracket [a, b] down to width tol_x, then try
// one secant polish, keeping whichever candidate has the smaller |f|.
template <typename F>
double bisect_polish(F&& f, double a, double b, double fa, double fb, double tol_x) {
  for (int it = 0; it < 200 && (b - a) > tol_x; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  double root = 0.5 * (a + b);
  double froot = f(root);
  if (fb != fa) {
    const double secant = b - fb * (b - a) / (fb - fa);
    if (secant > 0.0 && std::isfinite(secant) && std::abs(f(secant)) < std::abs(froot)) {
      root = secant;
      froot = f(secant);
    }
  }
  return root;
}

}  // namespace

std::optional<GateFamily> resonant_family(int n, int m) {
  const bool n_odd = (n % 2) != 0;
  const bool m_odd = (m % 2) != 0;
  if (n_odd && !m_odd) {
    const int n1 = (n - 1) / 2;
    const int m1 = m / 2;
    return ((n1 + m1) % 2 == 0) ? GateFamily::CzResPlus : GateFamily::CzResMinus;
  }
  if (!n_odd && m_odd) {
    const int n2 = n / 2;
    const int m2 = (m - 1) / 2;
    return ((n2 + m2) % 2 != 0) ? GateFamily::IswapPlus : GateFamily::IswapMinus;
  }
  return std::nullopt;
}

std::optional<GateSolutionRes> solve_resonant(double J0, double omega, int n, int m,
                                              double tol) {
  if (!(J0 > 0.0)) throw std::invalid_argument("solve_resonant: J0 must be > 0");
  if (!(omega > 0.0)) throw std::invalid_argument("solve_resonant: omega must be > 0");
  if (n < 1 || m < 1) throw std::invalid_argument("solve_resonant: n and m must be >= 1");

  const auto family = resonant_family(n, m);
  if (!family) return std::nullopt;

  const double target = n * kPi;
  const auto f = [&](double tau) {
    return J0 * tau + (2.0 * m * kPi / (omega * tau)) * std::sin(omega * tau) - target;
  };

  // J1 = 2 m pi / tau <= J0 restricts the search to tau >= tau_min. Beyond
  // tau_max the linear term dominates the bounded oscillation, so f > 0.
  const double tau_min = 2.0 * m * kPi / J0;
  const double tau_max = (target + J0 / omega) / J0 + 2.0 * kPi / omega;
  if (tau_min > tau_max) return std::nullopt;

  const double step = kPi / (4.0 * omega);
  const double near_root = 1e-11 * target;

  const auto make_solution = [&](double tau) -> GateSolutionRes {
    return {n, m, tau, 2.0 * m * kPi / tau, *family, std::abs(f(tau))};
  };

  double a = tau_min;
  double fa = f(a);
  if (std::abs(fa) <= near_root) return make_solution(a);
  while (a < tau_max) {
    const double b = std::min(a + step, tau_max);
    const double fb = f(b);
    if (std::abs(fb) <= near_root) return make_solution(b);
    if ((fa < 0.0) != (fb < 0.0)) {
      const double tol_x = tol * std::max(1.0, b);
      return make_solution(bisect_polish(f, a, b, fa, fb, tol_x));
    }
    a = b;
    fa = fb;
  }
  return std::nullopt;
}

std::vector<GateSolutionRes> enumerate_resonant(double J0, double omega, GateKindFilter filter,
                                                int max_n, int max_m) {
  if (max_n < 1 || max_m < 1) {
    throw std::invalid_argument("enumerate_resonant: bounds must be >= 1");
  }
  std::vector<GateSolutionRes> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 1; m <= max_m; ++m) {
      const auto family = resonant_family(n, m);
      if (!family) continue;
      const bool is_cz = (*family == GateFamily::CzResPlus || *family == GateFamily::CzResMinus);
      if (filter == GateKindFilter::Cz && !is_cz) continue;
      if (filter == GateKindFilter::Iswap && is_cz) continue;
      if (auto sol = solve_resonant(J0, omega, n, m)) out.push_back(*sol);
    }
  }
  std::sort(out.begin(), out.end(), [](const GateSolutionRes& a, const GateSolutionRes& b) {
    if (a.tau != b.tau) return a.tau < b.tau;
    if (a.n != b.n) return a.n < b.n;
    return a.m < b.m;
  });
  return out;
}

GateSolutionNres solve_nonresonant(double J0, double J1, double omega, int n, double tol) {
  if (!(J0 > 0.0)) throw std::invalid_argument("solve_nonresonant: J0 must be > 0");
  if (!(std::abs(J1) <= J0)) throw std::invalid_argument("solve_nonresonant: |J1| must be <= J0");
  if (!(omega > 0.0)) throw std::invalid_argument("solve_nonresonant: omega must be > 0");
  if (n < 0) throw std::invalid_argument("solve_nonresonant: n must be >= 0");

  const double target = (2.0 * n + 1.0) * kPi;
  const auto g = [&](double tau) {
    return J0 * tau + (J1 / omega) * std::sin(omega * tau) - target;
  };

  // g is non-decreasing (g' = J0 + J1 cos >= 0), g(0) < 0, and g > 0 past
  // (target + |J1|/omega) / J0: a guaranteed bracket.
  double lo = 0.0;
  double hi = (target + std::abs(J1) / omega) / J0;
  double ghi = g(hi);
  while (ghi < 0.0) {
    hi *= 1.5;
    ghi = g(hi);
  }
  const double tol_x = tol * std::max(1.0, hi);
  const double root = bisect_polish(g, lo, hi, g(lo), ghi, tol_x);
  const GateFamily family = (n % 2 == 0) ? GateFamily::CzNresPlus : GateFamily::CzNresMinus;
  return {n, root, family, std::abs(g(root))};
}

}  // namespace xgate
