#pragma once

#include <array>

#include "gfdiv/information.hpp"

namespace gfdiv {

// s-indexed generator family f_s(t) = t^s psi_s(log t), s in (0,1).
struct SFamily {
  std::string name;
  std::function<double(double, double)> eval;  // (s, t) -> f_s(t)
  std::function<double(double, double)> d1;    // (s, t) -> d f_s / dt
  double psi_lo = 1.0, psi_hi = 1.0;           // recorded bounds on psi_s
  std::function<double(double)> slope_at_inf;  // s -> lim f_s(t)/t; 0 default
};

// The classical choice psi_s = 1, i.e. f_s(t) = t^s.
SFamily power_family();

// log D_{f_s}(q || W_row(x)); for f_s = t^s this is
// log sum_y W(y|x)^{1-s} q(y)^s.
double mu_x(double s, const Dist& q, const Channel& w, int x,
            const SFamily& fam);

struct EfspCert {
  double s_star = 0.0;
  std::vector<double> p_star, q_star;
  // Game bracket at s_star: lower from the input ascent, upper from the best
  // visited output law. converged means the bracket closed to 1e-6.
  double lower = 0.0, upper = 0.0;
  bool converged = true;
  bool positive_channel = true;  // W strictly positive (flag, not enforced)
};

struct EfspResult {
  double value = 0.0;
  EfspCert cert;
};

// sup over p and s in (0,1), inf over q of
//   [ -sum_x p(x) mu_x(s,q)/(1-s) - s R/(1-s) ],
// clamped below at 0. s is scanned on {0.01,...,0.99} and golden-section
// refined; the inner inf runs on the shared mirror-descent machinery; the
// outer sup over p by supergradient ascent.
EfspResult efsp(const Channel& w, double rate, const SFamily& fam,
                const SolverOpts& opts = {});

struct ExponentCurve {
  std::vector<double> rate_grid;
  std::vector<double> values;
  std::vector<EfspCert> per_point;
};

ExponentCurve efsp_curve(const Channel& w, std::span<const double> rates,
                         const SFamily& fam, const SolverOpts& opts = {});

// Independent validation target: sup_{rho in [0,100]} [max_p E0(rho,p) - rho R]
// with E0(rho,p) = -log sum_y (sum_x p(x) W(y|x)^{1/(1+rho)})^{1+rho},
// maximized over p by a separate simplex optimizer (Frank-Wolfe plus pairwise
// exchange polish). Shares no code with efsp.
double classical_sp_oracle(const Channel& w, double rate);

// E0 value and the maximizing input for one rho (exposed for tests).
double gallager_e0_max(const Channel& w, double rho,
                       std::vector<double>* p_out = nullptr);

// Numerical predicate for the three conditions an exponent family
// psi: (s, x) -> psi_s(x) must satisfy (unit value at 0, phi_s >= 0, and the
// phi_s product inequality). Derivatives in x by central differences.
struct PsiCheckReport {
  bool pass = true;
  int failed_condition = 0;            // 1..3 when pass is false
  double worst_margin = kInf;
  std::array<double, 3> witness{};     // (s, x, y)
};
PsiCheckReport check_psi_family(
    const std::function<double(double, double)>& psi);

}  // namespace gfdiv
