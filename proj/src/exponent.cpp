#include "gfdiv/exponent.hpp"

#include <algorithm>
#include <cmath>

#include "gfdiv/simplex_solver.hpp"

namespace gfdiv {

namespace {

constexpr double kGold = 0.6180339887498949;

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<size_t>(n));
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    xs[size_t(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return xs;
}

// golden-section minimum of a 1-D function on [lo,hi]
double golden_min(const std::function<double(double)>& fn, double lo, double hi,
                  int iters, double* arg = nullptr) {
  double a = lo, b = hi;
  double x1 = b - kGold * (b - a), x2 = a + kGold * (b - a);
  double f1 = fn(x1), f2 = fn(x2);
  for (int k = 0; k < iters; ++k) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGold * (b - a);
      f1 = fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGold * (b - a);
      f2 = fn(x2);
    }
  }
  double xm = f1 <= f2 ? x1 : x2;
  if (arg) *arg = xm;
  return std::min(f1, f2);
}

}  // namespace

SFamily power_family() {
  SFamily fam;
  fam.name = "power";
  fam.eval = [](double s, double t) { return std::pow(t, s); };
  fam.d1 = [](double s, double t) { return s * std::pow(t, s - 1.0); };
  fam.slope_at_inf = [](double) { return 0.0; };
  return fam;
}

double mu_x(double s, const Dist& q, const Channel& w, int x,
            const SFamily& fam) {
  if (!(s > 0 && s < 1)) throw BadParameter("mu_x: s outside (0,1)");
  if (x < 0 || x >= w.nx()) throw BadParameter("mu_x: row index out of range");
  const Dist& row = w.row(x);
  if (q.size() != row.size()) throw SizeMismatch("mu_x: |q| != ny");
  std::vector<double> terms;
  terms.reserve(size_t(q.size()));
  double slope = fam.slope_at_inf ? fam.slope_at_inf(s) : 0.0;
  for (int y = 0; y < q.size(); ++y) {
    double wy = row[y], qy = q[y];
    if (wy == 0.0) {
      if (qy > 0.0) terms.push_back(qy * slope);
      continue;
    }
    terms.push_back(wy * fam.eval(s, qy / wy));
  }
  return std::log(pairwise_sum(terms));
}

namespace {

// One value of the inner game at fixed s: sup_p inf_q of
// sum_x p(x) c_x(q) - sR/(1-s), with c_x = -log D_{f_s}(q||W_x) / (1-s).
struct GameResult {
  double lower = -kInf, upper = kInf;
  std::vector<double> p, q;
};

GameResult solve_game(const Channel& w, double rate, double s,
                      const SFamily& fam, std::vector<double> p_warm,
                      const SolverOpts& opts) {
  const int nx = w.nx(), ny = w.ny();
  const double shift = s * rate / (1.0 - s);
  double slope = fam.slope_at_inf ? fam.slope_at_inf(s) : 0.0;

  std::vector<double> p =
      p_warm.empty() ? std::vector<double>(size_t(nx), 1.0 / nx)
                     : std::move(p_warm);
  if (opts.assume_permutation_invariant)
    p.assign(size_t(nx), 1.0 / nx);

  auto objective = [&](std::span<const double> q, double* grad) {
    if (grad)
      for (int y = 0; y < ny; ++y) grad[y] = 0.0;
    double val = 0.0;
    std::vector<double> terms(static_cast<size_t>(ny)), dterm(static_cast<size_t>(ny));
    for (int x = 0; x < nx; ++x) {
      double px = p[size_t(x)];
      if (px == 0.0) continue;
      const Dist& row = w.row(x);
      for (int y = 0; y < ny; ++y) {
        double wy = row[y], qy = q[size_t(y)];
        if (wy == 0.0) {
          terms[size_t(y)] = qy * slope;
          dterm[size_t(y)] = slope;
        } else {
          terms[size_t(y)] = wy * fam.eval(s, qy / wy);
          if (grad) dterm[size_t(y)] = fam.d1(s, qy / wy);
        }
      }
      double dx = pairwise_sum(terms);
      if (!(dx > 0)) return kInf;
      val += px * (-std::log(dx)) / (1.0 - s);
      if (grad) {
        double coef = -px / (dx * (1.0 - s));
        for (int y = 0; y < ny; ++y) grad[y] += coef * dterm[size_t(y)];
      }
    }
    return val;
  };

  GameResult res;
  Dist q_init = push_forward(Dist(p), w);
  std::vector<double> q0(q_init.probs().begin(), q_init.probs().end());
  const int rounds = opts.assume_permutation_invariant ? 1 : 50;
  for (int round = 0; round < rounds; ++round) {
    SimplexSolution sol =
        simplex_minimize(objective, q0, opts.max_iters, opts.tol, 50);
    if (!std::isfinite(sol.value)) return res;
    q0 = sol.point;  // warm start for the next round

    // per-row payoffs at the current q*
    std::vector<double> c(static_cast<size_t>(nx));
    double cmax = -kInf, cavg = 0.0;
    for (int x = 0; x < nx; ++x) {
      c[size_t(x)] = -mu_x(s, Dist(sol.point), w, x, fam) / (1.0 - s);
      cmax = std::max(cmax, c[size_t(x)]);
      cavg += p[size_t(x)] * c[size_t(x)];
    }
    double lower = cavg - shift;       // value at this p, inner solved
    double upper = cmax - shift;       // sup_p at this fixed q
    if (lower > res.lower) {
      res.lower = lower;
      res.p = p;
      res.q = sol.point;
    }
    res.upper = std::min(res.upper, upper);
    if (cmax - cavg < 1e-12) break;    // stationary input
    double sum = 0.0;
    for (int x = 0; x < nx; ++x) {
      p[size_t(x)] *= std::exp(c[size_t(x)] - cmax);
      sum += p[size_t(x)];
    }
    for (int x = 0; x < nx; ++x) p[size_t(x)] /= sum;
  }
  return res;
}

}  // namespace

EfspResult efsp(const Channel& w, double rate, const SFamily& fam,
                const SolverOpts& opts) {
  if (!(rate > 0)) throw BadParameter("efsp: rate must be positive");
  bool positive = true;
  for (int x = 0; x < w.nx(); ++x)
    for (int y = 0; y < w.ny(); ++y)
      if (w.row(x)[y] <= 0.0) positive = false;

  GameResult best;
  double best_s = 0.5;
  std::vector<double> p_warm;
  std::vector<double> grid_values;
  for (int i = 1; i <= 99; ++i) {
    double s = i / 100.0;
    GameResult g = solve_game(w, rate, s, fam, p_warm, opts);
    p_warm = g.p;
    grid_values.push_back(g.lower);
    if (g.lower > best.lower) {
      best = g;
      best_s = s;
    }
  }
  // Channels with zeros can push the bracket without bound as s -> 1 at low
  // rates; report +inf instead of the truncated grid maximum.
  if (!positive && best_s >= 0.99 && grid_values.size() >= 10) {
    bool growing = true;
    for (size_t i = grid_values.size() - 9; i < grid_values.size(); ++i)
      if (grid_values[i] <= grid_values[i - 1] + 1e-9) growing = false;
    if (growing) {
      EfspResult out;
      out.value = kInf;
      out.cert.s_star = 0.99;
      out.cert.p_star = best.p;
      out.cert.q_star = best.q;
      out.cert.lower = best.lower;
      out.cert.upper = kInf;
      out.cert.converged = false;
      out.cert.positive_channel = positive;
      return out;
    }
  }
  // golden refinement around the best grid point
  double lo = std::max(1e-4, best_s - 0.01), hi = std::min(1.0 - 1e-4, best_s + 0.01);
  GameResult refined = best;
  double refined_s = best_s;
  golden_min(
      [&](double s) {
        GameResult g = solve_game(w, rate, s, fam, best.p, opts);
        if (g.lower > refined.lower) {
          refined = g;
          refined_s = s;
        }
        return -g.lower;
      },
      lo, hi, 30);

  EfspResult out;
  out.cert.s_star = refined_s;
  out.cert.p_star = refined.p;
  out.cert.q_star = refined.q;
  out.cert.lower = refined.lower;
  out.cert.upper = refined.upper;
  out.cert.converged = refined.upper - refined.lower <= 1e-6;
  out.cert.positive_channel = positive;
  out.value = std::max(0.0, refined.lower);
  return out;
}

ExponentCurve efsp_curve(const Channel& w, std::span<const double> rates,
                         const SFamily& fam, const SolverOpts& opts) {
  ExponentCurve curve;
  for (double r : rates) {
    EfspResult res = efsp(w, r, fam, opts);
    curve.rate_grid.push_back(r);
    curve.values.push_back(res.value);
    curve.per_point.push_back(res.cert);
  }
  return curve;
}

// ---------------------------------------------------------------------------
// Classical Shannon-Gallager-Berlekamp oracle (independent optimizer)
// ---------------------------------------------------------------------------

namespace {

struct E0Problem {
  std::vector<std::vector<double>> a;  // a[x][y] = W(y|x)^(1/(1+rho))
  double rho;
  int nx, ny;

  double F(const std::vector<double>& p) const {
    double total = 0.0;
    for (int y = 0; y < ny; ++y) {
      double col = 0.0;
      for (int x = 0; x < nx; ++x) col += p[size_t(x)] * a[size_t(x)][size_t(y)];
      total += std::pow(col, 1.0 + rho);
    }
    return total;
  }
};

}  // namespace

double gallager_e0_max(const Channel& w, double rho,
                       std::vector<double>* p_out) {
  const int nx = w.nx(), ny = w.ny();
  E0Problem prob;
  prob.rho = rho;
  prob.nx = nx;
  prob.ny = ny;
  prob.a.assign(size_t(nx), std::vector<double>(size_t(ny)));
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      prob.a[size_t(x)][size_t(y)] = std::pow(w.row(x)[y], 1.0 / (1.0 + rho));

  std::vector<double> p(size_t(nx), 1.0 / nx);
  if (rho == 0.0) {
    if (p_out) *p_out = p;
    return 0.0;  // F = sum_y sum_x p W = 1 for any p
  }

  // Frank-Wolfe with golden line search on the convex potential F
  std::vector<double> grad(static_cast<size_t>(nx));
  for (int it = 0; it < 300; ++it) {
    for (int x = 0; x < nx; ++x) grad[size_t(x)] = 0.0;
    for (int y = 0; y < ny; ++y) {
      double col = 0.0;
      for (int x = 0; x < nx; ++x) col += p[size_t(x)] * prob.a[size_t(x)][size_t(y)];
      double colr = (1.0 + rho) * std::pow(col, rho);
      for (int x = 0; x < nx; ++x) grad[size_t(x)] += colr * prob.a[size_t(x)][size_t(y)];
    }
    int v = 0;
    for (int x = 1; x < nx; ++x)
      if (grad[size_t(x)] < grad[size_t(v)]) v = x;
    double dot = 0.0;
    for (int x = 0; x < nx; ++x) dot += grad[size_t(x)] * p[size_t(x)];
    if (dot - grad[size_t(v)] < 1e-14) break;  // FW gap closed
    auto along = [&](double t) {
      std::vector<double> cand(p);
      for (int x = 0; x < nx; ++x) cand[size_t(x)] *= (1.0 - t);
      cand[size_t(v)] += t;
      return prob.F(cand);
    };
    double t_star;
    golden_min(along, 0.0, 1.0, 50, &t_star);
    for (int x = 0; x < nx; ++x) p[size_t(x)] *= (1.0 - t_star);
    p[size_t(v)] += t_star;
  }

  // pairwise exchange polish: fine convergence near interior optima
  for (int sweep = 0; sweep < 8; ++sweep) {
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < nx; ++j) {
        if (i == j) continue;
        double span = p[size_t(i)];
        if (span <= 0) continue;
        auto along = [&](double t) {
          std::vector<double> cand(p);
          cand[size_t(i)] -= t;
          cand[size_t(j)] += t;
          return prob.F(cand);
        };
        double t_star;
        golden_min(along, 0.0, span, 60, &t_star);
        if (along(t_star) < prob.F(p)) {
          p[size_t(i)] -= t_star;
          p[size_t(j)] += t_star;
        }
      }
    }
  }

  if (p_out) *p_out = p;
  return -std::log(prob.F(p));
}

double classical_sp_oracle(const Channel& w, double rate) {
  if (!(rate > 0)) throw BadParameter("classical_sp_oracle: rate must be positive");
  auto h = [&](double rho) { return gallager_e0_max(w, rho) - rho * rate; };
  std::vector<double> rhos = {0.0};
  for (double r : log_grid(1e-3, 100.0, 240)) rhos.push_back(r);
  double best = -kInf;
  size_t best_i = 0;
  for (size_t i = 0; i < rhos.size(); ++i) {
    double v = h(rhos[i]);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  double lo = rhos[best_i > 0 ? best_i - 1 : 0];
  double hi = rhos[std::min(best_i + 1, rhos.size() - 1)];
  if (hi > lo) {
    double refined = -golden_min([&](double r) { return -h(r); }, lo, hi, 60);
    best = std::max(best, refined);
  }
  return std::max(0.0, best);
}

// ---------------------------------------------------------------------------
// psi-family predicate
// ---------------------------------------------------------------------------

PsiCheckReport check_psi_family(
    const std::function<double(double, double)>& psi) {
  PsiCheckReport rep;
  const double tol = 1e-7;
  auto consider = [&](double margin, int cond, double s, double x, double y) {
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.witness = {s, x, y};
      if (margin < -tol && rep.pass) {
        rep.pass = false;
        rep.failed_condition = cond;
      }
    }
  };

  std::vector<double> s_grid;
  for (int i = 1; i <= 9; ++i) s_grid.push_back(i / 10.0);
  std::vector<double> x_grid;
  for (int i = -20; i <= 20; ++i) x_grid.push_back(0.4 * i);

  for (double s : s_grid) {
    auto phi = [&](double x) {
      Fn base = [&](double t) { return psi(s, t); };
      double c1 = (1 - 2 * s) / (s * (1 - s));
      double c2 = 1.0 / (s * (1 - s));
      return psi(s, x) + c1 * fd_d1(base, x) - c2 * fd_d2(base, x);
    };
    consider(tol - std::abs(psi(s, 0.0) - 1.0), 1, s, 0.0, 0.0);
    for (double x : x_grid) consider(phi(x), 2, s, x, 0.0);
    double c1 = (1 - 2 * s) / (s * (1 - s));
    double c2 = 1.0 / (s * (1 - s));
    for (double x : x_grid) {
      double lhs = phi(x) + c1 * fd_d1(phi, x) - c2 * fd_d2(phi, x);
      for (double y : x_grid)
        consider(lhs - phi(y) * phi(x - y), 3, s, x, y);
    }
  }
  if (rep.worst_margin >= -tol) rep.pass = true;
  return rep;
}

}  // namespace gfdiv
