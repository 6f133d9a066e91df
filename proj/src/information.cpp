#include "gfdiv/information.hpp"

#include <algorithm>
#include <cmath>

#include "gfdiv/simplex_solver.hpp"

namespace gfdiv {

namespace {

// Value and gradient of q -> sum_x p(x) G(D_f(W_x || q)) for interior q.
// Terms with W_x(y) = 0 contribute q(y) f(0) to D_x and f(0) to its gradient.
struct IgfObjective {
  const Dist* p;
  const Channel* w;
  const AdmissiblePair* pair;

  double operator()(std::span<const double> q, double* grad) const {
    const FGenerator& f = pair->f;
    const GTransform& g = pair->g;
    const int nx = w->nx(), ny = w->ny();
    if (grad)
      for (int y = 0; y < ny; ++y) grad[y] = 0.0;
    double value = 0.0;
    std::vector<double> terms(static_cast<size_t>(ny));
    std::vector<double> dterm(static_cast<size_t>(ny));
    for (int x = 0; x < nx; ++x) {
      double px = (*p)[x];
      if (px == 0.0) continue;
      const Dist& row = w->row(x);
      for (int y = 0; y < ny; ++y) {
        double wy = row[y], qy = q[size_t(y)];
        if (wy == 0.0) {
          terms[size_t(y)] = qy * f.f0;
          dterm[size_t(y)] = f.f0;
        } else {
          double t = wy / qy;
          terms[size_t(y)] = qy * f.eval(t);
          if (grad) dterm[size_t(y)] = f.eval(t) - t * f.deriv1(t);
        }
      }
      double dx = pairwise_sum(terms);
      double gx = dx >= g.nu ? g.limit_at_nu : g.eval(dx);
      value += px * gx;
      if (!std::isfinite(value)) return kInf;
      if (grad) {
        double gp = g.deriv1(dx);
        for (int y = 0; y < ny; ++y) grad[y] += px * gp * dterm[size_t(y)];
      }
    }
    return value;
  }
};

std::vector<double> dirichlet_draw(Rng& rng, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : v) {
    x = rng.next_exp();
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

}  // namespace

InfoResult igf_info(const Dist& p, const Channel& w, const AdmissiblePair& pair,
                    const SolverOpts& opts) {
  if (p.size() != w.nx()) throw SizeMismatch("igf_info: |p| != nx");
  IgfObjective obj{&p, &w, &pair};
  SimplexObjective fn = [&obj](std::span<const double> q, double* grad) {
    return obj(q, grad);
  };

  Dist marginal = push_forward(p, w);
  int restarts = std::max(1, opts.restarts);
  Rng rng(opts.seed);

  InfoResult res;
  res.restarts_used = restarts;
  bool have = false;
  double best = kInf, worst = -kInf;
  SimplexSolution best_sol;
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start =
        r == 0 ? std::vector<double>(marginal.probs().begin(),
                                     marginal.probs().end())
               : dirichlet_draw(rng, w.ny());
    SimplexSolution sol =
        simplex_minimize(fn, start, opts.max_iters, opts.tol, 50);
    if (!std::isfinite(sol.value)) continue;
    best = std::min(best, sol.value);
    worst = std::max(worst, sol.value);
    if (!have || sol.value < best_sol.value) {
      best_sol = sol;
      have = true;
    }
    res.solver_iters += sol.iters;
  }
  if (!have)
    throw NonFiniteObjective("igf_info: every restart stayed at +inf");

  // extra polish rounds for a certified stationary point
  for (int round = 0; round < 4 && best_sol.fw_gap > 1e-9; ++round) {
    SimplexSolution again = simplex_minimize(fn, best_sol.point, opts.max_iters,
                                             opts.tol, 200);
    if (again.value <= best_sol.value) best_sol = again;
  }

  res.value = best_sol.value;
  res.argmin_q = Dist(best_sol.point);
  res.certified_gap = worst - best;
  res.kkt_residual = best_sol.fw_gap;
  return res;
}

std::pair<double, Dist> max_igf_over_input(const Channel& w,
                                           const AdmissiblePair& pair,
                                           const SolverOpts& opts) {
  const int nx = w.nx();
  if (opts.assume_permutation_invariant) {
    Dist u = Dist::uniform(nx);
    return {igf_info(u, w, pair, opts).value, u};
  }

  SolverOpts inner = opts;
  inner.restarts = std::min(opts.restarts, 4);

  std::vector<double> p(size_t(nx), 1.0 / nx);
  for (int it = 0; it < 300; ++it) {
    InfoResult r = igf_info(Dist(p), w, pair, inner);
    std::vector<double> super(static_cast<size_t>(nx));
    double smax = -kInf, weighted = 0.0;
    for (int x = 0; x < nx; ++x) {
      double dx = f_div(w.row(x), r.argmin_q, pair.f);
      super[size_t(x)] =
          dx >= pair.g.nu ? pair.g.limit_at_nu : pair.g.eval(dx);
      smax = std::max(smax, super[size_t(x)]);
      weighted += p[size_t(x)] * super[size_t(x)];
    }
    // stationary when no coordinate can improve on the current average
    if (smax - weighted < 1e-13) break;
    double sum = 0.0;
    for (int x = 0; x < nx; ++x) {
      p[size_t(x)] *= std::exp(super[size_t(x)] - smax);
      sum += p[size_t(x)];
    }
    for (int x = 0; x < nx; ++x) p[size_t(x)] /= sum;
  }
  Dist p_star = Dist(p);
  double v_star = igf_info(p_star, w, pair, opts).value;

  // vertex tie-break on flat objectives
  double vmax = -kInf;
  int arg = 0;
  for (int i = 0; i < nx; ++i) {
    double vi = igf_info(Dist::point_mass(nx, i), w, pair, inner).value;
    if (vi > vmax + 1e-10) {
      vmax = vi;
      arg = i;
    }
  }
  if (v_star <= vmax + 1e-10) return {vmax, Dist::point_mass(nx, arg)};
  return {v_star, p_star};
}

Channel compose(const Channel& w, const Channel& v) {
  if (w.ny() != v.nx()) throw SizeMismatch("compose: w.ny != v.nx");
  std::vector<Dist> rows;
  rows.reserve(size_t(w.nx()));
  for (int x = 0; x < w.nx(); ++x) rows.push_back(push_forward(w.row(x), v));
  return Channel(std::move(rows));
}

}  // namespace gfdiv
