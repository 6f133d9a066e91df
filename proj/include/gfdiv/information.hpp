#pragma once

#include "gfdiv/divergence.hpp"
#include "gfdiv/prob.hpp"

namespace gfdiv {

struct SolverOpts {
  int restarts = 20;
  int max_iters = 10000;
  double tol = 1e-12;
  uint64_t seed = 0xC0FFEE;
  bool assume_permutation_invariant = false;
};

struct InfoResult {
  double value = 0.0;
  Dist argmin_q{std::vector<double>{1.0}};
  int solver_iters = 0;
  int restarts_used = 0;
  // Spread (max - min) of the per-restart optima; surfaces non-convexity.
  double certified_gap = 0.0;
  // Frank-Wolfe gap at argmin_q; certifies optimality when G is convex.
  double kkt_residual = 0.0;
};

// I_{G,f}(X;Y) = min over q of sum_x p(x) G(D_f(W_row(x) || q)), by mirror
// descent with multi-restart (restart 0 warm-starts at the output marginal).
// Throws NonFiniteObjective when every restart stays at +inf.
InfoResult igf_info(const Dist& p, const Channel& w, const AdmissiblePair& pair,
                    const SolverOpts& opts = {});

// Supremum of p -> igf_info(p, ...) over the input simplex, by supergradient
// ascent; the supergradient at p is the vector of G(D_f(W_row(x) || q*)).
// Flat objectives (within 1e-10) tie-break to the smallest-index vertex.
std::pair<double, Dist> max_igf_over_input(const Channel& w,
                                           const AdmissiblePair& pair,
                                           const SolverOpts& opts = {});

// (W then V)(z|x) = sum_y V(z|y) W(y|x).
Channel compose(const Channel& w, const Channel& v);

}  // namespace gfdiv
