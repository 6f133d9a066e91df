#pragma once

#include "gfdiv/information.hpp"

namespace gfdiv {

enum class Verdict { kPass, kFail, kInconclusive };
const char* to_string(Verdict v);

// Outcome of a grid or random search over an inequality. PASS means "no
// violation found at the stated resolution and tolerance", not a proof; the
// report carries enough to rerun finer.
struct ScanReport {
  std::string target;
  Verdict verdict = Verdict::kPass;
  double min_gap = kInf;
  std::vector<double> witness;     // parameter tuple of the minimizing sample
  std::string witness_kind;        // "bern4" | "pair" | "grid_point" | "xalpha"
  long long samples = 0;
  int grid_res = 0;
  double tol = 0.0;
  long long inf_samples = 0;       // samples where extended reals appeared
};

// Grid ranges for the class-membership checkers (configuration knobs).
struct CheckOpts {
  double lo = 1e-4;
  double hi = 1e4;
  int grid = 2000;
  long long random_pairs = 100000;
  uint64_t seed = 0xC0FFEE;
};

// D(qY||rY) + D(qZ||rZ) - D(qY x qZ || rY x rZ); >= 0 means subadditivity
// holds at this point. Extended reals resolve so NaN never escapes: an
// infinite product side against finite marginals counts as -inf (violation).
double div_gap(const AdmissiblePair& pair, const Dist& qY, const Dist& rY,
               const Dist& qZ, const Dist& rZ);

// Scans Bernoulli parameters (x,y,r,s) -- rY=Bern(x), qY=Bern(y), rZ=Bern(r),
// qZ=Bern(s) -- over the open uniform grid {1/(res+1),...,res/(res+1)}^4 plus
// `random_samples` scrambled Sobol points. PASS iff min_gap >= -1e-9.
ScanReport binary_gap_scan(const AdmissiblePair& pair, int grid_res,
                           long long random_samples, uint64_t seed);

// Class T: g(x) = x^2 f''(x) must be non-negative and midpoint-concave on a
// log-spaced grid plus random pairs.
ScanReport check_T(const FGenerator& f, const CheckOpts& opts = {});

// Class T+: x^2 g''(x) - g(a) g(x/a) <= tol (1 + |g(a)g(x/a)|) on a 300x300
// log grid over [1e-3,1e3]^2. min_gap stores the worst normalized margin.
ScanReport check_Tplus(const ScalarFunction& g);

// Class T-: same grid protocol with the + sign.
ScanReport check_Tminus(const ScalarFunction& g);

// Midpoint concavity of u(x) = 1/G'(x) on the domain grid. Throws
// InvalidTransform when G' <= 0 at a sampled point.
ScanReport check_inv_gprime_concave(const GTransform& g,
                                    const CheckOpts& opts = {});

// Counts sign changes of H(t;lambda) - a - b t, where H(t;lambda) =
// lambda f(t) - sum_z rZ(z) f(t qZ(z)/rZ(z)), on a 1e4-point log grid over
// [1e-6,1e6] refined by bisection. A lower bound on the true root count.
int count_stationary_roots(const FGenerator& f, const Dist& qZ, const Dist& rZ,
                           double lambda, double a, double b);

// Builds the binary-X channel (row 0 -> q, row 1 -> r, Y and Z independent
// given X) and returns I(X;Y) + I(X;Z) - I(X;YZ) at each epsilon, where
// p_X = (eps, 1-eps).
std::vector<double> equivalence_probe(const AdmissiblePair& pair,
                                      const Dist& qY, const Dist& rY,
                                      const Dist& qZ, const Dist& rZ,
                                      std::span<const double> eps_grid,
                                      const SolverOpts& opts = {});

// Witness replay helpers: recompute the margin a report's witness refers to.
double replay_witness(const AdmissiblePair& pair, const ScanReport& report);
double replay_check_witness(const ScalarFunction& g, const ScanReport& report);

}  // namespace gfdiv
