#pragma once

#include "gfdiv/information.hpp"

namespace gfdiv {

struct BoundResult {
  double value = 0.0;
  std::map<std::string, double> inputs_echo;
  std::vector<std::pair<std::string, bool>> side_conditions;

  bool condition(const std::string& name) const;
};

// G( (1/M) f(M(1-eps)) + ((M-1)/M) f(M eps/(M-1)) ). The eps in {0,1} limits
// route through the generator's f(0) data instead of naive evaluation.
// Requires G convex increasing (throws ConvexityRequired otherwise).
BoundResult fano_lower(const AdmissiblePair& pair, long long M, double eps);

// fano_lower / max_igf_over_input: a lower bound on the blocklength when the
// pair is information-subadditive (caller-asserted, recorded, not verified).
// A zero-information channel yields +inf with the zero_denominator flag.
BoundResult blocklength_lower(const AdmissiblePair& pair, long long M,
                              double eps, const Channel& w,
                              const SolverOpts& opts = {},
                              bool assume_subadditive = true);

// slack = n D(p||q) - D(Bern(alpha)||Bern(beta)); non-negative slack is
// consistent with (alpha,beta) arising from an actual test on n samples.
BoundResult ht_bound_check(const AdmissiblePair& pair, const Dist& p,
                           const Dist& q, int n, double alpha, double beta);

enum class KlDirection { kPlus, kMinus };

// KL comparison bounds.
//
// PLUS (convex f, f(1)=1, f >= c x^s with s > 1): the bound
// D_KL <= log(D_f)/(s-1) holds, slack = bound - D_KL.
//
// MINUS (concave f, f(1)=1, f <= c x^s with 0 < s < 1): the stated bound
// D_KL <= D_{G,f}/(1-s) is evaluated under the product-form reading
// D_{G,f} = -log sum q f(p/q) (the 1-f convention). Numerical search shows
// the stated direction fails in general while the reversed direction
// D_KL >= D_{G,f}/(1-s) holds; both outcomes are reported as side
// conditions (stated_direction_holds / reversed_direction_holds) and the
// slack of the stated form is returned either way.
BoundResult kl_comparison(const FGenerator& f, double s, double c,
                          const Dist& p, const Dist& q, KlDirection dir);

}  // namespace gfdiv
