#pragma once

#include "gfdiv/generators.hpp"
#include "gfdiv/prob.hpp"

namespace gfdiv {

struct FDivValue {
  double value;
  // True when some q(x)=0 < p(x) term used the p * slope_inf convention,
  // which extends the definition beyond absolute continuity.
  bool slope_extension_used;
};

// sum_x q(x) f(p(x)/q(x)), with 0 f(0/0) = 0 and the q=0<p terms valued at
// p(x) * slope_inf. Terms are accumulated by pairwise summation. Extended
// reals absorb divergence; never returns NaN.
double f_div(const Dist& p, const Dist& q, const FGenerator& f);
FDivValue f_div_ex(const Dist& p, const Dist& q, const FGenerator& f);

// G(D_f(p||q)). When D_f reaches g.nu (only possible at the dm = nu
// boundary), returns g.limit_at_nu.
double gf_div(const Dist& p, const Dist& q, const AdmissiblePair& pair);

// (alpha-1)^{-1} log sum p^alpha q^{1-alpha}, computed directly. Serves as an
// independent oracle for gf_div with the Renyi pair.
double renyi_div(const Dist& p, const Dist& q, double alpha);

}  // namespace gfdiv
