#include "gfdiv/bounds.hpp"

#include <cmath>

namespace gfdiv {

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<size_t>(n));
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    xs[size_t(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return xs;
}

}  // namespace

bool BoundResult::condition(const std::string& name) const {
  for (const auto& [k, v] : side_conditions)
    if (k == name) return v;
  return false;
}

BoundResult fano_lower(const AdmissiblePair& pair, long long M, double eps) {
  if (M < 2) throw BadParameter("fano_lower: M < 2");
  if (eps < 0 || eps > 1) throw BadParameter("fano_lower: eps outside [0,1]");
  if (!pair.g.convex_flag)
    throw ConvexityRequired("fano_lower: transform '" + pair.g.name +
                            "' is not convex increasing");
  const FGenerator& f = pair.f;
  double md = double(M);
  double inner =
      f.at(md * (1.0 - eps)) / md + (md - 1.0) / md * f.at(md * eps / (md - 1.0));
  BoundResult r;
  r.inputs_echo = {{"M", md}, {"eps", eps}};
  r.side_conditions = {{"g_convex", true}};
  r.value = inner >= pair.g.nu ? pair.g.limit_at_nu : pair.g.eval(inner);
  return r;
}

BoundResult blocklength_lower(const AdmissiblePair& pair, long long M,
                              double eps, const Channel& w,
                              const SolverOpts& opts, bool assume_subadditive) {
  BoundResult fano = fano_lower(pair, M, eps);
  double denom = max_igf_over_input(w, pair, opts).first;
  BoundResult r;
  r.inputs_echo = fano.inputs_echo;
  r.inputs_echo["max_igf"] = denom;
  r.side_conditions = {{"g_convex", true},
                       {"pair_subadditive_assumed", assume_subadditive},
                       {"zero_denominator", denom < 1e-15}};
  r.value = denom < 1e-15 ? kInf : fano.value / denom;
  return r;
}

BoundResult ht_bound_check(const AdmissiblePair& pair, const Dist& p,
                           const Dist& q, int n, double alpha, double beta) {
  if (n < 1) throw BadParameter("ht_bound_check: n < 1");
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
    throw BadParameter("ht_bound_check: alpha or beta outside [0,1]");
  double word = n * gf_div(p, q, pair);
  double test = gf_div(Dist::bernoulli(alpha), Dist::bernoulli(beta), pair);
  BoundResult r;
  r.value = word - test;  // slack; DPI guarantees >= 0 for realizable tests
  r.inputs_echo = {{"n", double(n)}, {"alpha", alpha}, {"beta", beta}};
  r.side_conditions = {{"pair_subadditive_assumed", true}};
  return r;
}

BoundResult kl_comparison(const FGenerator& f, double s, double c,
                          const Dist& p, const Dist& q, KlDirection dir) {
  static const FGenerator kKl = catalog_f("kl");
  if (f.norm_tag != NormTag::kOneAtOne)
    throw BadParameter("kl_comparison: generator must satisfy f(1)=1");
  double dkl = f_div(p, q, kKl);
  double dsum = f_div(p, q, f);  // sum_x q f(p/q), f(1)=1 convention
  BoundResult r;
  r.inputs_echo = {{"s", s}, {"c", c}, {"d_kl", dkl}};

  bool envelope_ok = true;
  double worst_envelope = kInf;
  for (double x : log_grid(1e-3, 1e3, 100)) {
    double margin = f.eval(x) - c * std::pow(x, s);
    if (dir == KlDirection::kMinus) margin = -margin;
    worst_envelope = std::min(worst_envelope, margin);
    if (margin < -1e-9 * (1 + std::abs(f.eval(x)))) envelope_ok = false;
  }
  r.inputs_echo["envelope_margin"] = worst_envelope;

  double bound;
  if (dir == KlDirection::kPlus) {
    if (!(s > 1)) throw BadParameter("kl_comparison PLUS: s must exceed 1");
    if (f.concave) throw BadParameter("kl_comparison PLUS: f must be convex");
    bound = std::log(dsum) / (s - 1.0);
  } else {
    if (!(s > 0 && s < 1))
      throw BadParameter("kl_comparison MINUS: s outside (0,1)");
    if (!f.concave) throw BadParameter("kl_comparison MINUS: f must be concave");
    bound = -std::log(dsum) / (1.0 - s);  // 1-f convention of the minus track
    r.side_conditions.emplace_back("uses_one_minus_f_convention", true);
  }
  r.value = bound - dkl;
  r.inputs_echo["bound"] = bound;
  r.side_conditions.emplace_back("envelope_ok", envelope_ok);
  r.side_conditions.emplace_back("stated_direction_holds", r.value >= -1e-10);
  r.side_conditions.emplace_back("reversed_direction_holds",
                                 -r.value >= -1e-10);
  return r;
}

}  // namespace gfdiv
