#include "gfdiv/divergence.hpp"

namespace gfdiv {

FDivValue f_div_ex(const Dist& p, const Dist& q, const FGenerator& f) {
  if (p.size() != q.size()) throw SizeMismatch("f_div: |p| != |q|");
  std::vector<double> terms;
  terms.reserve(size_t(p.size()));
  bool extension = false;
  bool infinite = false;
  for (int i = 0; i < p.size(); ++i) {
    double pi = p[i], qi = q[i];
    double term;
    if (qi == 0.0) {
      if (pi == 0.0) continue;  // 0 f(0/0) = 0
      if (is_indeterminate(f.slope_inf))
        throw BadParameter("f_div: generator '" + f.name + "' lacks slope_inf");
      extension = true;
      term = pi * f.slope_inf;
    } else if (pi == 0.0) {
      if (is_indeterminate(f.f0))
        throw BadParameter("f_div: generator '" + f.name + "' lacks f(0)");
      term = qi * f.f0;
    } else {
      term = qi * f.eval(pi / qi);  // ratios taken with no smoothing
    }
    if (term == kInf) infinite = true;
    terms.push_back(term);
  }
  if (infinite) return {kInf, extension};
  return {pairwise_sum(terms), extension};
}

double f_div(const Dist& p, const Dist& q, const FGenerator& f) {
  return f_div_ex(p, q, f).value;
}

double gf_div(const Dist& p, const Dist& q, const AdmissiblePair& pair) {
  double d = f_div(p, q, pair.f);
  if (d >= pair.g.nu) return pair.g.limit_at_nu;
  return pair.g.eval(d);
}

double renyi_div(const Dist& p, const Dist& q, double alpha) {
  if (!(alpha > 0) || alpha == 1.0)
    throw BadParameter("renyi_div: alpha must be in (0,1) or (1,inf)");
  if (p.size() != q.size()) throw SizeMismatch("renyi_div: |p| != |q|");
  std::vector<double> terms;
  terms.reserve(size_t(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    double pi = p[i], qi = q[i];
    if (pi == 0.0) continue;
    if (qi == 0.0) {
      if (alpha > 1) return kInf;  // p not << q
      continue;                    // q^(1-alpha) -> 0 dominates
    }
    terms.push_back(std::pow(pi, alpha) * std::pow(qi, 1.0 - alpha));
  }
  return std::log(pairwise_sum(terms)) / (alpha - 1.0);
}

}  // namespace gfdiv
