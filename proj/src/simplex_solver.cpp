#include "gfdiv/simplex_solver.hpp"

#include <algorithm>
#include <cmath>

namespace gfdiv {

namespace {

constexpr double kFloor = 1e-12;

void floor_normalize(std::vector<double>& q) {
  double sum = 0.0;
  for (double& v : q) {
    if (!(v > kFloor)) v = kFloor;
    sum += v;
  }
  for (double& v : q) v /= sum;
}

double grad_scale(const std::vector<double>& g) {
  double m = 0.0;
  for (double v : g)
    if (std::isfinite(v)) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

SimplexSolution simplex_minimize(const SimplexObjective& obj,
                                 std::span<const double> start, int max_iters,
                                 double tol, int patience) {
  const size_t n = start.size();
  std::vector<double> q(start.begin(), start.end());
  floor_normalize(q);
  std::vector<double> grad(n, 0.0), cand(n), cand_grad(n, 0.0);

  SimplexSolution out;
  double value = obj(q, grad.data());
  out.point = q;
  out.value = value;
  if (!std::isfinite(value)) return out;  // caller decides what +inf means

  double eta = 0.5 / std::max(grad_scale(grad), 1e-12);
  int since_improve = 0;
  int it = 0;
  for (; it < max_iters; ++it) {
    double gmin = *std::min_element(grad.begin(), grad.end());
    double cand_val = kInf;
    bool accepted = false;
    for (int tries = 0; tries < 48; ++tries) {
      for (size_t i = 0; i < n; ++i) {
        double e = -eta * (grad[i] - gmin);  // shift keeps exp() <= 1
        cand[i] = q[i] * std::exp(e);
      }
      floor_normalize(cand);
      cand_val = obj(cand, cand_grad.data());
      if (std::isfinite(cand_val) && cand_val <= value + 1e-18) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;
    if (cand_val < out.value - tol)
      since_improve = 0;
    else
      ++since_improve;
    if (cand_val < out.value) {
      out.value = cand_val;
      out.point = cand;
    }
    q.swap(cand);
    grad.swap(cand_grad);
    value = cand_val;
    eta *= 1.05;
    if (since_improve >= patience) break;
  }
  out.iters = it;

  double final_val = obj(out.point, grad.data());
  (void)final_val;
  double dot = 0.0, gmin = kInf;
  for (size_t i = 0; i < n; ++i) {
    dot += grad[i] * out.point[i];
    gmin = std::min(gmin, grad[i]);
  }
  out.fw_gap = dot - gmin;
  return out;
}

}  // namespace gfdiv
