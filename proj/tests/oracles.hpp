#pragma once

// Independent test oracles. Everything here recomputes expected values by a
// route different from the library code it checks.

#include <cmath>
#include <vector>

#include "gfdiv/prob.hpp"

namespace oracles {

using gfdiv::Channel;
using gfdiv::Dist;
using gfdiv::Rng;

// Shannon mutual information in nats via the closed form
// sum_x p(x) sum_y W(y|x) log(W(y|x)/m(y)) with m the output marginal.
inline double shannon_mi(const Dist& p, const Channel& w) {
  Dist m = push_forward(p, w);
  double total = 0.0;
  for (int x = 0; x < w.nx(); ++x) {
    for (int y = 0; y < w.ny(); ++y) {
      double wy = w.row(x)[y];
      if (wy > 0.0 && p[x] > 0.0) total += p[x] * wy * std::log(wy / m[y]);
    }
  }
  return total;
}

// Gallager E0 for the BSC with uniform input, closed form.
inline double bsc_e0(double delta, double rho) {
  double e = 1.0 / (1.0 + rho);
  return rho * std::log(2.0) -
         (1.0 + rho) * std::log(std::pow(delta, e) + std::pow(1.0 - delta, e));
}

// Dense-sampling root counter: sign changes of fn over a 1e6-point log grid.
template <typename F>
int dense_sign_changes(const F& fn, double lo, double hi, int n = 1000000) {
  double llo = std::log(lo), lhi = std::log(hi);
  int count = 0;
  double prev = fn(std::exp(llo));
  for (int i = 1; i < n; ++i) {
    double t = std::exp(llo + (lhi - llo) * i / (n - 1));
    double cur = fn(t);
    if (prev == 0.0)
      ++count;
    else if (prev * cur < 0)
      ++count;
    prev = cur;
  }
  return count;
}

// Monte-Carlo simulation of the threshold rule "decide 1 when at least k of
// n Bernoulli(theta) draws succeed". Returns the acceptance frequency.
inline double mc_threshold_rate(double theta, int n, int k, uint64_t seed,
                                long long trials = 1000000) {
  Rng rng(seed);
  long long hits = 0;
  for (long long t = 0; t < trials; ++t) {
    int successes = 0;
    for (int i = 0; i < n; ++i)
      if (rng.next_unit() < theta) ++successes;
    if (successes >= k) ++hits;
  }
  return double(hits) / double(trials);
}

// Exact binomial tail P[Bin(n,theta) >= k].
inline double binom_tail(double theta, int n, int k) {
  double total = 0.0;
  for (int j = k; j <= n; ++j) {
    double logc = std::lgamma(n + 1) - std::lgamma(j + 1) - std::lgamma(n - j + 1);
    total += std::exp(logc + j * std::log(theta) + (n - j) * std::log1p(-theta));
  }
  return std::min(total, 1.0);
}

inline Dist random_dist(Rng& rng, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  double sum = 0.0;
  for (double& x : v) {
    x = rng.next_exp();
    sum += x;
  }
  for (double& x : v) x /= sum;
  return Dist(std::move(v));
}

inline Channel random_channel(Rng& rng, int nx, int ny) {
  std::vector<Dist> rows;
  for (int x = 0; x < nx; ++x) rows.push_back(random_dist(rng, ny));
  return Channel(std::move(rows));
}

inline double total_variation(const Dist& a, const Dist& b) {
  double tv = 0.0;
  for (int i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return tv / 2.0;
}

}  // namespace oracles
