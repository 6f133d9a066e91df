#include "gfdiv/common.hpp"

#include <cstdio>
#include <cstdlib>
#include <thread>

namespace gfdiv {

namespace {

double pairwise_sum_rec(const double* xs, size_t n) {
  if (n <= 8) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += xs[i];
    return acc;
  }
  size_t half = n / 2;
  return pairwise_sum_rec(xs, half) + pairwise_sum_rec(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum_rec(xs.data(), xs.size());
}

std::string fmt_g(double v, int sig) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
  return buf;
}

int thread_cap() {
  const char* env = std::getenv("GFDIV_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  if (n < 1) return 1;
  return n;
}

void parallel_chunks(int n_chunks, const std::function<void(int)>& work) {
  int threads = std::min(thread_cap(), n_chunks);
  if (threads <= 1) {
    for (int c = 0; c < n_chunks; ++c) work(c);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (int c = t; c < n_chunks; c += threads) work(c);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace gfdiv
