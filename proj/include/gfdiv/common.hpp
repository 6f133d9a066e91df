#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfdiv {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A limit probe that failed to settle. All comparisons with it are false,
// so admissibility checks that involve it fail closed.
inline double indeterminate() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_indeterminate(double v) { return std::isnan(v); }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeMismatch : Error { using Error::Error; };
struct DomainViolation : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct ConvexityRequired : Error { using Error::Error; };
struct NonFiniteObjective : Error { using Error::Error; };
struct InvalidTransform : Error { using Error::Error; };
struct BadInput : Error { using Error::Error; };

// Pairwise (tree) summation. Keeps product/additivity identities tight on
// alphabets up to 1e4 and is independent of any parallel split.
double pairwise_sum(std::span<const double> xs);

// SplitMix64-based generator. Unlike <random> distributions, every draw here
// is bit-reproducible across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // [0,1)
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }
  // (0,1)
  double next_open() { return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53; }
  double next_exp() { return -std::log(next_open()); }
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

 private:
  uint64_t state_;
};

// printf-style "%.<sig>g" rendering used for all numeric report output.
std::string fmt_g(double v, int sig);

// Thread cap from GFDIV_THREADS (>=1); defaults to 1.
int thread_cap();

// Runs `work(chunk)` for chunk in [0, n_chunks) on up to thread_cap() threads.
// Chunk decomposition is fixed, so reductions done per chunk and merged in
// chunk order give identical results for any thread count.
void parallel_chunks(int n_chunks, const std::function<void(int)>& work);

}  // namespace gfdiv
