#pragma once

#include <array>
#include <cstdint>

namespace gfdiv {

// Dimension-4 Sobol sequence (Gray-code construction, Joe-Kuo direction
// numbers) with a seed-derived digital-shift scramble. Points lie in the
// open cube (0,1)^4 and the stream is reproducible from the seed alone.
class Sobol4 {
 public:
  explicit Sobol4(uint64_t seed);
  std::array<double, 4> next();

 private:
  std::array<std::array<uint32_t, 32>, 4> dir_{};
  std::array<uint32_t, 4> state_{};
  std::array<uint32_t, 4> shift_{};
  uint64_t index_ = 0;
};

}  // namespace gfdiv
