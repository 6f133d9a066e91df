#include "gfdiv/sobol.hpp"

#include "gfdiv/common.hpp"

namespace gfdiv {

namespace {

// Joe-Kuo table entries for dimensions 2..4 (dimension 1 is van der Corput):
//   d=2: s=1, a=0, m=(1)
//   d=3: s=2, a=1, m=(1,3)
//   d=4: s=3, a=1, m=(1,3,1)
struct Poly {
  int s;
  uint32_t a;
  uint32_t m[3];
};
constexpr Poly kPolys[3] = {{1, 0, {1, 0, 0}}, {2, 1, {1, 3, 0}}, {3, 1, {1, 3, 1}}};

}  // namespace

Sobol4::Sobol4(uint64_t seed) {
  // dimension 0: van der Corput
  for (int k = 0; k < 32; ++k) dir_[0][size_t(k)] = 1u << (31 - k);
  for (int d = 1; d < 4; ++d) {
    const Poly& p = kPolys[d - 1];
    uint32_t m[32];
    for (int k = 0; k < p.s; ++k) m[k] = p.m[k];
    for (int k = p.s; k < 32; ++k) {
      uint32_t v = m[k - p.s] ^ (m[k - p.s] << p.s);
      for (int j = 1; j < p.s; ++j)
        if ((p.a >> (p.s - 1 - j)) & 1u) v ^= m[k - j] << j;
      m[k] = v;
    }
    for (int k = 0; k < 32; ++k) dir_[size_t(d)][size_t(k)] = m[k] << (31 - k);
  }
  Rng rng(seed);
  for (int d = 0; d < 4; ++d)
    shift_[size_t(d)] = uint32_t(rng.next_u64() >> 32);
}

std::array<double, 4> Sobol4::next() {
  // Gray-code update: flip the direction of the lowest zero bit of index.
  uint64_t i = index_++;
  int c = 0;
  while (i & 1u) {
    i >>= 1;
    ++c;
  }
  std::array<double, 4> pt;
  for (int d = 0; d < 4; ++d) {
    state_[size_t(d)] ^= dir_[size_t(d)][size_t(c)];
    uint32_t bits = state_[size_t(d)] ^ shift_[size_t(d)];
    pt[size_t(d)] = (double(bits) + 0.5) * 0x1.0p-32;  // open interval
  }
  return pt;
}

}  // namespace gfdiv
