#pragma once

#include <vector>

#include "gfdiv/common.hpp"

namespace gfdiv {

// Probability vector on a finite alphabet. Immutable after construction, so
// values are safe to share across threads.
//
// Construction clamps negatives within 1e-15 of zero, rejects anything more
// negative, and renormalizes by the sum when it is within 1e-9 of one
// (rejects otherwise). This keeps iterated products from drifting.
class Dist {
 public:
  explicit Dist(std::vector<double> probs);

  // (p1, 1-p1)
  static Dist bernoulli(double p1);
  static Dist uniform(int n);
  static Dist point_mass(int n, int i);

  int size() const { return int(p_.size()); }
  double operator[](int i) const { return p_[size_t(i)]; }
  std::span<const double> probs() const { return p_; }

  bool operator==(const Dist& o) const { return p_ == o.p_; }

 private:
  std::vector<double> p_;
};

// Row-major product: entry (i,j) of a x b is a_i * b_j, exactly.
Dist product_dist(const Dist& a, const Dist& b);

// True iff q(x)=0 implies p(x)=0 at every index.
bool is_abs_continuous(const Dist& p, const Dist& q);

// Row-stochastic kernel; rows_[x] is the output law given input x.
class Channel {
 public:
  explicit Channel(std::vector<Dist> rows);

  static Channel bsc(double delta);
  static Channel bec(double eps);       // outputs: (kept, erased, flipped-keep)
  static Channel identity(int n);

  int nx() const { return int(rows_.size()); }
  int ny() const { return ny_; }
  const Dist& row(int x) const { return rows_[size_t(x)]; }

 private:
  std::vector<Dist> rows_;
  int ny_;
};

// Output law of p pushed through k: y-entry is sum_x p(x) k(y|x).
Dist push_forward(const Dist& p, const Channel& k);

// (k1 x k2)((y1,y2)|(x1,x2)) = k1(y1|x1) k2(y2|x2), row-major on both sides.
Channel product_channel(const Channel& k1, const Channel& k2);

}  // namespace gfdiv
