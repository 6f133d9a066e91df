#include "gfdiv/prob.hpp"

namespace gfdiv {

Dist::Dist(std::vector<double> probs) : p_(std::move(probs)) {
  if (p_.empty()) throw BadInput("Dist: empty probability vector");
  for (double& v : p_) {
    if (std::isnan(v)) throw BadInput("Dist: NaN entry");
    if (v < 0.0) {
      if (v < -1e-15) throw BadInput("Dist: negative entry " + fmt_g(v, 17));
      v = 0.0;
    }
  }
  double sum = pairwise_sum(p_);
  if (std::abs(sum - 1.0) > 1e-9)
    throw BadInput("Dist: entries sum to " + fmt_g(sum, 17) + ", not 1");
  // Renormalize drift, but leave sums already at accumulation-noise level
  // untouched so construction is idempotent and serialization round-trips
  // bit for bit.
  if (std::abs(sum - 1.0) > 1.5e-14) {
    for (double& v : p_) v /= sum;
  }
}

Dist Dist::bernoulli(double p1) {
  return Dist(std::vector<double>{p1, 1.0 - p1});
}

Dist Dist::uniform(int n) {
  if (n < 1) throw BadInput("Dist::uniform: n < 1");
  return Dist(std::vector<double>(size_t(n), 1.0 / n));
}

Dist Dist::point_mass(int n, int i) {
  if (n < 1 || i < 0 || i >= n) throw BadInput("Dist::point_mass: bad index");
  std::vector<double> v(size_t(n), 0.0);
  v[size_t(i)] = 1.0;
  return Dist(std::move(v));
}

Dist product_dist(const Dist& a, const Dist& b) {
  std::vector<double> out;
  out.reserve(size_t(a.size()) * size_t(b.size()));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) out.push_back(a[i] * b[j]);
  return Dist(std::move(out));
}

bool is_abs_continuous(const Dist& p, const Dist& q) {
  if (p.size() != q.size())
    throw SizeMismatch("is_abs_continuous: sizes differ");
  for (int i = 0; i < p.size(); ++i)
    if (q[i] == 0.0 && p[i] != 0.0) return false;
  return true;
}

Channel::Channel(std::vector<Dist> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw BadInput("Channel: no rows");
  ny_ = rows_.front().size();
  for (const Dist& r : rows_)
    if (r.size() != ny_) throw SizeMismatch("Channel: ragged rows");
}

Channel Channel::bsc(double delta) {
  if (delta < 0.0 || delta > 1.0) throw BadParameter("bsc: delta outside [0,1]");
  return Channel({Dist({1.0 - delta, delta}), Dist({delta, 1.0 - delta})});
}

Channel Channel::bec(double eps) {
  if (eps < 0.0 || eps > 1.0) throw BadParameter("bec: eps outside [0,1]");
  return Channel({Dist({1.0 - eps, eps, 0.0}), Dist({0.0, eps, 1.0 - eps})});
}

Channel Channel::identity(int n) {
  std::vector<Dist> rows;
  rows.reserve(size_t(n));
  for (int i = 0; i < n; ++i) rows.push_back(Dist::point_mass(n, i));
  return Channel(std::move(rows));
}

Dist push_forward(const Dist& p, const Channel& k) {
  if (p.size() != k.nx()) throw SizeMismatch("push_forward: |p| != nx");
  std::vector<double> out(size_t(k.ny()), 0.0);
  std::vector<double> terms(size_t(k.nx()));
  for (int y = 0; y < k.ny(); ++y) {
    for (int x = 0; x < k.nx(); ++x) terms[size_t(x)] = p[x] * k.row(x)[y];
    out[size_t(y)] = pairwise_sum(terms);
  }
  return Dist(std::move(out));
}

Channel product_channel(const Channel& k1, const Channel& k2) {
  std::vector<Dist> rows;
  rows.reserve(size_t(k1.nx()) * size_t(k2.nx()));
  for (int x1 = 0; x1 < k1.nx(); ++x1)
    for (int x2 = 0; x2 < k2.nx(); ++x2)
      rows.push_back(product_dist(k1.row(x1), k2.row(x2)));
  return Channel(std::move(rows));
}

}  // namespace gfdiv
