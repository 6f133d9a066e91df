#include <doctest.h>

#include <cmath>

#include "gfdiv/exponent.hpp"
#include "oracles.hpp"

using namespace gfdiv;

namespace {

constexpr double kMuExample = -0.11157177565710488;  // log(sqrt(.45)+sqrt(.05))
constexpr double kBscCap = 0.36806420716849707;
constexpr double kEsp01 = 0.12788746919880052;  // BSC(0.1) at R = 0.1 (offline)

Channel random_positive_3x3(uint64_t seed) {
  Rng rng(seed);
  std::vector<Dist> rows;
  for (int x = 0; x < 3; ++x) {
    std::vector<double> v(3);
    double sum = 0.0;
    for (double& e : v) {
      e = 0.1 + rng.next_unit();
      sum += e;
    }
    for (double& e : v) e /= sum;
    rows.emplace_back(std::move(v));
  }
  return Channel(std::move(rows));
}

}  // namespace

TEST_SUITE("exponent") {

TEST_CASE("mu_x worked examples") {
  SFamily fam = power_family();
  Channel w({Dist({0.9, 0.1}), Dist({0.1, 0.9})});
  CHECK(mu_x(0.5, Dist::uniform(2), w, 0, fam) ==
        doctest::Approx(kMuExample).epsilon(1e-13));
  // q equal to the row: D = sum W * f_s(1) = 1, so mu = 0
  CHECK(mu_x(0.37, Dist({0.9, 0.1}), w, 0, fam) == doctest::Approx(0.0));
  CHECK(mu_x(0.5, Dist::uniform(2), Channel({Dist::uniform(2), Dist::uniform(2)}),
             0, fam) == doctest::Approx(0.0));
  CHECK_THROWS_AS(mu_x(1.0, Dist::uniform(2), w, 0, fam), BadParameter);
}

TEST_CASE("gallager E0 matches the BSC closed form at the uniform input") {
  Channel w = Channel::bsc(0.1);
  for (double rho : {0.3, 1.0, 2.5}) {
    std::vector<double> p_star;
    double e0 = gallager_e0_max(w, rho, &p_star);
    CHECK(e0 == doctest::Approx(oracles::bsc_e0(0.1, rho)).epsilon(1e-9));
    CHECK(std::abs(p_star[0] - 0.5) <= 1e-6);  // symmetric channel
  }
}

TEST_CASE("classical oracle endpoints") {
  Channel w = Channel::bsc(0.1);
  CHECK(classical_sp_oracle(w, kBscCap + 1e-9) <= 1e-9);
  CHECK(classical_sp_oracle(w, 0.5) <= 1e-12);
  double low = classical_sp_oracle(w, 1e-4);
  CHECK(low > 0.0);
  CHECK(low < 3.0);  // finite for strictly positive W
  CHECK(classical_sp_oracle(w, 0.1) == doctest::Approx(kEsp01).epsilon(1e-6));
}

TEST_CASE("efsp matches the classical oracle on BSC(0.1)") {
  Channel w = Channel::bsc(0.1);
  SFamily fam = power_family();
  for (double rate : {0.1, 0.2, 0.3}) {
    double mine = efsp(w, rate, fam).value;
    double target = classical_sp_oracle(w, rate);
    CHECK(std::abs(mine - target) <= 1e-3);
  }
  CHECK(efsp(w, kBscCap, fam).value <= 1e-6);
  CHECK(efsp(w, 0.5, fam).value <= 1e-6);
}

TEST_CASE("efsp matches the classical oracle on a random positive 3x3") {
  Channel w = random_positive_3x3(0xA11CE);
  SFamily fam = power_family();
  for (double rate : {0.1, 0.3}) {
    double mine = efsp(w, rate, fam).value;
    double target = classical_sp_oracle(w, rate);
    CHECK(std::abs(mine - target) <= 1e-3);
  }
}

TEST_CASE("efsp matches the oracle across crossover probabilities") {
  SFamily fam = power_family();
  CHECK(std::abs(efsp(Channel::bsc(0.05), 0.15, fam).value -
                 classical_sp_oracle(Channel::bsc(0.05), 0.15)) <= 1e-3);
  CHECK(std::abs(efsp(Channel::bsc(0.2), 0.1, fam).value -
                 classical_sp_oracle(Channel::bsc(0.2), 0.1)) <= 1e-3);
}

TEST_CASE("rows with disjoint support diverge at low rates") {
  // the bracket grows without bound as s -> 1 when the order-0 capacity
  // exceeds the rate; a noiseless channel is the cleanest instance
  EfspResult r = efsp(Channel::identity(2), 0.3, power_family());
  CHECK(r.value == kInf);
  CHECK_FALSE(r.cert.converged);
  CHECK_FALSE(r.cert.positive_channel);
}

TEST_CASE("identical rows give a zero exponent at every rate") {
  Channel w({Dist({0.5, 0.3, 0.2}), Dist({0.5, 0.3, 0.2})});
  SFamily fam = power_family();
  CHECK(efsp(w, 0.05, fam).value == 0.0);
  CHECK(efsp(w, 0.4, fam).value == 0.0);
}

TEST_CASE("the curve is non-increasing in rate and non-negative") {
  Channel w = Channel::bsc(0.2);
  SFamily fam = power_family();
  std::vector<double> rates = {0.05, 0.1, 0.2, 0.3, 0.4};
  ExponentCurve curve = efsp_curve(w, rates, fam);
  for (size_t i = 0; i + 1 < curve.values.size(); ++i)
    CHECK(curve.values[i + 1] <= curve.values[i] + 1e-6);
  for (double v : curve.values) CHECK(v >= -1e-9);
  for (const EfspCert& c : curve.per_point) {
    CHECK(c.positive_channel);
    CHECK(std::abs(c.p_star[0] - 0.5) <= 1e-6);  // symmetric channel
  }
}

TEST_CASE("certificates bracket the game value") {
  Channel w = Channel::bsc(0.1);
  EfspResult r = efsp(w, 0.2, power_family());
  CHECK(r.cert.converged);
  CHECK(r.cert.upper >= r.cert.lower - 1e-9);
  CHECK(r.cert.s_star > 0.0);
  CHECK(r.cert.s_star < 1.0);
}

TEST_CASE("permutation-invariant shortcut agrees on symmetric channels") {
  SolverOpts fast;
  fast.assume_permutation_invariant = true;
  Channel w = Channel::bsc(0.1);
  double a = efsp(w, 0.2, power_family(), fast).value;
  double b = efsp(w, 0.2, power_family()).value;
  CHECK(std::abs(a - b) <= 1e-9);
}

TEST_CASE("psi predicate: the classical family passes, a wobble fails") {
  PsiCheckReport ok = check_psi_family([](double, double) { return 1.0; });
  CHECK(ok.pass);
  PsiCheckReport bad = check_psi_family(
      [](double, double x) { return 1.0 + 0.3 * std::sin(x); });
  CHECK_FALSE(bad.pass);
  CHECK(bad.failed_condition >= 1);
  CHECK(bad.failed_condition <= 3);
}

}  // TEST_SUITE
