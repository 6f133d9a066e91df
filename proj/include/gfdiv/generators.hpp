#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gfdiv/common.hpp"

namespace gfdiv {

using Params = std::map<std::string, double>;
using Fn = std::function<double(double)>;

enum class NormTag { kZeroAtOne, kOneAtOne };

// Central differences with relative step 1e-5 and one Richardson step.
// Fallback for user-supplied generators without analytic derivatives.
double fd_d1(const Fn& f, double x);
double fd_d2(const Fn& f, double x);

// Plain scalar function with an optional analytic second derivative.
// Used for the class-membership shapes g(x).
struct ScalarFunction {
  std::string name;
  Fn eval;
  Fn d2;  // empty -> finite differences

  double at(double x) const { return eval(x); }
  double deriv2(double x) const { return d2 ? d2(x) : fd_d2(eval, x); }
};

// Generator f on [0,inf). Convex with f(1)=0 for admissible pairs;
// the product-form tracks use f(1)=1 and may carry the concave flag.
struct FGenerator {
  std::string name;
  Fn eval;
  Fn d1, d2;  // analytic when known; empty -> finite differences
  // Limit data. NaN means "not supplied": dm_of then resolves both limits by
  // sampling. Registry and tabulated generators always carry explicit values.
  double f0 = std::numeric_limits<double>::quiet_NaN();
  double slope_inf = std::numeric_limits<double>::quiet_NaN();
  NormTag norm_tag = NormTag::kZeroAtOne;
  bool concave = false;
  Params params;

  double at(double t) const { return t == 0.0 ? f0 : eval(t); }
  double deriv1(double t) const { return d1 ? d1(t) : fd_d1(eval, t); }
  double deriv2(double t) const { return d2 ? d2(t) : fd_d2(eval, t); }
};

// Monotone transform G on [0, nu) with G(0)=0.
struct GTransform {
  std::string name;
  Fn eval;
  Fn d1;
  double nu = kInf;          // domain supremum
  bool convex_flag = false;
  Fn inverse;                // optional
  double limit_at_nu = kInf; // G(nu^-) when nu is finite
  Params params;

  double at(double x) const { return eval(x); }
  double deriv1(double x) const { return d1 ? d1(x) : fd_d1(eval, x); }
};

struct AdmissiblePair {
  GTransform g;
  FGenerator f;
  double dm = 0.0;
};

// f(0) + lim f(t)/t. Uses analytic limit data when present; otherwise probes
// slopes at t in {1e4,1e6,1e8}: converged -> the limit, monotone growth ->
// +inf, anything else -> indeterminate() (which rejects downstream).
double dm_of(const FGenerator& f);

// Throws DomainViolation unless dm_of(f) <= g.nu.
AdmissiblePair make_pair(const GTransform& g, const FGenerator& f);

// Registries. Parameters are validated at construction; unknown names throw.
FGenerator catalog_f(const std::string& name, const Params& params = {});
GTransform catalog_g(const std::string& name, const Params& params = {});
ScalarFunction catalog_shape(const std::string& name, const Params& params = {});
std::vector<std::string> catalog_f_names();
std::vector<std::string> catalog_g_names();
std::vector<std::string> catalog_shape_names();

// The class-membership shape: x^2 f''(x) for convex-track generators,
// -x^2 f''(x) for generators carrying the concave flag. Analytic for registry
// names, finite differences otherwise.
ScalarFunction class_shape(const FGenerator& f);

// Normalization conversions between the f(1)=0 track and the product-form
// tracks: f_plus = fhat + 1, f_minus = 1 - fhat, and their inverses.
FGenerator to_plus_form(const FGenerator& fhat);
FGenerator to_minus_form(const FGenerator& fhat);
FGenerator from_plus_form(const FGenerator& f);
FGenerator from_minus_form(const FGenerator& f);

// Tabulated generator: monotone cubic (Fritsch-Carlson) through the given
// (x, f(x)) pairs, derivatives by differentiation of the interpolant.
FGenerator tabulated_f(const std::string& name,
                       std::vector<std::pair<double, double>> table,
                       NormTag tag, bool concave = false);

// Normalization and sampled midpoint-convexity checks; throws BadParameter.
void validate_generator(const FGenerator& f);
void validate_transform(const GTransform& g);

}  // namespace gfdiv
