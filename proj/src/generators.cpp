#include "gfdiv/generators.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace gfdiv {

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<size_t>(n));
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    xs[size_t(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return xs;
}

double require(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw BadParameter("missing parameter '" + key + "'");
  return it->second;
}

constexpr double kAsinh1 = 0.8813735870195430;  // asinh(1)

}  // namespace

double fd_d1(const Fn& f, double x) {
  double h = 1e-5 * std::max(std::abs(x), 1e-8);
  auto cd = [&](double hh) { return (f(x + hh) - f(x - hh)) / (2 * hh); };
  double a = cd(h), b = cd(h / 2);
  return (4 * b - a) / 3;  // one Richardson step
}

double fd_d2(const Fn& f, double x) {
  double h = 1e-5 * std::max(std::abs(x), 1e-8);
  // guard the domain boundary at 0
  if (x - h <= 0) h = x / 2;
  auto cd = [&](double hh) {
    return (f(x + hh) - 2 * f(x) + f(x - hh)) / (hh * hh);
  };
  double a = cd(h), b = cd(h / 2);
  return (4 * b - a) / 3;
}

namespace {

// Three-sample limit probe. Converged within 1e-6 relative -> the limit.
// Sustained growth (non-decaying increments) -> +inf. Anything else,
// including slow convergence, is indeterminate and fails closed downstream.
double probe_limit(double v1, double v2, double v3) {
  if (std::abs(v3 - v2) <= 1e-6 * std::max(1.0, std::abs(v3))) return v3;
  if (v3 > v2 && v2 > v1 && (v3 - v2) >= 0.5 * (v2 - v1)) return kInf;
  return indeterminate();
}

}  // namespace

double dm_of(const FGenerator& f) {
  double f0 = f.f0;
  if (is_indeterminate(f0))
    f0 = probe_limit(f.eval(1e-4), f.eval(1e-8), f.eval(1e-12));
  double slope = f.slope_inf;
  if (is_indeterminate(slope))
    slope = probe_limit(f.eval(1e4) / 1e4, f.eval(1e6) / 1e6, f.eval(1e8) / 1e8);
  if (is_indeterminate(f0) || is_indeterminate(slope)) return indeterminate();
  return f0 + slope;
}

AdmissiblePair make_pair(const GTransform& g, const FGenerator& f) {
  double dm = dm_of(f);
  if (!(dm <= g.nu))  // NaN (indeterminate) also lands here and is rejected
    throw DomainViolation("make_pair: D_m(" + f.name + ") = " + fmt_g(dm, 6) +
                          " exceeds domain sup " + fmt_g(g.nu, 6) + " of " +
                          g.name);
  return AdmissiblePair{g, f, dm};
}

void validate_generator(const FGenerator& f) {
  double target = f.norm_tag == NormTag::kZeroAtOne ? 0.0 : 1.0;
  if (std::abs(f.eval(1.0) - target) > 1e-12)
    throw BadParameter("generator '" + f.name + "': f(1) = " +
                       fmt_g(f.eval(1.0), 17) + ", expected " + fmt_g(target, 1));
  auto xs = log_grid(1e-4, 1e4, 160);
  std::vector<double> vals(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) vals[i] = f.eval(xs[i]);
  for (size_t i = 0; i < xs.size(); ++i) {
    for (size_t j = i + 1; j < xs.size(); ++j) {
      double mid = f.eval((xs[i] + xs[j]) / 2);
      double chord = (vals[i] + vals[j]) / 2;
      bool ok = f.concave ? (mid >= chord - 1e-9) : (mid <= chord + 1e-9);
      if (!ok)
        throw BadParameter("generator '" + f.name + "': midpoint " +
                           std::string(f.concave ? "concavity" : "convexity") +
                           " fails at (" + fmt_g(xs[i], 6) + ", " +
                           fmt_g(xs[j], 6) + ")");
    }
  }
}

void validate_transform(const GTransform& g) {
  if (std::abs(g.eval(0.0)) > 1e-12)
    throw BadParameter("transform '" + g.name + "': G(0) != 0");
  double hi = g.nu == kInf ? 1e4 : g.nu * (1 - 1e-9);
  double prev = g.eval(0.0);
  for (int i = 1; i <= 200; ++i) {
    double x = hi * i / 200.0;
    double v = g.eval(x);
    if (v < prev - 1e-12)
      throw BadParameter("transform '" + g.name + "': decreasing at " +
                         fmt_g(x, 6));
    prev = v;
  }
}

// ---------------------------------------------------------------------------
// f-generator registry
// ---------------------------------------------------------------------------

FGenerator catalog_f(const std::string& name, const Params& params) {
  FGenerator f;
  f.name = name;
  f.params = params;
  if (name == "kl") {
    f.eval = [](double x) { return x * std::log(x); };
    f.d1 = [](double x) { return std::log(x) + 1; };
    f.d2 = [](double x) { return 1 / x; };
    f.f0 = 0;
    f.slope_inf = kInf;
  } else if (name == "reverse_kl") {
    f.eval = [](double x) { return -std::log(x); };
    f.d1 = [](double x) { return -1 / x; };
    f.d2 = [](double x) { return 1 / (x * x); };
    f.f0 = kInf;
    f.slope_inf = 0;
  } else if (name == "squared_hellinger") {
    f.eval = [](double x) { double r = std::sqrt(x) - 1; return r * r; };
    f.d1 = [](double x) { return 1 - 1 / std::sqrt(x); };
    f.d2 = [](double x) { return 0.5 / (x * std::sqrt(x)); };
    f.f0 = 1;
    f.slope_inf = 1;
  } else if (name == "jensen_shannon") {
    f.eval = [](double x) {
      return x * std::log(x) - (1 + x) * std::log((1 + x) / 2);
    };
    f.d1 = [](double x) { return std::log(2 * x / (1 + x)); };
    f.d2 = [](double x) { return 1 / (x * (1 + x)); };
    f.f0 = std::log(2.0);
    f.slope_inf = std::log(2.0);
  } else if (name == "alpha_div") {
    double a = require(params, "alpha");
    if (!(a > 0 && a < 1)) throw BadParameter("alpha_div: alpha outside (0,1)");
    f.eval = [a](double x) { return (std::pow(x, a) - 1) / (a * (a - 1)); };
    f.d1 = [a](double x) { return std::pow(x, a - 1) / (a - 1); };
    f.d2 = [a](double x) { return std::pow(x, a - 2); };
    f.f0 = 1 / (a * (1 - a));
    f.slope_inf = 0;
  } else if (name == "pearson_chi2") {
    f.eval = [](double x) { return (x - 1) * (x - 1); };
    f.d1 = [](double x) { return 2 * (x - 1); };
    f.d2 = [](double) { return 2.0; };
    f.f0 = 1;
    f.slope_inf = kInf;
  } else if (name == "triangular") {
    f.eval = [](double x) { return (x - 1) * (x - 1) / (x + 1); };
    f.d1 = [](double x) { return (x - 1) * (x + 3) / ((x + 1) * (x + 1)); };
    f.d2 = [](double x) { double d = x + 1; return 8 / (d * d * d); };
    f.f0 = 1;
    f.slope_inf = 1;
  } else if (name == "le_cam") {
    f.eval = [](double x) { return (1 - x) / (2 * x + 2); };
    f.d1 = [](double x) { double d = x + 1; return -1 / (d * d); };
    f.d2 = [](double x) { double d = x + 1; return 2 / (d * d * d); };
    f.f0 = 0.5;
    f.slope_inf = 0;
  } else if (name == "hellinger_order") {
    double a = require(params, "alpha");
    if (!(a > 0) || a == 1)
      throw BadParameter("hellinger_order: alpha must be in (0,1) or (1,inf)");
    f.eval = [a](double x) { return (std::pow(x, a) - 1) / (a - 1); };
    f.d1 = [a](double x) { return a * std::pow(x, a - 1) / (a - 1); };
    f.d2 = [a](double x) { return a * std::pow(x, a - 2); };
    f.f0 = 1 / (1 - a);
    f.slope_inf = a > 1 ? kInf : 0;
  } else if (name == "one_minus_sqrt") {
    f.eval = [](double x) { return 1 - std::sqrt(x); };
    f.d1 = [](double x) { return -0.5 / std::sqrt(x); };
    f.d2 = [](double x) { return 0.25 / (x * std::sqrt(x)); };
    f.f0 = 1;
    f.slope_inf = 0;
  } else if (name == "power") {
    double p = require(params, "p");
    if (p >= 0 && p <= 1)
      throw BadParameter("power: p must lie outside [0,1]");
    f.eval = [p](double x) { return std::pow(x, p); };
    f.d1 = [p](double x) { return p * std::pow(x, p - 1); };
    f.d2 = [p](double x) { return p * (p - 1) * std::pow(x, p - 2); };
    f.f0 = p > 1 ? 0 : kInf;
    f.slope_inf = p > 1 ? kInf : 0;
    f.norm_tag = NormTag::kOneAtOne;
  } else if (name == "power_theta") {
    double s = require(params, "s"), th = require(params, "theta");
    if (!(s > 1)) throw BadParameter("power_theta: s must exceed 1");
    if (!(th > 0 && th < 1)) throw BadParameter("power_theta: theta outside (0,1)");
    f.eval = [s, th](double x) {
      return std::pow(x, s) - (s / th) * std::pow(x, th) + s / th;
    };
    f.d1 = [s, th](double x) {
      return s * std::pow(x, s - 1) - s * std::pow(x, th - 1);
    };
    f.d2 = [s, th](double x) {
      return s * (s - 1) * std::pow(x, s - 2) + s * (1 - th) * std::pow(x, th - 2);
    };
    f.f0 = s / th;
    f.slope_inf = kInf;
    f.norm_tag = NormTag::kOneAtOne;
  } else if (name == "sqrt") {
    f.eval = [](double x) { return std::sqrt(x); };
    f.d1 = [](double x) { return 0.5 / std::sqrt(x); };
    f.d2 = [](double x) { return -0.25 / (x * std::sqrt(x)); };
    f.f0 = 0;
    f.slope_inf = 0;
    f.norm_tag = NormTag::kOneAtOne;
    f.concave = true;
  } else if (name == "power_concave") {
    double s = require(params, "s");
    if (!(s > 0 && s < 1)) throw BadParameter("power_concave: s outside (0,1)");
    f.eval = [s](double x) { return std::pow(x, s); };
    f.d1 = [s](double x) { return s * std::pow(x, s - 1); };
    f.d2 = [s](double x) { return s * (s - 1) * std::pow(x, s - 2); };
    f.f0 = 0;
    f.slope_inf = 0;
    f.norm_tag = NormTag::kOneAtOne;
    f.concave = true;
  } else if (name == "sinusoidal") {
    // sqrt(x)(45+sin log x)/160 + (115/160) x
    f.eval = [](double x) {
      return std::sqrt(x) * (45 + std::sin(std::log(x))) / 160 + x * 115.0 / 160;
    };
    f.d1 = [](double x) {
      double t = std::log(x);
      double psi = (45 + std::sin(t)) / 160, dpsi = std::cos(t) / 160;
      return (psi / 2 + dpsi) / std::sqrt(x) + 115.0 / 160;
    };
    f.d2 = [](double x) {
      double t = std::log(x);
      double psi = (45 + std::sin(t)) / 160, ddpsi = -std::sin(t) / 160;
      return (ddpsi - psi / 4) / (x * std::sqrt(x));
    };
    f.f0 = 0;
    f.slope_inf = 115.0 / 160;
    f.norm_tag = NormTag::kOneAtOne;
    f.concave = true;
  } else {
    throw UnknownName("unknown generator '" + name + "'");
  }
  validate_generator(f);
  return f;
}

std::vector<std::string> catalog_f_names() {
  return {"kl",           "reverse_kl", "squared_hellinger", "jensen_shannon",
          "alpha_div",    "pearson_chi2", "triangular",      "le_cam",
          "hellinger_order", "one_minus_sqrt", "power",      "power_theta",
          "sqrt",         "power_concave", "sinusoidal"};
}

// ---------------------------------------------------------------------------
// G-transform registry
// ---------------------------------------------------------------------------

GTransform catalog_g(const std::string& name, const Params& params) {
  GTransform g;
  g.name = name;
  g.params = params;
  if (name == "x" || name == "identity") {
    g.name = "x";
    g.eval = [](double x) { return x; };
    g.d1 = [](double) { return 1.0; };
    g.inverse = [](double y) { return y; };
    g.convex_flag = true;  // affine
  } else if (name == "power") {
    double p = require(params, "p");
    if (!(p > 0 && p <= 1)) throw BadParameter("power transform: p outside (0,1]");
    g.eval = [p](double x) { return std::pow(x, p); };
    g.d1 = [p](double x) { return p * std::pow(x, p - 1); };
    g.inverse = [p](double y) { return std::pow(y, 1 / p); };
    g.convex_flag = (p == 1.0);
  } else if (name == "log1p") {
    g.eval = [](double x) { return std::log1p(x); };
    g.d1 = [](double x) { return 1 / (1 + x); };
    g.inverse = [](double y) { return std::expm1(y); };
  } else if (name == "neg_log1m") {
    g.eval = [](double x) { return -std::log1p(-x); };
    g.d1 = [](double x) { return 1 / (1 - x); };
    g.inverse = [](double y) { return -std::expm1(-y); };
    g.nu = 1.0;
    g.convex_flag = true;
    g.limit_at_nu = kInf;
  } else if (name == "log_sinh") {
    g.eval = [](double x) { return std::log(std::sinh(x + kAsinh1)); };
    g.d1 = [](double x) { return 1 / std::tanh(x + kAsinh1); };
    g.inverse = [](double y) { return std::asinh(std::exp(y)) - kAsinh1; };
  } else if (name == "renyi" || name == "renyi_G") {
    double a = require(params, "alpha");
    if (!(a > 0) || a == 1)
      throw BadParameter("renyi transform: alpha must be in (0,1) or (1,inf)");
    g.name = "renyi";
    g.eval = [a](double x) { return std::log1p((a - 1) * x) / (a - 1); };
    g.d1 = [a](double x) { return 1 / (1 + (a - 1) * x); };
    g.inverse = [a](double y) { return std::expm1((a - 1) * y) / (a - 1); };
    if (a < 1) {
      g.nu = 1 / (1 - a);
      g.convex_flag = true;
      g.limit_at_nu = kInf;
    }
  } else {
    throw UnknownName("unknown transform '" + name + "'");
  }
  validate_transform(g);
  return g;
}

std::vector<std::string> catalog_g_names() {
  return {"x", "power", "log1p", "neg_log1m", "log_sinh", "renyi"};
}

// ---------------------------------------------------------------------------
// Shape registry (inputs to the class-membership checkers)
// ---------------------------------------------------------------------------

ScalarFunction catalog_shape(const std::string& name, const Params& params) {
  ScalarFunction s;
  s.name = name;
  if (name == "power_shape") {
    double gm = require(params, "gamma");
    if (gm > 0 && gm < 1)
      throw BadParameter("power_shape: gamma inside (0,1) is not non-negative");
    double c = gm * (gm - 1);
    s.eval = [c, gm](double x) { return c * std::pow(x, gm); };
    s.d2 = [c, gm](double x) { return c * gm * (gm - 1) * std::pow(x, gm - 2); };
  } else if (name == "tminus_power_shape") {
    double lm = require(params, "lambda");
    if (!(lm >= 0 && lm <= 1)) throw BadParameter("tminus_power_shape: lambda outside [0,1]");
    double c = lm * (1 - lm);
    s.eval = [c, lm](double x) { return c * std::pow(x, lm); };
    s.d2 = [c, lm](double x) { return c * lm * (lm - 1) * std::pow(x, lm - 2); };
  } else if (name == "ratio_shape") {
    double b = require(params, "b"), c = require(params, "c");
    if (!(c > 0) || !(b >= 0)) throw BadParameter("ratio_shape: need c > 0, b >= 0");
    s.eval = [b, c](double x) { return (x + b) / (x + c); };
    s.d2 = [b, c](double x) {
      double d = x + c;
      return 2 * (b - c) / (d * d * d);  // d2 of 1+(b-c)/(x+c)
    };
  } else if (name == "tminus_ratio_shape") {
    double a = require(params, "a"), p = require(params, "s");
    if (!(p > 0.5 && p < 1)) throw BadParameter("tminus_ratio_shape: s outside (1/2,1)");
    double cap = (1 - p) * std::min(p, 4 * p - 2);
    if (!(a > 0 && a <= cap))
      throw BadParameter("tminus_ratio_shape: a outside (0, " + fmt_g(cap, 6) + "]");
    s.eval = [a, p](double x) {
      return a * std::pow(x, p) / (1 + std::pow(x, 1 - p));
    };
    s.d2 = [a, p](double x) {
      double u = std::pow(x, 1 - p), D = 1 + u;
      return a * (p * (p - 1) * std::pow(x, p - 2) / D -
                  p * (1 - p) / (x * D * D) +
                  2 * (1 - p) * (1 - p) * std::pow(x, -p) / (D * D * D));
    };
  } else if (name == "tminus_sin_shape") {
    // sqrt(x)(9+sin log x)/128
    s.eval = [](double x) {
      return std::sqrt(x) * (9 + std::sin(std::log(x))) / 128;
    };
    s.d2 = [](double x) {
      double t = std::log(x);
      double phi = (9 + std::sin(t)) / 128, ddphi = -std::sin(t) / 128;
      return (ddphi - phi / 4) / (x * std::sqrt(x));
    };
  } else if (name == "log1p_shape") {
    s.eval = [](double x) { return std::log1p(x); };
    s.d2 = [](double x) { double d = 1 + x; return -1 / (d * d); };
  } else if (name == "x_shape") {
    s.eval = [](double x) { return x; };
    s.d2 = [](double) { return 0.0; };
  } else {
    throw UnknownName("unknown shape '" + name + "'");
  }
  return s;
}

std::vector<std::string> catalog_shape_names() {
  return {"power_shape", "tminus_power_shape", "ratio_shape",
          "tminus_ratio_shape", "tminus_sin_shape", "log1p_shape", "x_shape"};
}

// ---------------------------------------------------------------------------

ScalarFunction class_shape(const FGenerator& f) {
  const std::string& n = f.name;
  ScalarFunction s;
  s.name = (f.concave ? "-x^2 f''[" : "x^2 f''[") + n + "]";
  if (n == "kl") return catalog_shape("x_shape");
  if (n == "reverse_kl") {
    s.eval = [](double) { return 1.0; };
    s.d2 = [](double) { return 0.0; };
    return s;
  }
  if (n == "squared_hellinger") {
    s.eval = [](double x) { return 0.5 * std::sqrt(x); };
    s.d2 = [](double x) { return -0.125 / (x * std::sqrt(x)); };
    return s;
  }
  if (n == "jensen_shannon") {
    s.eval = [](double x) { return x / (1 + x); };
    s.d2 = [](double x) { double d = 1 + x; return -2 / (d * d * d); };
    return s;
  }
  if (n == "alpha_div") {
    double a = f.params.at("alpha");
    s.eval = [a](double x) { return std::pow(x, a); };
    s.d2 = [a](double x) { return a * (a - 1) * std::pow(x, a - 2); };
    return s;
  }
  if (n == "pearson_chi2" || n == "pearson_chi2+1") {
    s.eval = [](double x) { return 2 * x * x; };
    s.d2 = [](double) { return 4.0; };
    return s;
  }
  if (n == "triangular" || n == "triangular+1") {
    s.eval = [](double x) { double d = x + 1; return 8 * x * x / (d * d * d); };
    s.d2 = [](double x) {
      double d = x + 1;
      return 16 * (x * x - 4 * x + 1) / (d * d * d * d * d);
    };
    return s;
  }
  if (n == "le_cam" || n == "le_cam+1") {
    s.eval = [](double x) { double d = x + 1; return 2 * x * x / (d * d * d); };
    s.d2 = [](double x) {
      double d = x + 1;
      return 4 * (x * x - 4 * x + 1) / (d * d * d * d * d);
    };
    return s;
  }
  if (n == "hellinger_order") {
    double a = f.params.at("alpha");
    s.eval = [a](double x) { return a * std::pow(x, a); };
    s.d2 = [a](double x) { return a * a * (a - 1) * std::pow(x, a - 2); };
    return s;
  }
  if (n == "one_minus_sqrt" || n == "sqrt") {
    // same shape on both tracks: x^2 f'' = sqrt(x)/4 resp. -x^2 f'' = sqrt(x)/4
    s.eval = [](double x) { return 0.25 * std::sqrt(x); };
    s.d2 = [](double x) { return -0.0625 / (x * std::sqrt(x)); };
    return s;
  }
  if (n == "power") {
    double p = f.params.at("p");
    return catalog_shape("power_shape", {{"gamma", p}});
  }
  if (n == "power_theta") {
    double p = f.params.at("s"), th = f.params.at("theta");
    double c1 = p * (p - 1), c2 = p * (1 - th);
    s.eval = [c1, c2, p, th](double x) {
      return c1 * std::pow(x, p) + c2 * std::pow(x, th);
    };
    s.d2 = [c1, c2, p, th](double x) {
      return c1 * p * (p - 1) * std::pow(x, p - 2) +
             c2 * th * (th - 1) * std::pow(x, th - 2);
    };
    return s;
  }
  if (n == "power_concave") {
    double p = f.params.at("s");
    return catalog_shape("tminus_power_shape", {{"lambda", p}});
  }
  if (n == "sinusoidal") return catalog_shape("tminus_sin_shape");

  // generic fallback: differentiate whatever the caller supplied
  double sign = f.concave ? -1.0 : 1.0;
  FGenerator copy = f;
  s.eval = [copy, sign](double x) { return sign * x * x * copy.deriv2(x); };
  return s;
}

// ---------------------------------------------------------------------------
// Normalization conversions
// ---------------------------------------------------------------------------

FGenerator to_plus_form(const FGenerator& fhat) {
  if (fhat.norm_tag != NormTag::kZeroAtOne)
    throw BadParameter("to_plus_form: expected an f(1)=0 generator");
  FGenerator f = fhat;
  f.name = fhat.name + "+1";
  Fn base = fhat.eval;
  f.eval = [base](double x) { return base(x) + 1; };
  f.f0 = fhat.f0 + 1;
  f.norm_tag = NormTag::kOneAtOne;
  return f;
}

FGenerator from_plus_form(const FGenerator& f) {
  if (f.norm_tag != NormTag::kOneAtOne || f.concave)
    throw BadParameter("from_plus_form: expected a convex f(1)=1 generator");
  FGenerator fhat = f;
  fhat.name = f.name + "-1";
  Fn base = f.eval;
  fhat.eval = [base](double x) { return base(x) - 1; };
  fhat.f0 = f.f0 - 1;
  fhat.norm_tag = NormTag::kZeroAtOne;
  return fhat;
}

FGenerator to_minus_form(const FGenerator& fhat) {
  if (fhat.norm_tag != NormTag::kZeroAtOne)
    throw BadParameter("to_minus_form: expected an f(1)=0 generator");
  FGenerator f = fhat;
  f.name = "1-" + fhat.name;
  Fn base = fhat.eval;
  f.eval = [base](double x) { return 1 - base(x); };
  if (fhat.d1) { Fn d = fhat.d1; f.d1 = [d](double x) { return -d(x); }; }
  if (fhat.d2) { Fn d = fhat.d2; f.d2 = [d](double x) { return -d(x); }; }
  f.f0 = 1 - fhat.f0;
  f.slope_inf = -fhat.slope_inf;
  f.norm_tag = NormTag::kOneAtOne;
  f.concave = true;
  return f;
}

FGenerator from_minus_form(const FGenerator& f) {
  if (f.norm_tag != NormTag::kOneAtOne || !f.concave)
    throw BadParameter("from_minus_form: expected a concave f(1)=1 generator");
  FGenerator fhat = f;
  fhat.name = "1-" + f.name;
  Fn base = f.eval;
  fhat.eval = [base](double x) { return 1 - base(x); };
  if (f.d1) { Fn d = f.d1; fhat.d1 = [d](double x) { return -d(x); }; }
  if (f.d2) { Fn d = f.d2; fhat.d2 = [d](double x) { return -d(x); }; }
  fhat.f0 = 1 - f.f0;
  fhat.slope_inf = -f.slope_inf;
  fhat.norm_tag = NormTag::kZeroAtOne;
  fhat.concave = false;
  return fhat;
}

// ---------------------------------------------------------------------------
// Tabulated generators: Fritsch-Carlson monotone cubic Hermite
// ---------------------------------------------------------------------------

namespace {

struct Hermite {
  std::vector<double> x, y, m;  // knots, values, tangents

  int segment(double t) const {
    auto it = std::upper_bound(x.begin(), x.end(), t);
    int k = int(it - x.begin()) - 1;
    return std::clamp(k, 0, int(x.size()) - 2);
  }

  double eval(double t) const {
    if (t <= x.front()) return y.front() + (t - x.front()) * m.front();
    if (t >= x.back()) return y.back() + (t - x.back()) * m.back();
    int k = segment(t);
    double h = x[k + 1] - x[k], u = (t - x[k]) / h;
    double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
    double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
    return h00 * y[k] + h * h10 * m[k] + h01 * y[k + 1] + h * h11 * m[k + 1];
  }

  double d1(double t) const {
    if (t <= x.front()) return m.front();
    if (t >= x.back()) return m.back();
    int k = segment(t);
    double h = x[k + 1] - x[k], u = (t - x[k]) / h;
    double dh00 = 6 * u * (u - 1), dh10 = (1 - u) * (1 - 3 * u);
    double dh01 = 6 * u * (1 - u), dh11 = u * (3 * u - 2);
    return (dh00 * y[k] / h + dh10 * m[k] + dh01 * y[k + 1] / h + dh11 * m[k + 1]);
  }

  double d2(double t) const {
    if (t <= x.front() || t >= x.back()) return 0.0;
    int k = segment(t);
    double h = x[k + 1] - x[k], u = (t - x[k]) / h;
    double dd00 = (12 * u - 6) / (h * h), dd10 = (6 * u - 4) / h;
    double dd01 = (6 - 12 * u) / (h * h), dd11 = (6 * u - 2) / h;
    return dd00 * y[k] + dd10 * m[k] + dd01 * y[k + 1] + dd11 * m[k + 1];
  }
};

}  // namespace

FGenerator tabulated_f(const std::string& name,
                       std::vector<std::pair<double, double>> table,
                       NormTag tag, bool concave) {
  if (table.size() < 3) throw BadParameter("tabulated_f: need at least 3 points");
  std::sort(table.begin(), table.end());
  auto h = std::make_shared<Hermite>();
  for (auto& [xv, yv] : table) {
    if (!h->x.empty() && xv <= h->x.back())
      throw BadParameter("tabulated_f: duplicate abscissa " + fmt_g(xv, 6));
    if (xv < 0) throw BadParameter("tabulated_f: negative abscissa");
    h->x.push_back(xv);
    h->y.push_back(yv);
  }
  size_t n = h->x.size();
  std::vector<double> d(n - 1);
  for (size_t k = 0; k + 1 < n; ++k)
    d[k] = (h->y[k + 1] - h->y[k]) / (h->x[k + 1] - h->x[k]);
  h->m.assign(n, 0.0);
  h->m[0] = d[0];
  h->m[n - 1] = d[n - 2];
  for (size_t k = 1; k + 1 < n; ++k)
    h->m[k] = (d[k - 1] * d[k] > 0) ? 0.5 * (d[k - 1] + d[k]) : 0.0;
  for (size_t k = 0; k + 1 < n; ++k) {  // Fritsch-Carlson limiter
    if (d[k] == 0.0) {
      h->m[k] = h->m[k + 1] = 0.0;
      continue;
    }
    double a = h->m[k] / d[k], b = h->m[k + 1] / d[k];
    double r = a * a + b * b;
    if (r > 9.0) {
      double tau = 3.0 / std::sqrt(r);
      h->m[k] = tau * a * d[k];
      h->m[k + 1] = tau * b * d[k];
    }
  }

  FGenerator f;
  f.name = name;
  f.eval = [h](double t) { return h->eval(t); };
  f.d1 = [h](double t) { return h->d1(t); };
  f.d2 = [h](double t) { return h->d2(t); };
  // limits from the end-segment linear extensions
  f.f0 = h->y.front() - h->x.front() * h->m.front();
  f.slope_inf = h->m.back();
  f.norm_tag = tag;
  f.concave = concave;
  return f;
}

}  // namespace gfdiv
