#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gfdiv/common.hpp"

namespace gfdiv {

// Objective over the probability simplex. Returns the value at q and, when
// grad is non-null, writes d/dq into it.
using SimplexObjective =
    std::function<double(std::span<const double>, double*)>;

struct SimplexSolution {
  std::vector<double> point;
  double value = kInf;
  int iters = 0;
  // <grad, q> - min_y grad_y at the returned point; a certified optimality
  // gap bound when the objective is convex.
  double fw_gap = kInf;
};

// Entropic mirror descent with multiplicative updates q <- q exp(-eta grad).
// Iterates are floored at 1e-12 and renormalized. The step backtracks on
// non-improvement; the loop stops after `patience` iterations without an
// improvement of more than `tol`, or at max_iters.
SimplexSolution simplex_minimize(const SimplexObjective& obj,
                                 std::span<const double> start, int max_iters,
                                 double tol, int patience);

}  // namespace gfdiv
