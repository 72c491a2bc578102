#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

// Small derivative-free optimization toolkit: golden-section line search,
// Nelder-Mead with box support via extended-real objectives, a compass-search
// polish for tight final accuracy, and Halton points for multistart
// initialization.

namespace divboot::opt {

struct ScalarResult {
  double x = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

// Minimizes a unimodal f on [a, b] to interval width <= tol * (1 + |x|).
template <typename F>
ScalarResult golden_minimize(F&& f, double a, double b, double tol,
                             int max_iter = 300) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > tol * (1.0 + std::abs(a)); ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

template <typename F>
ScalarResult golden_maximize(F&& f, double a, double b, double tol,
                             int max_iter = 300) {
  auto res = golden_minimize([&](double x) { return -f(x); }, a, b, tol,
                             max_iter);
  res.value = -res.value;
  return res;
}

struct NelderMeadResult {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

// Standard Nelder-Mead; tolerates +inf objective values (infeasible regions).
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    std::vector<double> start, double step, double param_tol = 1e-9,
    double value_tol = 1e-12, int max_iter = 4000);

// Coordinate-wise pattern search from x with step halving h0 -> hmin;
// sharpens a Nelder-Mead minimum by several digits at negligible cost.
void compass_polish(const std::function<double(const std::vector<double>&)>& f,
                    std::vector<double>& x, double& fx, double h0,
                    double hmin);

// Halton low-discrepancy point (index >= 0) in [0,1)^dim.
std::vector<double> halton_point(int index, int dim);

}  // namespace divboot::opt
