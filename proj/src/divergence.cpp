#include "divboot/divergence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "divboot/optimize.hpp"

namespace divboot {

bool full_line_generator(double gamma) {
  if (gamma < 2.0 - kGammaLimitTol) return false;
  const double r = std::round(gamma);
  return std::abs(gamma - r) < kGammaLimitTol &&
         std::fmod(r, 2.0) == 0.0;
}

double phi_fn(double gamma, double x) {
  if (!std::isfinite(x)) return kInf;
  if (is_limit_zero(gamma)) {
    if (x <= 0.0) return kInf;
    return -std::log(x) + x - 1.0;
  }
  if (is_limit_one(gamma)) {
    if (x < 0.0) return kInf;
    if (x == 0.0) return 1.0;
    return x * std::log(x) - x + 1.0;
  }
  if (x < 0.0 && !full_line_generator(gamma)) return kInf;
  if (x == 0.0) return gamma > 0.0 ? 1.0 / gamma : kInf;
  return (std::pow(x, gamma) - gamma * x + gamma - 1.0) /
         (gamma * (gamma - 1.0));
}

double conjugate_fn_eval(double gamma, double x) {
  if (x > 0.0) return x * phi_fn(gamma, 1.0 / x);
  // Limits / conventions at x <= 0 coincide with the conjugate index map.
  return phi_fn(1.0 - gamma, x);
}

namespace {
void require_strictly_positive(const ProbVector& p, const char* role) {
  if (!p.strictly_positive())
    throw std::invalid_argument(std::string(role) +
                                " must be strictly positive (floor 1e-12)");
}
}  // namespace

double divergence(double gamma, std::span<const double> q,
                  const ProbVector& p) {
  require_strictly_positive(p, "base measure P");
  if (static_cast<int>(q.size()) != p.size())
    throw std::invalid_argument("dimension mismatch between Q and P");
  double total = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    const double term = p[k] * phi_fn(gamma, q[k] / p[k]);
    if (!std::isfinite(term)) return kInf;
    total += term;
  }
  return total;
}

double divergence(double gamma, const ProbVector& q, const ProbVector& p) {
  return divergence(gamma, std::span<const double>(q.entries()), p);
}

double divergence(double gamma, const SignedMeasureVector& q,
                  const ProbVector& p) {
  return divergence(gamma, std::span<const double>(q.entries()), p);
}

double conjugate_divergence(double gamma, const ProbVector& p,
                            const ProbVector& q) {
  require_strictly_positive(q, "base measure Q");
  if (q.size() != p.size())
    throw std::invalid_argument("dimension mismatch between P and Q");
  double total = 0.0;
  for (int k = 0; k < q.size(); ++k) {
    const double term = q[k] * conjugate_fn_eval(gamma, p[k] / q[k]);
    if (!std::isfinite(term)) return kInf;
    total += term;
  }
  return total;
}

double lemma4_transform(double gamma, double phi_value) {
  if (phi_value < 0.0)
    throw std::invalid_argument("divergence value must be nonnegative");
  if (!std::isfinite(phi_value)) return is_limit_one(gamma) ? 1.0 : kInf;
  if (is_limit_zero(gamma)) return phi_value;
  if (is_limit_one(gamma)) return 1.0 - std::exp(-phi_value);
  const double arg = 1.0 + gamma * (gamma - 1.0) * phi_value;
  if (arg <= 0.0)
    throw std::domain_error(
        "mass infimum undefined: 1 + gamma(gamma-1)phi = " +
        std::to_string(arg) + " is nonpositive");
  return (1.0 - std::pow(arg, -1.0 / (gamma - 1.0))) / gamma;
}

double mass_infimum(double gamma, const ProbVector& q, const ProbVector& p) {
  require_strictly_positive(p, "base measure P");
  require_strictly_positive(q, "measure Q");
  const double phi_value = divergence(gamma, q, p);
  if (!std::isfinite(phi_value))
    throw std::invalid_argument("divergence(gamma, Q, P) is not finite");
  return lemma4_transform(gamma, phi_value);
}

double mass_infimum_numeric(double gamma, const ProbVector& q,
                            const ProbVector& p) {
  require_strictly_positive(p, "base measure P");
  require_strictly_positive(q, "measure Q");
  const auto& qe = q.entries();
  const int k = p.size();
  auto objective = [&](double m) {
    double total = 0.0;
    for (int j = 0; j < k; ++j) {
      const double term = p[j] * phi_fn(gamma, m * qe[j] / p[j]);
      if (!std::isfinite(term)) return kInf;
      total += term;
    }
    return total;
  };
  constexpr double lo = 1e-6, hi = 1e3;
  const auto res = opt::golden_minimize(objective, lo, hi, 1e-12);
  if (res.x < lo * (1.0 + 1e-3) + 1e-9 || res.x > hi * (1.0 - 1e-3))
    throw std::runtime_error(
        "mass infimum bracket failure: objective monotone on [1e-6, 1e3], "
        "minimizer at m = " +
        std::to_string(res.x));
  return res.value;
}

}  // namespace divboot
