#include "divboot/weights.hpp"

#include <cmath>

#include "divboot/divergence.hpp"
#include "divboot/optimize.hpp"

namespace divboot {

double cgf(double gamma, double t) {
  if (!sampler_supported_gamma(gamma)) throw NonRepresentableGammaError(gamma);
  if (is_limit_zero(gamma)) return t < 1.0 ? -std::log1p(-t) : kInf;
  if (is_limit_one(gamma)) return std::expm1(t);
  if (std::abs(gamma - 2.0) < kGammaLimitTol) return t + 0.5 * t * t;
  // gamma < 1, gamma != 0: domain boundary at 1/(1-gamma). For gamma < 0 the
  // exponent -gamma/(1-gamma) is positive and the boundary value is finite.
  const double sup = 1.0 / (1.0 - gamma);
  if (t > sup || (gamma > 0.0 && t == sup)) return kInf;
  const double arg = 1.0 - (1.0 - gamma) * t;
  return (std::pow(arg, -gamma / (1.0 - gamma)) - 1.0) / gamma;
}

double chernoff_numeric(double gamma, double x) {
  auto objective = [&](double t) { return t * x - cgf(gamma, t); };
  double hi;
  if (is_limit_one(gamma) || std::abs(gamma - 2.0) < kGammaLimitTol) {
    hi = 256.0;
  } else {
    const double sup = 1.0 / (1.0 - gamma);
    hi = sup - 1e-13 * (1.0 + std::abs(sup));
  }
  const double lo = -256.0;
  const auto res = opt::golden_maximize(objective, lo, hi, 1e-13);
  if (res.x < lo + 1e-3 * (hi - lo))
    throw std::runtime_error(
        "chernoff bracket failure: maximizer at the lower search bound for "
        "x = " + std::to_string(x));
  return res.value;
}

WeightSampler::WeightSampler(const WeightLawSpec& spec) : gamma_(spec.gamma) {
  const double g = spec.gamma;
  if (is_limit_zero(g)) {
    law_ = Law::kExponential;
  } else if (is_limit_one(g)) {
    law_ = Law::kPoisson;
  } else if (std::abs(g - 2.0) < kGammaLimitTol) {
    law_ = Law::kNormal;
  } else if (std::abs(g + 1.0) < kGammaLimitTol) {
    law_ = Law::kInverseGaussian;
  } else if (g > 0.0) {
    // Jumps with mean gamma and variance gamma(1-gamma), so that EW = VarW = 1
    // and the compound CGF reproduces cgf(gamma, .).
    law_ = Law::kCompoundPoissonGamma;
    cpg_rate_ = 1.0 / g;
    cpg_shape_ = g / (1.0 - g);
    cpg_scale_ = 1.0 - g;
  } else {
    // W is a positive stable variate of index a = -gamma/(1-gamma), scaled so
    // its Laplace exponent is lambda s^a with lambda = (1-gamma)^a / |gamma|,
    // then exponentially tilted at rate 1/(1-gamma) by rejection; acceptance
    // rate exp(1/gamma).
    law_ = Law::kTiltedStable;
    stable_index_ = -g / (1.0 - g);
    const double lambda = std::pow(1.0 - g, stable_index_) / (-g);
    stable_scale_ = std::pow(lambda, 1.0 / stable_index_);
    tilt_rate_ = 1.0 / (1.0 - g);
  }
}

double sample_positive_stable(Xoshiro256& rng, double a) {
  // Kanter: Z = (A(U)/E)^((1-a)/a), U ~ U(0, pi), E ~ Exp(1),
  // A(u) = sin((1-a)u) sin(au)^(a/(1-a)) / sin(u)^(1/(1-a)).
  double u;
  do {
    u = rng.uniform() * 3.14159265358979323846;
  } while (u <= 0.0);
  const double e = sample_exponential(rng);
  const double num = std::sin((1.0 - a) * u) *
                     std::pow(std::sin(a * u), a / (1.0 - a));
  const double den = std::pow(std::sin(u), 1.0 / (1.0 - a));
  return std::pow(num / (den * e), (1.0 - a) / a);
}

double WeightSampler::operator()(Xoshiro256& rng) const {
  switch (law_) {
    case Law::kExponential:
      return sample_exponential(rng);
    case Law::kPoisson:
      return static_cast<double>(sample_poisson(rng, 1.0));
    case Law::kNormal:
      return 1.0 + sample_standard_normal(rng);
    case Law::kInverseGaussian: {
      // Michael-Schucany-Haas for IG(1,1).
      const double z = sample_standard_normal(rng);
      const double y = z * z;
      const double x = 1.0 + 0.5 * y - 0.5 * std::sqrt(4.0 * y + y * y);
      return rng.uniform() <= 1.0 / (1.0 + x) ? x : 1.0 / x;
    }
    case Law::kCompoundPoissonGamma: {
      const long long jumps = sample_poisson(rng, cpg_rate_);
      if (jumps == 0) return 0.0;
      // Sum of N Gamma(shape, scale) jumps is Gamma(N * shape, scale).
      return sample_gamma(rng, cpg_shape_ * static_cast<double>(jumps),
                          cpg_scale_);
    }
    case Law::kTiltedStable: {
      for (;;) {
        const double z = stable_scale_ * sample_positive_stable(rng, stable_index_);
        if (rng.uniform() < std::exp(-z * tilt_rate_)) return z;
      }
    }
  }
  return 0.0;  // unreachable
}

std::vector<double> sample_weights(const WeightLawSpec& spec, std::size_t n,
                                   std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("need n >= 1 weights");
  const WeightSampler sampler(spec);
  Xoshiro256 rng = derive_stream(seed, 0x77656967687473ULL, n);
  std::vector<double> w(n);
  for (auto& wi : w) wi = sampler(rng);
  return w;
}

std::optional<std::vector<double>> normalize_weights(
    const std::vector<double>& w) {
  double sum = 0.0;
  for (double wi : w) sum += wi;
  if (std::abs(sum) <= 1e-12 * static_cast<double>(w.size()))
    return std::nullopt;
  std::vector<double> z(w.size());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    z[i] = w[i] / sum;
    acc += z[i];
  }
  z.back() = 1.0 - acc;
  return z;
}

}  // namespace divboot
