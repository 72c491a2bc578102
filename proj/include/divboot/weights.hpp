#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "divboot/rng.hpp"

// Weight laws matched to the Cressie-Read generators: the cumulant generating
// function whose Legendre transform is phi_gamma, samplers for each
// representable gamma, and weight normalization.

namespace divboot {

class NonRepresentableGammaError : public std::invalid_argument {
 public:
  explicit NonRepresentableGammaError(double gamma)
      : std::invalid_argument(
            "non-representable index: no weight sampler for gamma = " +
            std::to_string(gamma) +
            " (supported: gamma <= 1 or gamma = 2)") {}
};

// Sampler-supported subset of the representable indices. gamma in (1,2) has
// no representation at all; gamma > 2 is representable in principle but the
// exponential tilt of the stable density is unbounded, so simple rejection is
// unsound and the law is rejected here.
inline bool sampler_supported_gamma(double gamma) {
  return gamma <= 1.0 + 1e-9 || std::abs(gamma - 2.0) < 1e-9;
}

struct WeightLawSpec {
  double gamma;
  explicit WeightLawSpec(double g) : gamma(g) {
    if (!sampler_supported_gamma(g)) throw NonRepresentableGammaError(g);
  }
};

// log E exp(tW) for the law matched to gamma, +inf outside the domain:
//   gamma = 0: -log(1 - t), t < 1
//   gamma = 1: exp(t) - 1
//   gamma = 2: t + t^2/2
//   gamma < 1: (1/gamma) [(1 - (1-gamma) t)^(-gamma/(1-gamma)) - 1],
//              t < 1/(1-gamma) (boundary included for gamma < 0)
double cgf(double gamma, double t);

// Numeric Legendre transform sup_t { t x - cgf(gamma, t) }; the oracle that
// certifies the gamma <-> weight-law correspondence against phi_fn.
double chernoff_numeric(double gamma, double x);

// Stateless per-draw sampler; hot loops construct one and reuse it.
class WeightSampler {
 public:
  explicit WeightSampler(const WeightLawSpec& spec);
  double operator()(Xoshiro256& rng) const;
  double gamma() const { return gamma_; }

 private:
  enum class Law { kExponential, kPoisson, kNormal, kInverseGaussian,
                   kCompoundPoissonGamma, kTiltedStable };
  Law law_;
  double gamma_ = 0.0;
  // compound Poisson-Gamma: N ~ Poisson(1/gamma), jump Gamma(shape, scale)
  double cpg_rate_ = 0.0;
  double cpg_shape_ = 0.0;
  double cpg_scale_ = 0.0;
  // tilted stable: index a, scale applied to the unit Kanter variate, tilt
  double stable_index_ = 0.0;
  double stable_scale_ = 0.0;
  double tilt_rate_ = 0.0;
};

// n i.i.d. draws, deterministic in (spec, n, seed).
std::vector<double> sample_weights(const WeightLawSpec& spec, std::size_t n,
                                   std::uint64_t seed);

// Z_i = W_i / sum W_j; empty optional when the sum vanishes (|sum| <= 1e-12 n).
// The last entry absorbs the rounding residual so the result sums to 1 exactly.
std::optional<std::vector<double>> normalize_weights(
    const std::vector<double>& w);

// Positive stable variate with Laplace transform exp(-s^a), 0 < a < 1
// (Kanter's representation). Exposed for its unit test.
double sample_positive_stable(Xoshiro256& rng, double a);

}  // namespace divboot
