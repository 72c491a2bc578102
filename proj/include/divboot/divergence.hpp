#pragma once

#include <limits>
#include <span>

#include "divboot/alphabet.hpp"

// Cressie-Read power divergence generators, divergence pseudo-distances,
// conjugates, and the closed-form mass infimum inf_{m>0} phi_gamma(mQ, P)
// together with its brute-force numeric oracle.

namespace divboot {

inline constexpr double kGammaLimitTol = 1e-9;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Any real gamma indexes a divergence; only gamma <= 1 or gamma >= 2 admit a
// weight-law representation via the Chernoff transform.
inline bool weight_representable(double gamma) {
  return gamma <= 1.0 + kGammaLimitTol || gamma >= 2.0 - kGammaLimitTol;
}

inline bool is_limit_zero(double gamma) {
  return std::abs(gamma) < kGammaLimitTol;
}
inline bool is_limit_one(double gamma) {
  return std::abs(gamma - 1.0) < kGammaLimitTol;
}
// Even integer gamma >= 2: the generator is a polynomial on the whole line.
bool full_line_generator(double gamma);

// phi_gamma(x), extended-real. Outside the natural domain the value is +inf:
// x <= 0 for gamma <= 0, x < 0 for non-even-integer gamma > 0. The gamma -> 0
// and gamma -> 1 limits dispatch within kGammaLimitTol of the singularities.
double phi_fn(double gamma, double x);

inline double conjugate_fn_index(double gamma) { return 1.0 - gamma; }

// Conjugate generator x * phi_gamma(1/x); equals phi_fn(1-gamma, x) wherever
// both are finite, with the +inf convention for x <= 0.
double conjugate_fn_eval(double gamma, double x);

// phi_gamma(Q, P) = sum_k p_k phi(q_k / p_k). P must be strictly positive.
double divergence(double gamma, std::span<const double> q,
                  const ProbVector& p);
double divergence(double gamma, const ProbVector& q, const ProbVector& p);
double divergence(double gamma, const SignedMeasureVector& q,
                  const ProbVector& p);

// Conjugate pseudo-distance sum_k q_k conj_phi(p_k / q_k); equals
// divergence(gamma, Q, P) whenever both sides are finite.
double conjugate_divergence(double gamma, const ProbVector& p,
                            const ProbVector& q);

// Monotone map from phi_gamma(Q,P) to inf_{m != 0} phi_gamma(mQ, P):
//   gamma = 0: phi
//   gamma = 1: 1 - exp(-phi)
//   else     : (1/gamma) [1 - (1 + gamma(gamma-1) phi)^(-1/(gamma-1))]
// The printed statement of the source lemma uses (1-gamma) phi on (0,1); the
// general branch above is what the infimum actually equals (the numeric
// oracle pins this down), and it reduces to the two limit branches.
double lemma4_transform(double gamma, double phi_value);

// Closed-form inf over the mass ray; requires strictly positive P and Q and a
// finite divergence.
double mass_infimum(double gamma, const ProbVector& q, const ProbVector& p);

// Bracketed golden-section minimization of m -> phi_gamma(mQ, P) over
// m in [1e-6, 1e3]; the independent oracle for mass_infimum. Throws when the
// minimizer sits on the bracket boundary.
double mass_infimum_numeric(double gamma, const ProbVector& q,
                            const ProbVector& p);

}  // namespace divboot
