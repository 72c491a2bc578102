#pragma once

#include <optional>
#include <vector>

#include "divboot/alphabet.hpp"

// The three empirical objects: P_n, the weighted measure P_n^W, and the
// normalized weighted measure (undefined when the weights sum to zero).

namespace divboot {

// P_n: entry j is n_j / n. Zero cells are permitted.
ProbVector empirical_measure(const Sample& s);

// (1/n) sum_i W_i delta_{X_i}; entries may be negative, mass need not be 1.
SignedMeasureVector weighted_empirical(const Sample& s,
                                       const std::vector<double>& w);

// sum_i Z_i delta_{X_i} with Z_i = W_i / sum W. Mass is exactly 1 when
// defined; entries may be negative (signed simplex point) when the weight law
// admits negative weights. Empty optional when sum W = 0.
std::optional<ProbVector> normalized_weighted_empirical(
    const Sample& s, const std::vector<double>& w);

}  // namespace divboot
