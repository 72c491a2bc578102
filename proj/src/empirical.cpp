#include "divboot/empirical.hpp"

#include <stdexcept>

#include "divboot/weights.hpp"

namespace divboot {

ProbVector empirical_measure(const Sample& s) {
  const double n = static_cast<double>(s.size());
  std::vector<double> entries(s.alphabet()->size());
  double acc = 0.0;
  for (int k = 0; k + 1 < static_cast<int>(entries.size()); ++k) {
    entries[k] = static_cast<double>(s.counts()[k]) / n;
    acc += entries[k];
  }
  entries.back() = 1.0 - acc;
  return ProbVector(s.alphabet(), std::move(entries));
}

SignedMeasureVector weighted_empirical(const Sample& s,
                                       const std::vector<double>& w) {
  if (static_cast<long long>(w.size()) != s.size())
    throw std::invalid_argument("weight count does not match sample size");
  const double n = static_cast<double>(s.size());
  std::vector<double> entries(s.alphabet()->size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i)
    entries[s.observations()[i]] += w[i] / n;
  return SignedMeasureVector(s.alphabet(), std::move(entries));
}

std::optional<ProbVector> normalized_weighted_empirical(
    const Sample& s, const std::vector<double>& w) {
  if (static_cast<long long>(w.size()) != s.size())
    throw std::invalid_argument("weight count does not match sample size");
  const auto z = normalize_weights(w);
  if (!z) return std::nullopt;
  std::vector<double> entries(s.alphabet()->size(), 0.0);
  for (std::size_t i = 0; i < z->size(); ++i)
    entries[s.observations()[i]] += (*z)[i];
  // Pin the mass exactly; per-cell sums can drift by a few ulps.
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < entries.size(); ++k) acc += entries[k];
  entries.back() = 1.0 - acc;
  return ProbVector(s.alphabet(), std::move(entries), /*allow_signed=*/true);
}

}  // namespace divboot
