#include "divboot/alphabet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace divboot {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2)
    throw std::invalid_argument("alphabet needs at least two symbols");
  std::set<std::string> uniq(symbols_.begin(), symbols_.end());
  if (uniq.size() != symbols_.size())
    throw std::invalid_argument("alphabet symbols must be pairwise distinct");
}

int Alphabet::index_of(const std::string& symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  return it == symbols_.end() ? -1
                              : static_cast<int>(it - symbols_.begin());
}

AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
  return std::make_shared<const Alphabet>(std::move(symbols));
}

AlphabetPtr make_default_alphabet(int k) {
  std::vector<std::string> symbols;
  symbols.reserve(k);
  for (int i = 1; i <= k; ++i) symbols.push_back("d" + std::to_string(i));
  return make_alphabet(std::move(symbols));
}

namespace {
void check_alphabet_size(const AlphabetPtr& alphabet, std::size_t n) {
  if (!alphabet) throw std::invalid_argument("null alphabet");
  if (static_cast<std::size_t>(alphabet->size()) != n)
    throw std::invalid_argument("entry count does not match alphabet size");
}
}  // namespace

ProbVector::ProbVector(AlphabetPtr alphabet, std::vector<double> entries,
                       bool allow_signed)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
  check_alphabet_size(alphabet_, entries_.size());
  double mass = 0.0;
  for (double e : entries_) {
    if (!std::isfinite(e)) throw std::invalid_argument("non-finite entry");
    if (e < 0.0) {
      if (!allow_signed)
        throw std::invalid_argument("negative entry in probability vector");
      signed_ = true;
    }
    mass += e;
  }
  if (std::abs(mass - 1.0) > kMassTolerance)
    throw std::invalid_argument("probability vector mass differs from 1 by " +
                                std::to_string(mass - 1.0));
}

bool ProbVector::strictly_positive(double floor) const {
  for (double e : entries_)
    if (e < floor) return false;
  return true;
}

SignedMeasureVector::SignedMeasureVector(AlphabetPtr alphabet,
                                         std::vector<double> entries)
    : alphabet_(std::move(alphabet)), entries_(std::move(entries)) {
  check_alphabet_size(alphabet_, entries_.size());
  for (double e : entries_)
    if (!std::isfinite(e)) throw std::invalid_argument("non-finite entry");
}

double SignedMeasureVector::mass() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

Sample::Sample(AlphabetPtr alphabet, std::vector<int> observations)
    : alphabet_(std::move(alphabet)), observations_(std::move(observations)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  if (observations_.empty()) throw std::invalid_argument("empty sample");
  counts_.assign(alphabet_->size(), 0);
  for (int obs : observations_) {
    if (obs < 0 || obs >= alphabet_->size())
      throw std::invalid_argument("observation index out of range");
    ++counts_[obs];
  }
}

Sample Sample::from_symbols(AlphabetPtr alphabet,
                            const std::vector<std::string>& symbols) {
  std::vector<int> obs;
  obs.reserve(symbols.size());
  for (const auto& s : symbols) {
    int k = alphabet->index_of(s);
    if (k < 0) throw std::invalid_argument("unknown symbol: " + s);
    obs.push_back(k);
  }
  return Sample(std::move(alphabet), std::move(obs));
}

Sample Sample::apportioned(const ProbVector& p, long long n) {
  const auto counts = apportion_largest_remainder(p, n);
  std::vector<int> obs;
  obs.reserve(n);
  for (int k = 0; k < p.size(); ++k)
    for (long long i = 0; i < counts[k]; ++i) obs.push_back(k);
  return Sample(p.alphabet(), std::move(obs));
}

std::vector<long long> apportion_largest_remainder(const ProbVector& p,
                                                   long long n) {
  if (n < 1) throw std::invalid_argument("apportionment needs n >= 1");
  if (p.is_signed())
    throw std::invalid_argument("cannot apportion a signed vector");
  const int k = p.size();
  std::vector<long long> counts(k);
  std::vector<double> remainders(k);
  long long assigned = 0;
  for (int j = 0; j < k; ++j) {
    const double exact = p[j] * static_cast<double>(n);
    counts[j] = static_cast<long long>(std::floor(exact));
    remainders[j] = exact - static_cast<double>(counts[j]);
    assigned += counts[j];
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return remainders[a] > remainders[b];
  });
  for (long long r = 0; r < n - assigned; ++r) ++counts[order[r % k]];
  return counts;
}

}  // namespace divboot
