#pragma once

#include <memory>
#include <string>
#include <vector>

namespace divboot {

// Finite observation space: an ordered list of at least two distinct labels.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int k) const { return symbols_[k]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  // Index of a label; -1 when unknown.
  int index_of(const std::string& symbol) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> symbols);
// Convenience alphabet d1, ..., dK.
AlphabetPtr make_default_alphabet(int k);

inline constexpr double kPositivityFloor = 1e-12;
inline constexpr double kMassTolerance = 1e-12;

// Point of the simplex over an alphabet: entries sum to one within 1e-12.
// Entries are nonnegative unless the vector is explicitly constructed as a
// signed simplex point (mass one, possibly negative coordinates), which the
// normalized weighted bootstrap produces when weights can be negative.
class ProbVector {
 public:
  ProbVector(AlphabetPtr alphabet, std::vector<double> entries,
             bool allow_signed = false);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int k) const { return entries_[k]; }
  const std::vector<double>& entries() const { return entries_; }

  bool strictly_positive(double floor = kPositivityFloor) const;
  bool is_signed() const { return signed_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<double> entries_;
  bool signed_ = false;
};

// Arbitrary finite real vector over the alphabet; the type of the weighted
// empirical measure, whose mass need not be one and whose entries may be
// negative.
class SignedMeasureVector {
 public:
  SignedMeasureVector(AlphabetPtr alphabet, std::vector<double> entries);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(entries_.size()); }
  double operator[](int k) const { return entries_[k]; }
  const std::vector<double>& entries() const { return entries_; }
  double mass() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<double> entries_;
};

// Observed sample: the observation list is retained (the bootstrap weights
// multiply per-observation masses), together with per-cell counts.
class Sample {
 public:
  Sample(AlphabetPtr alphabet, std::vector<int> observations);
  static Sample from_symbols(AlphabetPtr alphabet,
                             const std::vector<std::string>& symbols);
  // Deterministic sample whose cell counts are the largest-remainder
  // apportionment of n * p, listed cell by cell.
  static Sample apportioned(const ProbVector& p, long long n);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  long long size() const { return static_cast<long long>(observations_.size()); }
  const std::vector<int>& observations() const { return observations_; }
  const std::vector<long long>& counts() const { return counts_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<int> observations_;
  std::vector<long long> counts_;
};

// Largest-remainder apportionment of n * p into integer counts summing to n.
// Ties in remainder broken by cell index.
std::vector<long long> apportion_largest_remainder(const ProbVector& p,
                                                   long long n);

}  // namespace divboot
