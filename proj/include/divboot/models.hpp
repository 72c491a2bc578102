#pragma once

#include <functional>
#include <vector>

#include "divboot/alphabet.hpp"

// Finite-support parametric families: the natural exponential family with
// sufficient-statistic table T, and a general box-parameter grid model, plus
// the exact multinomial matching probability.

namespace divboot {

struct Box {
  std::vector<double> lower, upper;
  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const std::vector<double>& theta) const;
};

struct EstimationResult {
  std::vector<double> theta_hat;
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
  int multistart_best_of = 1;
};

class ParametricModel {
 public:
  virtual ~ParametricModel() = default;
  virtual const AlphabetPtr& alphabet() const = 0;
  virtual const Box& box() const = 0;
  int dim() const { return box().dim(); }
  // Strictly positive simplex point for theta in the box.
  virtual ProbVector prob(const std::vector<double>& theta) const = 0;
};

// P_theta(d_j) = exp[T(d_j)' theta - C(theta)]. Identifiability requires the
// columns of T together with the all-ones vector to be linearly independent.
class ExpFamilyModel final : public ParametricModel {
 public:
  ExpFamilyModel(AlphabetPtr alphabet, std::vector<std::vector<double>> t_table,
                 Box box);

  const AlphabetPtr& alphabet() const override { return alphabet_; }
  const Box& box() const override { return box_; }
  const std::vector<std::vector<double>>& t_table() const { return t_; }

  ProbVector prob(const std::vector<double>& theta) const override;
  // C(theta) = log sum_j exp(T_j . theta), computed with max shift.
  double log_partition(const std::vector<double>& theta) const;
  // grad C(theta) = sum_j T_j P_theta(d_j).
  std::vector<double> mean(const std::vector<double>& theta) const;
  // Statistic mean under an arbitrary mass-one vector: sum_j T_j q_j.
  std::vector<double> statistic_mean(const std::vector<double>& q) const;

  // Solves grad C(theta) = target by damped Newton; residual <= 1e-10 in
  // sup norm. Targets on or outside the convex hull of the rows of T fail
  // with a non-convergence error.
  EstimationResult solve_mean(const std::vector<double>& target) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::vector<double>> t_;  // K rows x d columns
  Box box_;
};

// theta -> ProbVector evaluator over a box; identifiability is asserted by
// the caller.
class GridModel final : public ParametricModel {
 public:
  using Evaluator = std::function<ProbVector(const std::vector<double>&)>;
  GridModel(AlphabetPtr alphabet, Box box, Evaluator evaluator);

  const AlphabetPtr& alphabet() const override { return alphabet_; }
  const Box& box() const override { return box_; }
  ProbVector prob(const std::vector<double>& theta) const override;

 private:
  AlphabetPtr alphabet_;
  Box box_;
  Evaluator evaluator_;
};

// log of the multinomial matching probability (Eq. of the exact conditional
// maximum-likelihood derivation): log n! + sum_j [n_j log P_theta(d_j) -
// log n_j!], via log-gamma.
double multinomial_match_logprob(const std::vector<double>& theta,
                                 const Sample& s, const ParametricModel& model);

}  // namespace divboot
