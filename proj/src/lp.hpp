// Small exact linear programs over Q (dense two-phase simplex, Bland's
// rule). Used for conjugate values, piece pruning and membership tests;
// problem sizes are tens of variables.

#ifndef GROWTHLAB_SRC_LP_HPP
#define GROWTHLAB_SRC_LP_HPP

#include "growthlab/rational.hpp"

namespace growthlab::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RatVec solution;
};

/// minimize cost . x  subject to  rows x = rhs,  x >= 0.
Result minimize(const RatMatrix& rows, const RatVec& rhs, const RatVec& cost);

/// min { sum_j w_j mu_j : sum_j mu_j p_j = y, sum_j mu_j = 1, mu >= 0 }:
/// the lower convex envelope of the lifted points (p_j, w_j) at y.
/// Status Infeasible means y lies outside conv{p_j}.
Result lower_envelope(const std::vector<RatVec>& points, const RatVec& weights, const RatVec& y);

}  // namespace growthlab::lp

#endif  // GROWTHLAB_SRC_LP_HPP
