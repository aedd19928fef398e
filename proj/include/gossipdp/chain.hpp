// Copyright 2026 The gossipdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOSSIPDP_CHAIN_HPP_
#define GOSSIPDP_CHAIN_HPP_

#include <Eigen/Dense>

#include "gossipdp/graph.hpp"

namespace gossipdp {

// Row-stochastic gossip contact matrix. Entry (j, i) is the probability that
// node j contacts node i in one gossip step: 1/d_j for neighbors, else 0.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(Eigen::MatrixXd m);

  int size() const { return static_cast<int>(m_.rows()); }
  double operator()(int from, int to) const { return m_(from, to); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

TransitionMatrix transition_matrix(const Graph& g);

// Same chain with `absorbing_node` turned into an absorbing state: its row
// becomes the corresponding unit row, all other rows are untouched.
TransitionMatrix absorbing_variant(const TransitionMatrix& a, int absorbing_node);

// t-fold product by repeated multiplication; t = 0 gives the identity.
TransitionMatrix matrix_power(const TransitionMatrix& a, int t);

// Secret-spread probabilities P(j -> i): the chance that, with source j and
// per-step detection probability alpha, node i becomes active before the
// attacker's first observation. Column i is alpha times column i of
// (I - (1-alpha) Ahat_i)^-1; the diagonal is identically 1.
class SpreadProbabilityMatrix {
 public:
  SpreadProbabilityMatrix(Eigen::MatrixXd p, double alpha);

  int size() const { return static_cast<int>(p_.rows()); }
  double alpha() const { return alpha_; }
  // P(source -> target)
  double operator()(int source, int target) const { return p_(source, target); }
  const Eigen::MatrixXd& matrix() const { return p_; }

 private:
  Eigen::MatrixXd p_;
  double alpha_ = 0.0;
};

// Solves one dense LU system per target node. Valid for 0 < alpha <= 1; the
// system matrix is nonsingular there since (1-alpha) Ahat_i has spectral
// radius below 1.
SpreadProbabilityMatrix spread_probabilities(const Graph& g, double alpha);

// Reference evaluation of the same column by truncated geometric series:
// alpha * sum_{m=0..terms} (1-alpha)^m Ahat_target^m e_target.
// Verification-only; the truncation error is bounded by (1-alpha)^(terms+1).
Eigen::VectorXd truncated_series_column(const Graph& g, double alpha, int target,
                                        int terms);

// Full resolvent (I - (1-alpha) Ahat_absorbing)^-1. Used by the candidate-set
// analysis variants that need off-column entries.
Eigen::MatrixXd resolvent(const Graph& g, double alpha, int absorbing_node);

}  // namespace gossipdp

#endif  // GOSSIPDP_CHAIN_HPP_
