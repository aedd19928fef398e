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

#include "gossipdp/chain.hpp"

#include <stdexcept>
#include <string>

namespace gossipdp {

namespace {

constexpr double kRowSumTolerance = 1e-12;

void check_alpha(double alpha, bool allow_one) {
  const bool ok = alpha > 0.0 && (allow_one ? alpha <= 1.0 : alpha < 1.0);
  if (!ok) {
    throw std::invalid_argument("alpha must be in (0, 1" +
                                std::string(allow_one ? "]" : ")"));
  }
}

Eigen::MatrixXd absorbing_matrix(const Graph& g, int absorbing_node) {
  const int n = g.node_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    if (j == absorbing_node) {
      m(j, j) = 1.0;
      continue;
    }
    const double p = 1.0 / g.degree(j);
    for (int v : g.neighbors(j)) m(j, v) = p;
  }
  return m;
}

}  // namespace

TransitionMatrix::TransitionMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("TransitionMatrix: matrix must be square");
  }
  for (int j = 0; j < m_.rows(); ++j) {
    double sum = 0.0;
    for (int i = 0; i < m_.cols(); ++i) {
      const double v = m_(j, i);
      if (v < -kRowSumTolerance || v > 1.0 + kRowSumTolerance) {
        throw std::invalid_argument("TransitionMatrix: entries must be in [0, 1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kRowSumTolerance) {
      throw std::invalid_argument("TransitionMatrix: row " + std::to_string(j) +
                                  " sums to " + std::to_string(sum));
    }
  }
}

TransitionMatrix transition_matrix(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double p = 1.0 / g.degree(j);
    for (int v : g.neighbors(j)) m(j, v) = p;
  }
  return TransitionMatrix(std::move(m));
}

TransitionMatrix absorbing_variant(const TransitionMatrix& a, int absorbing_node) {
  if (absorbing_node < 0 || absorbing_node >= a.size()) {
    throw std::invalid_argument("absorbing_variant: node out of range");
  }
  Eigen::MatrixXd m = a.matrix();
  m.row(absorbing_node).setZero();
  m(absorbing_node, absorbing_node) = 1.0;
  return TransitionMatrix(std::move(m));
}

TransitionMatrix matrix_power(const TransitionMatrix& a, int t) {
  if (t < 0) throw std::invalid_argument("matrix_power: t must be >= 0");
  const int n = a.size();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(n, n);
  for (int step = 0; step < t; ++step) acc = acc * a.matrix();
  return TransitionMatrix(std::move(acc));
}

SpreadProbabilityMatrix::SpreadProbabilityMatrix(Eigen::MatrixXd p, double alpha)
    : p_(std::move(p)), alpha_(alpha) {}

SpreadProbabilityMatrix spread_probabilities(const Graph& g, double alpha) {
  check_alpha(alpha, /*allow_one=*/true);
  const int n = g.node_count();
  const double gamma = 1.0 - alpha;
  Eigen::MatrixXd p(n, n);
  for (int target = 0; target < n; ++target) {
    Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(n, n) - gamma * absorbing_matrix(g, target);
    Eigen::VectorXd rhs = Eigen::VectorXd::Unit(n, target);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    Eigen::VectorXd column = alpha * lu.solve(rhs);
    if (!column.allFinite()) {
      throw std::runtime_error("spread_probabilities: singular system");
    }
    p.col(target) = column;
    p(target, target) = 1.0;  // resolvent diagonal is exactly 1/alpha
  }
  return SpreadProbabilityMatrix(std::move(p), alpha);
}

Eigen::VectorXd truncated_series_column(const Graph& g, double alpha, int target,
                                        int terms) {
  check_alpha(alpha, /*allow_one=*/true);
  if (terms < 0) throw std::invalid_argument("truncated_series_column: terms must be >= 0");
  const int n = g.node_count();
  const double gamma = 1.0 - alpha;
  const Eigen::MatrixXd ahat = absorbing_matrix(g, target);
  Eigen::VectorXd term = Eigen::VectorXd::Unit(n, target);  // Ahat^0 e_target
  Eigen::VectorXd acc = term;
  double weight = 1.0;
  for (int m = 1; m <= terms; ++m) {
    term = ahat * term;  // column target of Ahat^m
    weight *= gamma;
    acc += weight * term;
  }
  return alpha * acc;
}

Eigen::MatrixXd resolvent(const Graph& g, double alpha, int absorbing_node) {
  check_alpha(alpha, /*allow_one=*/true);
  const int n = g.node_count();
  const double gamma = 1.0 - alpha;
  Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - gamma * absorbing_matrix(g, absorbing_node);
  return system.partialPivLu().inverse();
}

}  // namespace gossipdp
