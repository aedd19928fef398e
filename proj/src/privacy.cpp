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

#include "gossipdp/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace gossipdp {

namespace {

void check_alpha_open(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1]");
  }
}

void check_failure(double failure) {
  if (!(failure >= 0.0 && failure < 1.0)) {
    throw std::invalid_argument("failure probability must be in [0, 1)");
  }
}

double clamp0(double v) { return v > 0.0 ? v : 0.0; }

}  // namespace

const char* regime_name(Regime regime) {
  return regime == Regime::kSync ? "sync" : "async";
}

const char* kind_name(GuaranteeKind kind) {
  switch (kind) {
    case GuaranteeKind::kExact: return "exact";
    case GuaranteeKind::kLowerBoundDelta: return "lower_bound_delta";
    case GuaranteeKind::kUpperBoundC: return "upper_bound_c";
  }
  return "unknown";
}

double witness_delta_bound(double w_i, double w_j, double epsilon_budget) {
  if (w_i < 0.0 || w_i > 1.0 || w_j < 0.0 || w_j > 1.0) {
    throw std::invalid_argument("witness probabilities must be in [0, 1]");
  }
  return clamp0(w_i - std::exp(epsilon_budget) * w_j);
}

GeneralBounds general_gossip_bounds(const Graph& g, const GraphMetrics& metrics,
                                    const AnalysisParams& params) {
  check_alpha_open(params.alpha);
  if (params.failure != 0.0) {
    throw std::invalid_argument(
        "general_gossip_bounds: use wireless_gossip_bounds for failure > 0");
  }
  if (params.delay != 0) {
    throw std::invalid_argument(
        "general_gossip_bounds: use delayed_monitoring_bounds for delay > 0");
  }
  const double alpha = params.alpha;
  const double e_eps = std::exp(params.epsilon_budget);
  const int n = g.node_count();

  GeneralBounds out;
  out.effective_alpha = alpha;
  out.sync_delta_lb = clamp0(alpha);
  out.sync_c_ub = 0.0;

  const double far_branch = alpha - e_eps * std::pow(1.0 - alpha, metrics.diameter);
  const double mass_branch = alpha - e_eps * (1.0 - alpha) / double(n - 1);
  out.async_delta_lb = clamp0(std::max(far_branch, mass_branch));

  if (alpha >= 1.0) {
    out.async_c_ub = 0.0;
  } else {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      best = std::min(best, decay_centrality(g, i, 1.0 - alpha));
    }
    out.async_c_ub = best / alpha;
  }

  // Epsilon floor implied by the asynchronous delta bound at delta_budget.
  const double margin = alpha - params.delta_budget;
  if (margin <= 0.0) {
    out.epsilon_floor = 0.0;
  } else if (alpha >= 1.0) {
    out.epsilon_floor = kInfiniteEpsilon;
  } else {
    const double a = margin / std::pow(1.0 - alpha, metrics.diameter);
    const double b = margin * double(n - 1) / (1.0 - alpha);
    out.epsilon_floor = clamp0(std::log(std::max(a, b)));
  }
  return out;
}

GeneralBounds wireless_gossip_bounds(const Graph& g, const GraphMetrics& metrics,
                                     const AnalysisParams& params) {
  check_failure(params.failure);
  AnalysisParams substituted = params;
  substituted.alpha = params.alpha * (1.0 - params.failure);
  substituted.failure = 0.0;
  return general_gossip_bounds(g, metrics, substituted);
}

ExactGuarantee private_gossip_guarantee(const SpreadProbabilityMatrix& p) {
  const int n = p.size();
  ExactGuarantee out;

  // epsilon: worst pair (target i, source j), lexicographic tie-break.
  double min_p = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double v = p(j, i);
      if (v < min_p) {
        min_p = v;
        out.epsilon_witness = {i, j};
      }
    }
  }
  out.epsilon = min_p > 0.0 ? -std::log(min_p) : kInfiniteEpsilon;

  // c: worst target node.
  double min_sum = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) sum += p(j, i);
    }
    if (sum < min_sum) {
      min_sum = sum;
      out.c_witness = i;
    }
  }
  out.c = min_sum;
  return out;
}

ExactGuarantee private_gossip_guarantee(const Graph& g, double alpha) {
  check_alpha_open(alpha);
  return private_gossip_guarantee(spread_probabilities(g, alpha));
}

double private_gossip_epsilon(const Graph& g, double alpha) {
  return private_gossip_guarantee(g, alpha).epsilon;
}

double private_gossip_c(const Graph& g, double alpha) {
  return private_gossip_guarantee(g, alpha).c;
}

ExactGuarantee wireless_private_gossip(const Graph& g, double alpha, double failure) {
  check_alpha_open(alpha);
  check_failure(failure);
  return private_gossip_guarantee(g, alpha * (1.0 - failure));
}

CandidateGuarantee candidate_set_guarantee(const Graph& g,
                                           const SpreadProbabilityMatrix& p,
                                           const std::vector<int>& q,
                                           CandidateCrossForm form) {
  const int n = g.node_count();
  std::set<int> unique(q.begin(), q.end());
  if (unique.size() != q.size()) {
    throw std::invalid_argument("candidate set contains duplicates");
  }
  if (q.size() < 2) {
    throw std::invalid_argument("candidate set needs at least 2 nodes");
  }
  std::vector<int> members(unique.begin(), unique.end());
  if (members.front() < 0 || members.back() >= n) {
    throw std::invalid_argument("candidate set node out of range");
  }
  std::vector<char> in_q(n, 0);
  for (int v : members) in_q[v] = 1;
  std::vector<int> outside;
  for (int v = 0; v < n; ++v) {
    if (!in_q[v]) outside.push_back(v);
  }

  CandidateGuarantee out;

  // In-set family: identical fold to the whole-network guarantee, so Q = V
  // reduces to it exactly.
  double min_p = std::numeric_limits<double>::infinity();
  for (int i : members) {
    for (int j : members) {
      if (j == i) continue;
      const double v = p(j, i);
      if (v < min_p) {
        min_p = v;
        out.epsilon_witness = {i, j};
        out.epsilon_cross_node = -1;
      }
    }
  }
  double max_ratio = min_p > 0.0 ? 1.0 / min_p : kInfiniteEpsilon;

  // Cross family: first observation at a node k outside the set. The ratio
  // of resolvent entries in column k equals the ratio of spread
  // probabilities into k.
  for (int k : outside) {
    for (int i : members) {
      for (int j : members) {
        if (j == i) continue;
        const double denom = p(i, k);
        if (denom <= 0.0) continue;  // alpha = 1 degenerate case
        const double ratio = p(j, k) / denom;
        if (ratio > max_ratio) {
          max_ratio = ratio;
          out.epsilon_witness = {i, j};
          out.epsilon_cross_node = k;
        }
      }
    }
  }
  out.epsilon = std::isfinite(max_ratio) ? std::log(max_ratio) : kInfiniteEpsilon;

  // Uncertainty: in-set sums ...
  double min_c = std::numeric_limits<double>::infinity();
  for (int i : members) {
    double sum = 0.0;
    for (int j : members) {
      if (j != i) sum += p(j, i);
    }
    if (sum < min_c) {
      min_c = sum;
      out.c_witness = i;
      out.c_cross_node = -1;
    }
  }
  // ... and cross ratios, with the absorbing chain chosen by `form`.
  for (int i : members) {
    Eigen::MatrixXd own_resolvent;
    if (form == CandidateCrossForm::kAbsorbAtCandidate && p.alpha() < 1.0) {
      own_resolvent = resolvent(g, p.alpha(), i);
    }
    for (int k : outside) {
      double num = 0.0;
      double denom = 0.0;
      if (form == CandidateCrossForm::kAbsorbAtObserved) {
        for (int j : members) {
          if (j != i) num += p(j, k);
        }
        denom = p(i, k);
      } else {
        if (own_resolvent.size() == 0) continue;
        for (int j : members) {
          if (j != i) num += p.alpha() * own_resolvent(j, k);
        }
        denom = p.alpha() * own_resolvent(i, k);
      }
      if (denom <= 0.0) continue;  // degenerate ratio carries no constraint
      const double ratio = num / denom;
      if (ratio < min_c) {
        min_c = ratio;
        out.c_witness = i;
        out.c_cross_node = k;
      }
    }
  }
  out.c = min_c;
  return out;
}

CandidateGuarantee candidate_set_guarantee(const Graph& g, double alpha,
                                           const std::vector<int>& q,
                                           CandidateCrossForm form) {
  check_alpha_open(alpha);
  return candidate_set_guarantee(g, spread_probabilities(g, alpha), q, form);
}

double standard_normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double gdp_delta(double mu, double epsilon) {
  if (!(mu > 0.0)) throw std::invalid_argument("gdp_delta: mu must be positive");
  const double value = standard_normal_cdf(-epsilon / mu + mu / 2.0) -
                       std::exp(epsilon) * standard_normal_cdf(-epsilon / mu - mu / 2.0);
  return std::clamp(value, 0.0, 1.0);
}

double gdp_mu_for_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("gdp_mu_for_epsilon: epsilon must be positive and finite");
  }
  double lo = 1e-6;
  double hi = 20.0;
  // The curve value is 0 below the floating-point support boundary and
  // positive above it; make sure the bracket straddles that boundary.
  while (gdp_delta(lo, epsilon) > 0.0) {
    lo *= 0.01;
    if (lo < 1e-300) {
      throw std::runtime_error("gdp_mu_for_epsilon: could not bracket the root");
    }
  }
  if (gdp_delta(hi, epsilon) <= 0.0) {
    throw std::runtime_error("gdp_mu_for_epsilon: residual not positive at mu = 20");
  }
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gdp_delta(mid, epsilon) > 0.0) hi = mid; else lo = mid;
  }
  double mu = 0.5 * (lo + hi);

  // Guarded Newton polish on the residual; kept only while it improves.
  double residual = gdp_delta(mu, epsilon);
  for (int it = 0; it < 3 && residual > 0.0; ++it) {
    const double step = mu * 1e-6;
    const double derivative =
        (gdp_delta(mu + step, epsilon) - gdp_delta(std::max(mu - step, 1e-300), epsilon)) /
        (2.0 * step);
    if (!(derivative > 0.0) || !std::isfinite(derivative)) break;
    const double candidate = mu - residual / derivative;
    if (!(candidate > 0.0) || candidate >= hi) break;
    const double candidate_residual = gdp_delta(candidate, epsilon);
    if (candidate_residual >= residual) break;
    mu = candidate;
    residual = candidate_residual;
  }

  if (gdp_delta(mu, epsilon) > 1e-10) {
    throw std::runtime_error("gdp_mu_for_epsilon: residual above 1e-10 at the root");
  }
  return mu;
}

GdpConversion gaussian_dp_convert(double epsilon, double epsilon_prime) {
  if (epsilon_prime < 0.0) {
    throw std::invalid_argument("gaussian_dp_convert: epsilon_prime must be >= 0");
  }
  GdpConversion out;
  out.mu1 = gdp_mu_for_epsilon(epsilon);
  out.delta = gdp_delta(out.mu1, epsilon_prime);
  return out;
}

DelayedBounds delayed_monitoring_bounds(const Graph& g, const GraphMetrics& metrics,
                                        const AnalysisParams& params) {
  check_alpha_open(params.alpha);
  if (params.failure != 0.0) {
    throw std::invalid_argument("delayed_monitoring_bounds: failure must be 0");
  }
  if (params.delay < 0) {
    throw std::invalid_argument("delayed_monitoring_bounds: delay must be >= 0");
  }
  if (params.delay >= metrics.diameter) {
    throw std::invalid_argument(
        "delayed_monitoring_bounds: no bound is claimed for delay >= diameter (delay " +
        std::to_string(params.delay) + ", diameter " +
        std::to_string(metrics.diameter) + ")");
  }
  const double alpha = params.alpha;
  const int t = params.delay;
  const double e_eps = std::exp(params.epsilon_budget);
  const int n = g.node_count();

  double degree_power = 1.0;
  for (int s = 0; s < t; ++s) degree_power *= double(metrics.max_degree);
  double factorial = 1.0;
  for (int s = 2; s <= t + 1; ++s) factorial *= double(s);

  DelayedBounds out;
  out.sync_delta_lb = clamp0(alpha / degree_power);

  const double reach = alpha / (degree_power * factorial);
  const double far_branch =
      reach - e_eps * std::pow(1.0 - alpha, metrics.diameter - t);
  const double mass_branch = reach - e_eps * (1.0 - reach) / double(n - 1);
  out.async_delta_lb = std::max({far_branch, mass_branch, 0.0});
  return out;
}

ExactGuarantee delayed_private_gossip(const Graph& g, double alpha, int delay_steps) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("delayed_private_gossip: alpha must be in (0, 1)");
  }
  if (delay_steps < 0) {
    throw std::invalid_argument("delayed_private_gossip: delay must be >= 0");
  }
  const int n = g.node_count();
  const SpreadProbabilityMatrix p = spread_probabilities(g, alpha);
  const TransitionMatrix smoothed = matrix_power(transition_matrix(g), delay_steps);
  // Likelihood table: entry (j, i) is proportional to the probability that
  // node i's activity is the first observed event given source j.
  const Eigen::MatrixXd likelihood = smoothed.matrix() * p.matrix();
  if (!(likelihood.minCoeff() > 0.0)) {
    throw std::runtime_error(
        "delayed_private_gossip: vanishing likelihood on a connected graph");
  }

  ExactGuarantee out;
  double best_ratio = 0.0;
  for (int i = 0; i < n; ++i) {
    int argmax = 0, argmin = 0;
    double colmax = likelihood(0, i), colmin = likelihood(0, i);
    for (int j = 1; j < n; ++j) {
      const double v = likelihood(j, i);
      if (v > colmax) { colmax = v; argmax = j; }
      if (v < colmin) { colmin = v; argmin = j; }
    }
    const double ratio = colmax / colmin;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      out.epsilon_witness = {i, argmax};
      (void)argmin;
    }
  }
  out.epsilon = std::log(best_ratio);

  const Eigen::VectorXd column_sums = likelihood.colwise().sum();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int z = 0; z < n; ++z) {
      const double ratio = (column_sums(z) - likelihood(i, z)) / likelihood(i, z);
      if (ratio < min_ratio) {
        min_ratio = ratio;
        out.c_witness = i;
      }
    }
  }
  out.c = min_ratio;
  return out;
}

}  // namespace gossipdp
