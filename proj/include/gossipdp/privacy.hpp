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

#ifndef GOSSIPDP_PRIVACY_HPP_
#define GOSSIPDP_PRIVACY_HPP_

#include <limits>
#include <vector>

#include "gossipdp/chain.hpp"
#include "gossipdp/graph.hpp"

namespace gossipdp {

// Epsilon sentinel for "no finite privacy budget holds" (e.g. an omniscient
// observer). Serialized as "inf" in CSV output.
inline constexpr double kInfiniteEpsilon = std::numeric_limits<double>::infinity();

enum class Regime { kSync, kAsync };
enum class GuaranteeKind { kExact, kLowerBoundDelta, kUpperBoundC };

const char* regime_name(Regime regime);
const char* kind_name(GuaranteeKind kind);

// One (epsilon, delta, c) guarantee together with the regime it applies to
// and whether the numbers are exact values or one-sided bounds.
struct PrivacyGuarantee {
  double epsilon = 0.0;
  double delta = 0.0;
  double c = 0.0;
  Regime regime = Regime::kAsync;
  GuaranteeKind kind = GuaranteeKind::kExact;
};

// Shared knobs of the analysis operations.
struct AnalysisParams {
  double alpha = 0.5;        // per-event detection probability, (0, 1]
  double failure = 0.0;      // wireless failure probability, [0, 1)
  int delay = 0;             // monitoring delay in rounds / activation steps
  double epsilon_budget = 0.0;  // epsilon used when evaluating delta lower bounds
  double delta_budget = 0.0;    // delta used when inverting for the epsilon floor
};

// Lower bound on delta implied by one observation event with probability at
// least `w_i` under one source and at most `w_j` under another:
// max(w_i - e^eps w_j, 0).
double witness_delta_bound(double w_i, double w_j, double epsilon_budget);

// Structure-driven bounds that hold for every gossip protocol on the graph:
// delta lower bounds in both time models, prediction-uncertainty upper
// bounds, and the epsilon floor obtained by inverting the asynchronous delta
// bound at params.delta_budget.
struct GeneralBounds {
  double sync_delta_lb = 0.0;
  double sync_c_ub = 0.0;  // always 0: a time-0 observation pins the source
  double async_delta_lb = 0.0;
  double async_c_ub = 0.0;  // min_i C_{1-alpha}(i) / alpha
  double epsilon_floor = 0.0;
  double effective_alpha = 0.0;
};

// Requires params.failure == 0 and params.delay == 0 (see
// wireless_gossip_bounds / delayed_monitoring_bounds for those regimes).
GeneralBounds general_gossip_bounds(const Graph& g, const GraphMetrics& metrics,
                                    const AnalysisParams& params);

// Unreliable-wireless variant: identical formulas evaluated at the effective
// detection probability alpha * (1 - failure).
GeneralBounds wireless_gossip_bounds(const Graph& g, const GraphMetrics& metrics,
                                     const AnalysisParams& params);

// Argmax / argmin witnesses, reported with deterministic lexicographic
// tie-breaking so symmetric graphs give stable output.
struct Witness {
  int target = -1;  // absorbing node i of the binding pair
  int source = -1;  // source node j of the binding pair
};

// Exact guarantees of the single-active-token (private) gossip algorithm in
// the asynchronous model: epsilon = ln max_{j != i} 1 / P(j -> i) with
// delta = 0, and c = min_i sum_{j != i} P(j -> i).
struct ExactGuarantee {
  double epsilon = 0.0;
  double c = 0.0;
  Witness epsilon_witness;
  int c_witness = -1;
};

ExactGuarantee private_gossip_guarantee(const SpreadProbabilityMatrix& p);
ExactGuarantee private_gossip_guarantee(const Graph& g, double alpha);
double private_gossip_epsilon(const Graph& g, double alpha);
double private_gossip_c(const Graph& g, double alpha);

// Wireless variant by the same alpha * (1 - failure) substitution.
ExactGuarantee wireless_private_gossip(const Graph& g, double alpha, double failure);

// Which absorbing chain the cross-boundary ratio terms of the candidate-set
// guarantees use. kAbsorbAtObserved conditions on the observed node k (the
// internally consistent choice); kAbsorbAtCandidate keeps the candidate node
// i as the absorbing state, which degenerates for the uncertainty ratio
// because row i of its own resolvent has no mass outside i. The degenerate
// ratios are skipped rather than propagated.
enum class CandidateCrossForm { kAbsorbAtObserved, kAbsorbAtCandidate };

struct CandidateGuarantee {
  double epsilon = 0.0;
  double c = 0.0;
  Witness epsilon_witness;     // pair within the candidate set
  int epsilon_cross_node = -1;  // outside node k when a cross ratio binds
  int c_witness = -1;
  int c_cross_node = -1;
};

// Guarantees restricted to sources inside the candidate set `q` (at least
// two distinct nodes). With q == V this reduces exactly to
// private_gossip_guarantee.
CandidateGuarantee candidate_set_guarantee(
    const Graph& g, const SpreadProbabilityMatrix& p, const std::vector<int>& q,
    CandidateCrossForm form = CandidateCrossForm::kAbsorbAtObserved);
CandidateGuarantee candidate_set_guarantee(
    const Graph& g, double alpha, const std::vector<int>& q,
    CandidateCrossForm form = CandidateCrossForm::kAbsorbAtObserved);

// Standard normal CDF evaluated via erfc.
double standard_normal_cdf(double x);

// delta(epsilon) tradeoff value of the mu-Gaussian-DP curve, clamped to
// [0, 1].
double gdp_delta(double mu, double epsilon);

// The Gaussian-DP parameter matching a pure (epsilon, 0) guarantee: the
// bracketed-bisection root of gdp_delta(mu, epsilon) = 0 in mu, polished by
// a guarded Newton step. Throws if the residual at the returned point
// exceeds 1e-10.
double gdp_mu_for_epsilon(double epsilon);

struct GdpConversion {
  double mu1 = 0.0;
  double delta = 0.0;
};

// Converts a pure (epsilon, 0) guarantee into the (epsilon', delta(epsilon'))
// guarantee implied by the Gaussian-DP curve through it.
GdpConversion gaussian_dp_convert(double epsilon, double epsilon_prime);

// Delta lower bounds when the attacker only starts observing after `delay`
// rounds (sync) or activation steps (async). Defined for delay < diameter;
// larger delays are rejected because no bound is claimed there.
struct DelayedBounds {
  double sync_delta_lb = 0.0;
  double async_delta_lb = 0.0;
};

DelayedBounds delayed_monitoring_bounds(const Graph& g, const GraphMetrics& metrics,
                                        const AnalysisParams& params);

// Exact private-gossip guarantees under delayed monitoring: the observation
// statistics start from the t-step smoothed source distribution, so the
// likelihood of "i observed first" under source j becomes row j of A^t P
// evaluated at column i.
ExactGuarantee delayed_private_gossip(const Graph& g, double alpha, int delay_steps);

}  // namespace gossipdp

#endif  // GOSSIPDP_PRIVACY_HPP_
