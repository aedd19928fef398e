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

#ifndef GOSSIPDP_SIM_HPP_
#define GOSSIPDP_SIM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gossipdp/graph.hpp"

namespace gossipdp {

enum class Protocol { kStandard, kPrivate };
enum class Timing { kSync, kAsync };

Protocol protocol_from_name(const std::string& name);
Timing timing_from_name(const std::string& name);

struct StopCondition {
  enum class Kind {
    kAllInformed,
    kFractionInformed,
    kFirstObservation,
    kTargetAbsorbed,
  };
  Kind kind = Kind::kAllInformed;
  double fraction = 1.0;  // kFractionInformed
  int target = -1;        // kTargetAbsorbed

  static StopCondition all_informed() { return {}; }
  static StopCondition fraction_informed(double q) {
    return {Kind::kFractionInformed, q, -1};
  }
  static StopCondition first_observation() {
    return {Kind::kFirstObservation, 1.0, -1};
  }
  static StopCondition target_absorbed(int node) {
    return {Kind::kTargetAbsorbed, 1.0, node};
  }
};

// Full description of one simulation campaign. Trials are deterministic
// functions of (master_seed, trial_index); see run_trial.
struct SimConfig {
  Protocol protocol = Protocol::kPrivate;
  Timing timing = Timing::kAsync;
  double alpha = 0.5;
  double failure = 0.0;
  int monitor_delay = 0;  // rounds (sync) or activation steps (async) without sensors
  int source = 0;
  StopCondition stop;
  std::uint64_t master_seed = 0;
  long num_trials = 1;
  bool collect_trajectory = true;
};

struct ObservationEvent {
  int node = -1;   // actor whose gossip step was reported
  long slot = -1;  // round index (sync) or activation index (async)
};

enum class Termination {
  kAllInformed,
  kFractionReached,
  kFirstObservation,
  kTargetAbsorbed,
};

const char* termination_name(Termination t);

struct TrialOutcome {
  std::vector<int> informed_sizes;  // after each round / activation step
  std::vector<ObservationEvent> observations;
  long steps = 0;            // executed rounds (sync) or activation steps (async)
  double elapsed_time = 0.0;  // async wall clock; equals `steps` in sync
  Termination termination = Termination::kAllInformed;
};

// Simulates one trial. Synchronous rounds activate every informed node
// (standard) or the single token holder (private); asynchronous steps pick
// the next actor uniformly among active nodes, which reproduces the order
// statistics of i.i.d. unit-rate Poisson clocks while actual exponential
// gaps accumulate into elapsed_time. A push fails with probability
// `failure` (no new informed node, nothing to observe); an executed push is
// reported to the attacker with probability alpha, degraded by another
// failure draw when failure > 0. Observations inside the first
// monitor_delay rounds/steps are discarded.
TrialOutcome run_trial(const Graph& g, const SimConfig& cfg, long trial_index);

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt);

struct Estimate {
  std::string name;
  double value = 0.0;
  double std_error = 0.0;
  long trials = 0;
};

// Monte-Carlo estimate of the secret-spread probability P(source -> target)
// for every target at once: per trial the private-gossip token walks from
// `source`, an observation coin is flipped after each move, and target i
// scores when it was reached strictly before the first observation
// (immediately for i == source).
struct SpreadRowEstimate {
  int source = 0;
  long trials = 0;
  std::vector<double> p_hat;
  std::vector<double> std_error;
};

SpreadRowEstimate estimate_spread_row(const Graph& g, double alpha, int source,
                                      long trials, std::uint64_t seed,
                                      int workers = 1);

Estimate estimate_spread_probability(const Graph& g, double alpha, int source,
                                     int target, long trials, std::uint64_t seed,
                                     int workers = 1);

// Frequency with which each node is the first observed actor under cfg.
// Trials without any observation are tallied separately. In a synchronous
// round with several observations the earliest slot's actors all count.
struct FirstObservationEstimate {
  long trials = 0;
  std::vector<double> frequency;
  std::vector<double> std_error;
  double no_observation = 0.0;
};

FirstObservationEstimate estimate_first_observation_distribution(
    const Graph& g, const SimConfig& cfg, int workers = 1);

// Mean stop time under each failure probability (rounds in sync, accumulated
// clock time in async), with per-point derived seeds.
struct SpreadingTimeEstimate {
  double failure = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
  long trials = 0;
};

std::vector<SpreadingTimeEstimate> measure_spreading_time(
    const Graph& g, const SimConfig& cfg, const std::vector<double>& failures,
    int workers = 1);

// Two-sided z comparison of a Monte-Carlo estimate against a closed form.
struct ZCheck {
  double closed_form = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  double z = 0.0;
  bool pass = false;
};

ZCheck z_check(double closed_form, double estimate, double std_error,
               double z_threshold = 4.0);

}  // namespace gossipdp

#endif  // GOSSIPDP_SIM_HPP_
