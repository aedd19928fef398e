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

#ifndef GOSSIPDP_GRAPH_HPP_
#define GOSSIPDP_GRAPH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gossipdp {

// Undirected, simple, connected graph on nodes {0..n-1}.
//
// Construction validates every structural invariant (no self-loops, no
// duplicate edges, connectivity, n >= 2) and throws std::invalid_argument on
// violation. Instances are immutable afterwards and safe to share across
// threads.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;

  // All edges normalized to u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// All-pairs hop distances plus the two structure constants the guarantee
// formulas depend on.
struct GraphMetrics {
  std::vector<std::vector<int>> distances;
  int diameter = 0;
  int max_degree = 0;
};

// Hop distances from one source (breadth-first search).
std::vector<int> bfs_distances(const Graph& g, int source);

// Exact metrics via one BFS per node.
GraphMetrics shortest_paths(const Graph& g);

// Decay centrality: sum over j != i of beta^d(i,j), 0 < beta < 1.
double decay_centrality(const Graph& g, int node, double beta);

enum class GraphFamily {
  kComplete,
  kStar,
  kRing,
  kGrid2d,
  kRandomRegular,
  kErdosRenyi,
  kGeometricRandom,
  kRewiredRegular,
};

const char* family_name(GraphFamily family);
GraphFamily family_from_name(const std::string& name);

// Parameters for the deterministic and random generators. Only the fields
// relevant to the chosen family are read.
struct GraphSpec {
  GraphFamily family = GraphFamily::kComplete;
  int n = 0;
  int degree = 0;              // random_regular / rewired_regular
  double edge_probability = 0.0;  // erdos_renyi
  double target_avg_degree = 0.0; // geometric_random (radius picked to match)
  double rewire_probability = 0.0;  // rewired_regular
  std::uint64_t seed = 0;
  int max_retries = 100;  // connectivity retries for random families
};

// Builds the requested family. Random families are regenerated until
// connected (bounded by spec.max_retries); identical (spec, seed) produce an
// identical graph. Throws std::invalid_argument for bad parameters and
// std::runtime_error when connectivity is not achieved within the budget.
Graph build_graph(const GraphSpec& spec);

// JSON edge-list serialization: {"n": <int>, "edges": [[u,v], ...]}.
// save_graph emits normalized edges (u < v, sorted); load_graph accepts any
// order and rejects malformed, duplicated, self-looped or disconnected input.
Graph load_graph(const std::string& json_text);
std::string save_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace gossipdp

#endif  // GOSSIPDP_GRAPH_HPP_
