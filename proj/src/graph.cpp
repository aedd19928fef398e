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

#include "gossipdp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gossipdp/rng.hpp"

namespace gossipdp {

namespace {

void check_node(int v, int n, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + ": node id " +
                                std::to_string(v) + " out of range [0, " +
                                std::to_string(n) + ")");
  }
}

bool connected(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  std::deque<int> frontier{0};
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        frontier.push_back(v);
      }
    }
  }
  return count == n;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 2) throw std::invalid_argument("Graph: need at least 2 nodes");
  adj_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    check_node(a, n, "Graph");
    check_node(b, n, "Graph");
    if (a == b) {
      throw std::invalid_argument("Graph: self-loop at node " + std::to_string(a));
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("Graph: duplicate edge (" +
                                  std::to_string(key.first) + ", " +
                                  std::to_string(key.second) + ")");
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  edge_count_ = seen.size();
  if (!connected(n_, adj_)) {
    throw std::invalid_argument("Graph: not connected");
  }
}

bool Graph::has_edge(int u, int v) const {
  check_node(u, n_, "has_edge");
  check_node(v, n_, "has_edge");
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;  // already sorted: u ascending, neighbor lists sorted
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  check_node(source, g.node_count(), "bfs_distances");
  std::vector<int> dist(g.node_count(), -1);
  std::deque<int> frontier{source};
  dist[source] = 0;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

GraphMetrics shortest_paths(const Graph& g) {
  GraphMetrics m;
  const int n = g.node_count();
  m.distances.resize(n);
  for (int v = 0; v < n; ++v) {
    m.distances[v] = bfs_distances(g, v);
    m.diameter = std::max(m.diameter, *std::max_element(m.distances[v].begin(),
                                                        m.distances[v].end()));
    m.max_degree = std::max(m.max_degree, g.degree(v));
  }
  return m;
}

double decay_centrality(const Graph& g, int node, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("decay_centrality: beta must be in (0, 1)");
  }
  check_node(node, g.node_count(), "decay_centrality");
  const std::vector<int> dist = bfs_distances(g, node);
  double sum = 0.0;
  for (int v = 0; v < g.node_count(); ++v) {
    if (v != node) sum += std::pow(beta, dist[v]);
  }
  return sum;
}

const char* family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::kComplete: return "complete";
    case GraphFamily::kStar: return "star";
    case GraphFamily::kRing: return "ring";
    case GraphFamily::kGrid2d: return "grid2d";
    case GraphFamily::kRandomRegular: return "regular";
    case GraphFamily::kErdosRenyi: return "erdos_renyi";
    case GraphFamily::kGeometricRandom: return "geometric";
    case GraphFamily::kRewiredRegular: return "rewired_regular";
  }
  return "unknown";
}

GraphFamily family_from_name(const std::string& name) {
  if (name == "complete") return GraphFamily::kComplete;
  if (name == "star") return GraphFamily::kStar;
  if (name == "ring") return GraphFamily::kRing;
  if (name == "grid2d") return GraphFamily::kGrid2d;
  if (name == "regular") return GraphFamily::kRandomRegular;
  if (name == "erdos_renyi" || name == "er") return GraphFamily::kErdosRenyi;
  if (name == "geometric" || name == "gr") return GraphFamily::kGeometricRandom;
  if (name == "rewired_regular") return GraphFamily::kRewiredRegular;
  throw std::invalid_argument("unknown graph family: " + name);
}

namespace {

std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return edges;
}

std::vector<std::pair<int, int>> star_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return edges;
}

std::vector<std::pair<int, int>> ring_edges(int n) {
  if (n < 3) throw std::invalid_argument("ring: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return edges;
}

std::vector<std::pair<int, int>> grid2d_edges(int n) {
  const int side = static_cast<int>(std::lround(std::sqrt(double(n))));
  if (side * side != n) {
    throw std::invalid_argument("grid2d: n must be a perfect square");
  }
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      int id = r * side + c;
      if (c + 1 < side) edges.emplace_back(id, id + 1);
      if (r + 1 < side) edges.emplace_back(id, id + side);
    }
  }
  return edges;
}

// Pairing-model sampler: repeatedly match two free stubs, rejecting
// self-loops and multi-edges; restart when the remaining stubs admit no
// valid pair.
std::vector<std::pair<int, int>> regular_edges_attempt(int n, int d, Rng& rng,
                                                       bool& ok) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  std::set<std::pair<int, int>> used;
  std::vector<std::pair<int, int>> edges;
  while (!stubs.empty()) {
    bool matched = false;
    for (int tries = 0; tries < 64; ++tries) {
      std::size_t ai = rng.below(stubs.size());
      std::size_t bi = rng.below(stubs.size());
      if (ai == bi) continue;
      int a = stubs[ai], b = stubs[bi];
      if (a == b) continue;
      auto key = std::minmax(a, b);
      if (used.count(key)) continue;
      used.insert(key);
      edges.emplace_back(key.first, key.second);
      if (ai < bi) std::swap(ai, bi);
      stubs.erase(stubs.begin() + ai);
      stubs.erase(stubs.begin() + bi);
      matched = true;
      break;
    }
    if (!matched) {
      ok = false;  // stuck; caller restarts with fresh randomness
      return {};
    }
  }
  ok = true;
  return edges;
}

std::vector<std::pair<int, int>> erdos_renyi_edges(int n, double p, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return edges;
}

// Geometric random graph: points uniform in the unit square, connect pairs
// closer than a radius chosen by bisection so the realized average degree
// matches the target.
std::vector<std::pair<int, int>> geometric_edges(int n, double target_avg_degree,
                                                 Rng& rng) {
  std::vector<double> x(n), y(n);
  for (int v = 0; v < n; ++v) {
    x[v] = rng.uniform01();
    y[v] = rng.uniform01();
  }
  auto avg_degree_at = [&](double r) {
    const double r2 = r * r;
    long edges = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        double dx = x[u] - x[v], dy = y[u] - y[v];
        if (dx * dx + dy * dy <= r2) ++edges;
      }
    return 2.0 * double(edges) / double(n);
  };
  double lo = 0.0, hi = std::sqrt(2.0) + 1e-9;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (avg_degree_at(mid) < target_avg_degree) lo = mid; else hi = mid;
  }
  const double radius = hi;  // smallest radius reaching the target
  const double r2 = radius * radius;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double dx = x[u] - x[v], dy = y[u] - y[v];
      if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
    }
  return edges;
}

// Replaces each original edge (x, y) by (x, z) with the given probability,
// z uniform over nodes that are neither x nor already adjacent to x.
// Rewirings that would disconnect the graph are rolled back.
std::vector<std::pair<int, int>> rewire_edges(int n,
                                              std::vector<std::pair<int, int>> edges,
                                              double prob, Rng& rng) {
  std::vector<std::set<int>> adj(n);
  for (auto& [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  auto adj_connected = [&]() {
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : adj[u])
        if (!seen[v]) { seen[v] = 1; ++count; q.push_back(v); }
    }
    return count == n;
  };
  const std::size_t original = edges.size();
  for (std::size_t e = 0; e < original; ++e) {
    if (!rng.bernoulli(prob)) continue;
    auto [xn, yn] = edges[e];
    std::vector<int> candidates;
    candidates.reserve(n);
    for (int z = 0; z < n; ++z) {
      if (z != xn && !adj[xn].count(z)) candidates.push_back(z);
    }
    if (candidates.empty()) continue;
    int z = candidates[rng.below(candidates.size())];
    adj[xn].erase(yn);
    adj[yn].erase(xn);
    adj[xn].insert(z);
    adj[z].insert(xn);
    if (!adj_connected()) {
      adj[xn].erase(z);
      adj[z].erase(xn);
      adj[xn].insert(yn);
      adj[yn].insert(xn);
      continue;
    }
    edges[e] = {std::min(xn, z), std::max(xn, z)};
  }
  return edges;
}

}  // namespace

Graph build_graph(const GraphSpec& spec) {
  const int n = spec.n;
  if (n < 2) throw std::invalid_argument("build_graph: need n >= 2");
  switch (spec.family) {
    case GraphFamily::kComplete:
      return Graph(n, complete_edges(n));
    case GraphFamily::kStar:
      return Graph(n, star_edges(n));
    case GraphFamily::kRing:
      return Graph(n, ring_edges(n));
    case GraphFamily::kGrid2d:
      return Graph(n, grid2d_edges(n));
    case GraphFamily::kRandomRegular: {
      const int d = spec.degree;
      if (d < 1 || d >= n) throw std::invalid_argument("regular: need 1 <= degree < n");
      if ((static_cast<long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("regular: n * degree must be even");
      }
      Rng rng = Rng::stream(spec.seed, 0x5e6);
      for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        bool ok = false;
        auto edges = regular_edges_attempt(n, d, rng, ok);
        if (!ok) continue;
        try {
          return Graph(n, edges);
        } catch (const std::invalid_argument&) {
          continue;  // disconnected; retry
        }
      }
      throw std::runtime_error("regular: no connected graph within " +
                               std::to_string(spec.max_retries) + " attempts");
    }
    case GraphFamily::kErdosRenyi: {
      if (!(spec.edge_probability > 0.0 && spec.edge_probability <= 1.0)) {
        throw std::invalid_argument("erdos_renyi: edge probability must be in (0, 1]");
      }
      Rng rng = Rng::stream(spec.seed, 0xe12);
      for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        try {
          return Graph(n, erdos_renyi_edges(n, spec.edge_probability, rng));
        } catch (const std::invalid_argument&) {
          continue;
        }
      }
      throw std::runtime_error("erdos_renyi: no connected graph within " +
                               std::to_string(spec.max_retries) + " attempts");
    }
    case GraphFamily::kGeometricRandom: {
      if (!(spec.target_avg_degree > 0.0 && spec.target_avg_degree < n)) {
        throw std::invalid_argument("geometric: target average degree must be in (0, n)");
      }
      Rng rng = Rng::stream(spec.seed, 0x6e0);
      for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
        try {
          return Graph(n, geometric_edges(n, spec.target_avg_degree, rng));
        } catch (const std::invalid_argument&) {
          continue;
        }
      }
      throw std::runtime_error("geometric: no connected graph within " +
                               std::to_string(spec.max_retries) + " attempts");
    }
    case GraphFamily::kRewiredRegular: {
      if (!(spec.rewire_probability >= 0.0 && spec.rewire_probability <= 1.0)) {
        throw std::invalid_argument("rewired_regular: rewiring probability must be in [0, 1]");
      }
      GraphSpec base = spec;
      base.family = GraphFamily::kRandomRegular;
      Graph regular = build_graph(base);
      Rng rng = Rng::stream(spec.seed, 0x3e3);
      auto edges = rewire_edges(spec.n, regular.edges(), spec.rewire_probability, rng);
      return Graph(spec.n, edges);
    }
  }
  throw std::invalid_argument("build_graph: unknown family");
}

Graph load_graph(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("load_graph: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw std::invalid_argument("load_graph: expected {\"n\": ..., \"edges\": [...]}");
  }
  if (!doc["n"].is_number_integer()) {
    throw std::invalid_argument("load_graph: \"n\" must be an integer");
  }
  const int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw std::invalid_argument("load_graph: each edge must be a pair of node ids");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(n, edges);
}

std::string save_graph(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.node_count();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  doc["edges"] = edges;
  return doc.dump();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << save_graph(g) << "\n";
}

}  // namespace gossipdp
