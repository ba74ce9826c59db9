#include "netsac/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netsac {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n <= 0) throw std::invalid_argument("Graph: agent count must be positive");
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("Graph: self-loop in edge list");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

Graph Graph::line(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph Graph::from_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "n") {
      if (!(ls >> n)) throw std::invalid_argument("edge list: malformed header line");
      continue;
    }
    int u = 0, v = 0;
    std::istringstream pair_ls(line);
    if (!(pair_ls >> u >> v)) throw std::invalid_argument("edge list: malformed edge line: " + line);
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::invalid_argument("edge list: missing \"n <count>\" header");
  return Graph(n, std::move(edges));
}

Graph Graph::from_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return from_edge_list(in);
}

const std::vector<int>& Graph::adjacent(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("Graph::adjacent: agent id out of range");
  return adj_[i];
}

namespace {

// BFS distances from source; unreachable nodes get -1.
std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.num_agents(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adjacent(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

int Graph::diameter() const {
  int diam = 0;
  for (int i = 0; i < n_; ++i) {
    auto dist = bfs_distances(*this, i);
    for (int d : dist) {
      if (d < 0) throw std::runtime_error("Graph::diameter: graph is disconnected");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

int Neighborhood::index_of(int agent) const {
  auto it = std::lower_bound(members.begin(), members.end(), agent);
  if (it == members.end() || *it != agent) return -1;
  return static_cast<int>(it - members.begin());
}

Neighborhood khop_neighborhood(const Graph& graph, int center, int kappa) {
  if (center < 0 || center >= graph.num_agents())
    throw std::out_of_range("khop_neighborhood: agent id out of range");
  if (kappa < 0) throw std::invalid_argument("khop_neighborhood: kappa must be >= 0");
  Neighborhood hood;
  hood.center = center;
  hood.kappa = kappa;
  std::vector<int> dist(graph.num_agents(), -1);
  std::deque<int> queue{center};
  dist[center] = 0;
  hood.members.push_back(center);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == kappa) continue;
    for (int v : graph.adjacent(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        hood.members.push_back(v);
        queue.push_back(v);
      }
    }
  }
  std::sort(hood.members.begin(), hood.members.end());
  return hood;
}

}  // namespace netsac
