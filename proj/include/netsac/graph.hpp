#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace netsac {

/// Undirected interaction graph over agents {0..n-1}. No self-loops are
/// stored; every neighborhood includes its own center by convention.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph line(int n);
  static Graph complete(int n);

  /// Parses the edge-list text format: a header line "n <count>" followed by
  /// one "u v" pair per line. Blank lines and lines starting with '#' are
  /// skipped.
  static Graph from_edge_list(std::istream& in);
  static Graph from_edge_list_file(const std::string& path);

  int num_agents() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Direct neighbors of i, excluding i itself, sorted ascending.
  const std::vector<int>& adjacent(int i) const;

  int diameter() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

/// kappa-hop neighborhood of a center agent: all agents at graph distance
/// <= kappa, sorted ascending. Always contains the center.
struct Neighborhood {
  int center = 0;
  int kappa = 0;
  std::vector<int> members;

  /// Position of agent id within members, or -1 if absent.
  int index_of(int agent) const;
};

Neighborhood khop_neighborhood(const Graph& graph, int center, int kappa);

}  // namespace netsac
