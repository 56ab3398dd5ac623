#include "ringforge/graph.hpp"

#include <algorithm>

#include "ringforge/errors.hpp"

namespace ringforge {

std::vector<std::vector<VertexId>> Graph::adjacency_lists() const {
  std::vector<std::vector<VertexId>> adj(n_nodes);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_nodes, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void Graph::validate() const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (u == v) throw FormatError("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) throw FormatError("graph: edge not oriented (min,max)");
    if (v >= n_nodes) {
      throw FormatError("graph: edge endpoint " + std::to_string(v) + " out of range (n_nodes=" +
                        std::to_string(n_nodes) + ")");
    }
    if (i > 0 && !(edges[i - 1] < edges[i])) {
      throw FormatError("graph: edges not sorted/unique");
    }
  }
  if (node_features.rows() != n_nodes) {
    throw FormatError("graph: feature rows " + std::to_string(node_features.rows()) +
                      " != n_nodes " + std::to_string(n_nodes));
  }
}

std::vector<std::pair<VertexId, VertexId>> normalize_edges(
    std::vector<std::pair<VertexId, VertexId>> edges, std::size_t n_nodes) {
  for (auto& [u, v] : edges) {
    if (u == v) throw FormatError("edge list: self-loop at vertex " + std::to_string(u));
    if (u >= n_nodes || v >= n_nodes) {
      throw FormatError("edge list: endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Mat degree_onehot_features(const Graph& graph, std::size_t max_degree) {
  if (max_degree < 1) throw ContractError("degree_onehot_features: max_degree >= 1 required");
  Mat f(graph.n_nodes, max_degree + 1);
  const auto deg = graph.degrees();
  for (std::size_t v = 0; v < graph.n_nodes; ++v) {
    f.at(v, std::min(deg[v], max_degree)) = 1.0;
  }
  return f;
}

const char* to_string(FeatureMode mode) {
  return mode == FeatureMode::node_labels_onehot ? "node_labels_onehot" : "degree_onehot";
}

FeatureMode feature_mode_from_string(const std::string& s) {
  if (s == "node_labels_onehot") return FeatureMode::node_labels_onehot;
  if (s == "degree_onehot") return FeatureMode::degree_onehot;
  throw ConfigError("unknown feature mode: " + s);
}

}  // namespace ringforge
