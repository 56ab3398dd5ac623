#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringforge/mat.hpp"

namespace ringforge {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected simple graph with per-node features and a class label.
/// Edges are stored once as (u, v) with u < v, sorted lexicographically;
/// the position of a pair in `edges` is its edge id everywhere downstream.
struct Graph {
  std::size_t n_nodes = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  Mat node_features;  // n_nodes x F0
  int label = 0;

  std::size_t n_edges() const { return edges.size(); }

  /// Sorted neighbor lists.
  std::vector<std::vector<VertexId>> adjacency_lists() const;

  std::vector<std::size_t> degrees() const;

  /// Enforces: no self-loops, no duplicates, endpoints in range, u < v,
  /// sorted edge list, feature rows == n_nodes. Throws FormatError.
  void validate() const;
};

enum class FeatureMode { node_labels_onehot, degree_onehot };

struct GraphDataset {
  std::string name;
  std::vector<Graph> graphs;
  std::size_t n_classes = 0;
  FeatureMode feature_mode = FeatureMode::degree_onehot;

  std::size_t size() const { return graphs.size(); }
  std::size_t feature_dim() const {
    return graphs.empty() ? 0 : graphs.front().node_features.cols();
  }
};

/// Normalizes an edge list: orient pairs as (min, max), sort, drop
/// duplicates. Self-loops raise FormatError. Endpoints are range-checked.
std::vector<std::pair<VertexId, VertexId>> normalize_edges(
    std::vector<std::pair<VertexId, VertexId>> edges, std::size_t n_nodes);

/// One-hot degree features: row v is one-hot at min(degree(v), max_degree),
/// width max_degree + 1.
Mat degree_onehot_features(const Graph& graph, std::size_t max_degree);

const char* to_string(FeatureMode mode);
FeatureMode feature_mode_from_string(const std::string& s);

}  // namespace ringforge
