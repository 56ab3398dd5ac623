#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ringforge/graph.hpp"

namespace ringforge {

struct TuParseOptions {
  /// Force a feature mode; by default node labels are used when the
  /// `_node_labels.txt` file exists, degree one-hot otherwise.
  std::optional<FeatureMode> force_mode;
  /// Degree cap for degree one-hot features (width max_degree + 1).
  std::size_t max_degree = 88;
};

/// Parses a TU-collection dataset directory.
///
/// Expects `<name>_A.txt` (comma-separated edge pairs, 1-indexed global node
/// ids), `<name>_graph_indicator.txt` (graph id per node) and
/// `<name>_graph_labels.txt` (label per graph); `<name>_node_labels.txt` is
/// optional. Edges appear in both directions in the A-file and are folded to
/// one undirected edge each. Graph labels are remapped to 0..n_classes-1 in
/// sorted-unique order.
GraphDataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name,
                              const TuParseOptions& options = {});

}  // namespace ringforge
