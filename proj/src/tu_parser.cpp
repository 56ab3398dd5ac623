#include "ringforge/tu_parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ringforge/errors.hpp"

namespace ringforge {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& file, bool mandatory) {
  std::ifstream in(file);
  if (!in.is_open()) {
    if (mandatory) throw FormatError("missing dataset file: " + file.string());
    return {};
  }
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

long parse_long(const std::string& s, const std::string& context) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw FormatError(context + ": cannot parse integer from '" + s + "'");
  }
  for (; pos < s.size(); ++pos) {
    if (s[pos] != ' ' && s[pos] != '\t') {
      throw FormatError(context + ": trailing junk in '" + s + "'");
    }
  }
  return v;
}

std::pair<long, long> parse_pair(const std::string& s, const std::string& context) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw FormatError(context + ": expected 'u, v' but got '" + s + "'");
  }
  return {parse_long(s.substr(0, comma), context), parse_long(s.substr(comma + 1), context)};
}

}  // namespace

GraphDataset parse_tu_dataset(const std::filesystem::path& dir, const std::string& name,
                              const TuParseOptions& options) {
  const auto base = dir / name;
  const auto a_lines = read_lines(base / (name + "_A.txt"), true);
  const auto ind_lines = read_lines(base / (name + "_graph_indicator.txt"), true);
  const auto label_lines = read_lines(base / (name + "_graph_labels.txt"), true);
  const auto node_label_lines = read_lines(base / (name + "_node_labels.txt"), false);

  const std::size_t total_nodes = ind_lines.size();

  // Graph membership per global node (1-indexed file ids -> 0-indexed here).
  std::vector<std::size_t> node_graph(total_nodes);
  std::size_t n_graphs = 0;
  for (std::size_t i = 0; i < total_nodes; ++i) {
    const long g = parse_long(ind_lines[i], "graph_indicator");
    if (g < 1) throw FormatError("graph_indicator: graph id must be >= 1");
    node_graph[i] = static_cast<std::size_t>(g - 1);
    n_graphs = std::max(n_graphs, static_cast<std::size_t>(g));
  }
  if (label_lines.size() != n_graphs) {
    throw FormatError("graph_labels: " + std::to_string(label_lines.size()) + " labels for " +
                      std::to_string(n_graphs) + " graphs");
  }

  // Local node index within each graph, in global-id order.
  std::vector<VertexId> local_index(total_nodes);
  std::vector<std::size_t> graph_size(n_graphs, 0);
  for (std::size_t i = 0; i < total_nodes; ++i) {
    local_index[i] = static_cast<VertexId>(graph_size[node_graph[i]]++);
  }

  std::vector<std::vector<std::pair<VertexId, VertexId>>> graph_edges(n_graphs);
  for (const auto& line : a_lines) {
    if (line.empty()) continue;
    const auto [u1, v1] = parse_pair(line, name + "_A.txt");
    if (u1 < 1 || v1 < 1 || static_cast<std::size_t>(u1) > total_nodes ||
        static_cast<std::size_t>(v1) > total_nodes) {
      throw FormatError(name + "_A.txt: node id outside graph_indicator range: " + line);
    }
    const std::size_t u = static_cast<std::size_t>(u1 - 1);
    const std::size_t v = static_cast<std::size_t>(v1 - 1);
    if (node_graph[u] != node_graph[v]) {
      throw FormatError(name + "_A.txt: edge (" + std::to_string(u1) + "," + std::to_string(v1) +
                        ") crosses graphs " + std::to_string(node_graph[u] + 1) + " and " +
                        std::to_string(node_graph[v] + 1));
    }
    graph_edges[node_graph[u]].emplace_back(local_index[u], local_index[v]);
  }

  // Class labels remapped by sorted-unique order.
  std::vector<long> raw_labels(n_graphs);
  for (std::size_t g = 0; g < n_graphs; ++g) {
    raw_labels[g] = parse_long(label_lines[g], "graph_labels");
  }
  std::vector<long> uniq(raw_labels);
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::map<long, int> label_map;
  for (std::size_t i = 0; i < uniq.size(); ++i) label_map[uniq[i]] = static_cast<int>(i);

  GraphDataset ds;
  ds.name = name;
  ds.n_classes = uniq.size();
  ds.graphs.resize(n_graphs);
  for (std::size_t g = 0; g < n_graphs; ++g) {
    ds.graphs[g].n_nodes = graph_size[g];
    ds.graphs[g].edges = normalize_edges(std::move(graph_edges[g]), graph_size[g]);
    ds.graphs[g].label = label_map.at(raw_labels[g]);
  }

  // Feature construction: one-hot node labels when available, else degree.
  const bool have_node_labels = !node_label_lines.empty();
  FeatureMode mode = have_node_labels ? FeatureMode::node_labels_onehot
                                      : FeatureMode::degree_onehot;
  if (options.force_mode) mode = *options.force_mode;
  if (mode == FeatureMode::node_labels_onehot && !have_node_labels) {
    throw FormatError(name + ": node_labels_onehot requested but " + name +
                      "_node_labels.txt is missing");
  }
  ds.feature_mode = mode;

  if (mode == FeatureMode::node_labels_onehot) {
    if (node_label_lines.size() != total_nodes) {
      throw FormatError(name + "_node_labels.txt: " + std::to_string(node_label_lines.size()) +
                        " lines for " + std::to_string(total_nodes) + " nodes");
    }
    std::vector<long> raw(total_nodes);
    for (std::size_t i = 0; i < total_nodes; ++i) {
      raw[i] = parse_long(node_label_lines[i], "node_labels");
    }
    std::vector<long> nl_uniq(raw);
    std::sort(nl_uniq.begin(), nl_uniq.end());
    nl_uniq.erase(std::unique(nl_uniq.begin(), nl_uniq.end()), nl_uniq.end());
    std::map<long, std::size_t> nl_map;
    for (std::size_t i = 0; i < nl_uniq.size(); ++i) nl_map[nl_uniq[i]] = i;
    for (std::size_t g = 0; g < n_graphs; ++g) {
      ds.graphs[g].node_features = Mat(ds.graphs[g].n_nodes, nl_uniq.size());
    }
    for (std::size_t i = 0; i < total_nodes; ++i) {
      ds.graphs[node_graph[i]].node_features.at(local_index[i], nl_map.at(raw[i])) = 1.0;
    }
  } else {
    for (auto& g : ds.graphs) {
      g.node_features = degree_onehot_features(g, options.max_degree);
    }
  }

  for (const auto& g : ds.graphs) g.validate();
  return ds;
}

}  // namespace ringforge
