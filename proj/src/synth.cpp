#include "ringforge/synth.hpp"

#include <fstream>
#include <vector>

#include "ringforge/errors.hpp"
#include "ringforge/rng.hpp"

namespace ringforge {

namespace {

struct Builder {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::size_t add_node() { return n++; }
  void add_edge(std::size_t u, std::size_t v) { edges.emplace_back(u, v); }

  /// Appends a cycle of `len` fresh nodes, returns the first node id.
  std::size_t add_ring(std::size_t len) {
    const std::size_t first = n;
    for (std::size_t i = 0; i < len; ++i) add_node();
    for (std::size_t i = 0; i < len; ++i) add_edge(first + i, first + (i + 1) % len);
    return first;
  }
};

}  // namespace

std::filesystem::path write_synthetic_tu_dataset(const std::filesystem::path& dir,
                                                 const std::string& name,
                                                 const SynthOptions& options) {
  Rng rng(options.seed);
  std::vector<Builder> graphs;
  std::vector<int> labels;

  for (std::size_t i = 0; i < options.n_graphs; ++i) {
    const int cls = static_cast<int>(i % 2);
    Builder b;
    const std::size_t lo = cls == 0 ? options.small_ring_min : options.large_ring_min;
    const std::size_t hi = cls == 0 ? options.small_ring_max : options.large_ring_max;
    const std::size_t n_rings = 1 + rng.index(2);
    std::size_t prev_anchor = 0;
    for (std::size_t r = 0; r < n_rings; ++r) {
      const std::size_t len = lo + rng.index(hi - lo + 1);
      const std::size_t first = b.add_ring(len);
      if (r > 0) b.add_edge(prev_anchor, first);  // bridge between rings
      prev_anchor = first;
    }
    // Pendant tree decoration.
    const std::size_t n_pendant = rng.index(4);
    for (std::size_t p = 0; p < n_pendant; ++p) {
      const std::size_t host = rng.index(b.n);
      const std::size_t leaf = b.add_node();
      b.add_edge(host, leaf);
    }
    graphs.push_back(std::move(b));
    labels.push_back(cls);
  }

  const auto out = dir / name;
  std::filesystem::create_directories(out);
  std::ofstream a(out / (name + "_A.txt"));
  std::ofstream ind(out / (name + "_graph_indicator.txt"));
  std::ofstream lab(out / (name + "_graph_labels.txt"));
  std::ofstream nl;
  if (options.with_node_labels) nl.open(out / (name + "_node_labels.txt"));
  if (!a || !ind || !lab) throw IoError("cannot write synthetic dataset under " + out.string());

  std::size_t offset = 1;  // TU files are 1-indexed
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const auto& b = graphs[g];
    for (std::size_t v = 0; v < b.n; ++v) {
      ind << (g + 1) << "\n";
      if (options.with_node_labels) nl << (v % 3) << "\n";
    }
    for (const auto& [u, v] : b.edges) {
      // Both directions, as TU archives store them.
      a << (offset + u) << ", " << (offset + v) << "\n";
      a << (offset + v) << ", " << (offset + u) << "\n";
    }
    lab << labels[g] << "\n";
    offset += b.n;
  }
  return out;
}

}  // namespace ringforge
