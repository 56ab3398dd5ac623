#pragma once

#include <cstddef>
#include <vector>

#include "ringforge/graph.hpp"

namespace ringforge {

/// Hard cap on the maximum ring size accepted by enumerate_rings.
inline constexpr std::size_t kRingSizeCap = 15;

/// A chordless simple cycle in canonical form: vertices[0] is the smallest
/// vertex on the cycle and vertices[1] < vertices.back() fixes the
/// direction. edge_ids walk the cycle, edge_ids[i] joining vertices[i] and
/// vertices[(i+1) % len], using the graph's sorted-pair edge ids.
struct Ring {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edge_ids;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const Ring& o) const { return vertices == o.vertices; }
};

/// Enumerates every chordless simple cycle of length 3..m, each exactly once
/// in canonical form, ordered by (length, lexicographic vertex sequence).
/// Because of that ordering, the result for granularity m is a prefix of the
/// result for any n >= m on the same graph.
///
/// Throws ConfigError if m < 3 or m > cap.
std::vector<Ring> enumerate_rings(const Graph& graph, std::size_t m,
                                  std::size_t cap = kRingSizeCap);

}  // namespace ringforge
