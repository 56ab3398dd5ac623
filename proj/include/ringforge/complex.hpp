#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ringforge/graph.hpp"
#include "ringforge/rings.hpp"

namespace ringforge {

/// A 2-dimensional cellular complex: the graph as 1-skeleton plus one 2-cell
/// per chordless ring of length <= granularity. Cell ids per dimension are
/// dense 0-based indices; edge ids follow the graph's sorted-pair order and
/// ring ids follow enumerate_rings order.
struct CellularComplex {
  std::size_t n0 = 0, n1 = 0, n2 = 0;
  std::size_t granularity = 0;
  std::vector<std::pair<VertexId, VertexId>> edge_boundary;  // per 1-cell: (u, v), u < v
  std::vector<std::vector<EdgeId>> ring_boundary;            // per 2-cell: boundary 1-cells
  std::vector<std::vector<VertexId>> ring_vertices;          // per 2-cell: canonical cycle

  void validate() const;
};

CellularComplex build_complex(const Graph& graph, std::size_t m);

/// The four neighbor relations per dimension, as sorted unsigned neighbor
/// lists. boundary[k][c] lists (k-1)-cells under cell c; coboundary[k][c]
/// lists (k+1)-cells over it; upper/lower[k][c] list same-dimension cells
/// sharing a coboundary/boundary cell, without multiplicity and without c
/// itself. Relations that would need cells of dimension -1 or 3 are empty.
struct AdjacencyPack {
  std::array<std::vector<std::vector<std::uint32_t>>, 3> boundary;
  std::array<std::vector<std::vector<std::uint32_t>>, 3> coboundary;
  std::array<std::vector<std::vector<std::uint32_t>>, 3> upper;
  std::array<std::vector<std::vector<std::uint32_t>>, 3> lower;

  std::size_t n_cells(int k) const { return upper[static_cast<std::size_t>(k)].size(); }
};

AdjacencyPack adjacency_pack(const CellularComplex& complex);

/// Signed vertex-edge incidence: column per edge with +1 at the smaller
/// endpoint and -1 at the larger, so B1 * B1^T equals D - A exactly.
/// Message passing itself is unsigned; this matrix is the diagnostic route.
Mat oriented_incidence_b1(const Graph& graph);

/// Unsigned Hodge Laplacian L_k = A_k^U + A_k^L materialized from the
/// pack's 0/1 support matrices. Diagnostic only; k in {0, 1}.
Mat hodge_laplacian(const AdjacencyPack& pack, int k);

struct CellFeatures {
  Mat x0, x1, x2;
};

/// Initial cell features: X0 = node features, X1 rows are the mean of the
/// two endpoint rows, X2 rows the mean of the boundary edge rows. A complex
/// without 2-cells gets an empty X2 of the shared width.
CellFeatures init_cell_features(const CellularComplex& complex, const Mat& node_features);

}  // namespace ringforge
