#include "ringforge/complex.hpp"

#include <algorithm>

#include "ringforge/errors.hpp"

namespace ringforge {

void CellularComplex::validate() const {
  if (edge_boundary.size() != n1) throw ContractError("complex: edge_boundary size != n1");
  if (ring_boundary.size() != n2 || ring_vertices.size() != n2) {
    throw ContractError("complex: ring arrays size != n2");
  }
  for (const auto& [u, v] : edge_boundary) {
    if (u >= v || v >= n0) throw ContractError("complex: bad edge boundary");
  }
  for (std::size_t r = 0; r < n2; ++r) {
    const std::size_t len = ring_boundary[r].size();
    if (len < 3 || len > granularity || ring_vertices[r].size() != len) {
      throw ContractError("complex: ring length out of [3, m]");
    }
    for (EdgeId e : ring_boundary[r]) {
      if (e >= n1) throw ContractError("complex: ring boundary edge id out of range");
    }
  }
}

CellularComplex build_complex(const Graph& graph, std::size_t m) {
  CellularComplex cx;
  cx.n0 = graph.n_nodes;
  cx.n1 = graph.edges.size();
  cx.granularity = m;
  cx.edge_boundary = graph.edges;
  auto rings = enumerate_rings(graph, m);
  cx.n2 = rings.size();
  cx.ring_boundary.reserve(rings.size());
  cx.ring_vertices.reserve(rings.size());
  for (auto& r : rings) {
    cx.ring_boundary.push_back(std::move(r.edge_ids));
    cx.ring_vertices.push_back(std::move(r.vertices));
  }
  return cx;
}

namespace {

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Same-dimension neighbors through a shared cell one dimension away:
// for each cell of the `via` table, link all member cells pairwise.
std::vector<std::vector<std::uint32_t>> cross_neighbors(
    std::size_t n_cells, const std::vector<std::vector<std::uint32_t>>& via) {
  std::vector<std::vector<std::uint32_t>> out(n_cells);
  for (const auto& members : via) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i != j) out[members[i]].push_back(members[j]);
      }
    }
  }
  for (auto& nbrs : out) sort_unique(nbrs);
  return out;
}

}  // namespace

AdjacencyPack adjacency_pack(const CellularComplex& cx) {
  AdjacencyPack pack;
  for (int k = 0; k < 3; ++k) {
    const std::size_t n =
        k == 0 ? cx.n0 : (k == 1 ? cx.n1 : cx.n2);
    pack.boundary[k].resize(n);
    pack.coboundary[k].resize(n);
    pack.upper[k].resize(n);
    pack.lower[k].resize(n);
  }

  // Dimension 1: boundary vertices; dimension 0: coboundary edges.
  for (std::size_t e = 0; e < cx.n1; ++e) {
    const auto& [u, v] = cx.edge_boundary[e];
    pack.boundary[1][e] = {u, v};
    pack.coboundary[0][u].push_back(static_cast<std::uint32_t>(e));
    pack.coboundary[0][v].push_back(static_cast<std::uint32_t>(e));
  }
  // Dimension 2: boundary edges; dimension 1: coboundary rings.
  for (std::size_t r = 0; r < cx.n2; ++r) {
    auto edges = cx.ring_boundary[r];
    sort_unique(edges);
    pack.boundary[2][r] = edges;
    for (std::uint32_t e : edges) {
      pack.coboundary[1][e].push_back(static_cast<std::uint32_t>(r));
    }
  }
  for (int k = 0; k < 3; ++k) {
    for (auto& nbrs : pack.coboundary[k]) sort_unique(nbrs);
  }

  // Upper(k) via shared (k+1)-cell, lower(k) via shared (k-1)-cell.
  pack.upper[0] = cross_neighbors(cx.n0, pack.boundary[1]);
  pack.upper[1] = cross_neighbors(cx.n1, pack.boundary[2]);
  pack.lower[1] = cross_neighbors(cx.n1, pack.coboundary[0]);
  pack.lower[2] = cross_neighbors(cx.n2, pack.coboundary[1]);
  // upper[2] needs 3-cells and lower[0] needs (-1)-cells; both stay empty.

  return pack;
}

Mat oriented_incidence_b1(const Graph& graph) {
  Mat b1(graph.n_nodes, graph.edges.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& [u, v] = graph.edges[e];
    b1.at(u, e) = 1.0;
    b1.at(v, e) = -1.0;
  }
  return b1;
}

Mat hodge_laplacian(const AdjacencyPack& pack, int k) {
  if (k != 0 && k != 1) throw ContractError("hodge_laplacian: k must be 0 or 1");
  const std::size_t n = pack.n_cells(k);
  Mat l(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::uint32_t nb : pack.upper[k][c]) l.at(c, nb) += 1.0;
    for (std::uint32_t nb : pack.lower[k][c]) l.at(c, nb) += 1.0;
  }
  return l;
}

CellFeatures init_cell_features(const CellularComplex& cx, const Mat& node_features) {
  if (node_features.rows() != cx.n0) {
    throw ContractError("init_cell_features: feature rows != n0");
  }
  const std::size_t w = node_features.cols();
  CellFeatures f;
  f.x0 = node_features;
  f.x1 = Mat(cx.n1, w);
  for (std::size_t e = 0; e < cx.n1; ++e) {
    const auto& [u, v] = cx.edge_boundary[e];
    for (std::size_t j = 0; j < w; ++j) {
      f.x1.at(e, j) = 0.5 * (node_features.at(u, j) + node_features.at(v, j));
    }
  }
  f.x2 = Mat(cx.n2, w);
  for (std::size_t r = 0; r < cx.n2; ++r) {
    const auto& edges = cx.ring_boundary[r];
    for (std::uint32_t e : edges) {
      for (std::size_t j = 0; j < w; ++j) f.x2.at(r, j) += f.x1.at(e, j);
    }
    for (std::size_t j = 0; j < w; ++j) f.x2.at(r, j) /= static_cast<double>(edges.size());
  }
  return f;
}

}  // namespace ringforge
