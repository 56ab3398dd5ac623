#include "ringforge/rings.hpp"

#include <algorithm>
#include <map>

#include "ringforge/errors.hpp"

namespace ringforge {

namespace {

// Flat adjacency-matrix view for O(1) chord tests.
class AdjMatrix {
 public:
  explicit AdjMatrix(const Graph& g) : n_(g.n_nodes), bits_(n_ * n_, 0) {
    for (const auto& [u, v] : g.edges) {
      bits_[u * n_ + v] = 1;
      bits_[v * n_ + u] = 1;
    }
  }
  bool operator()(VertexId u, VertexId v) const { return bits_[u * n_ + v] != 0; }

 private:
  std::size_t n_;
  std::vector<char> bits_;
};

// DFS over induced paths (s, p1, ..., pt) with every interior vertex > s.
// A neighbor w of pt that touches no interior vertex extends the path; one
// whose only other path contact is s closes a chordless cycle. Anything
// adjacent to an interior vertex would put a chord into every cycle through
// this path, so the branch dies.
class RingSearch {
 public:
  RingSearch(const Graph& g, std::size_t m, std::vector<Ring>& out)
      : adj_(g), neighbors_(g.adjacency_lists()), m_(m), out_(out) {}

  void run() {
    const std::size_t n = neighbors_.size();
    in_path_.assign(n, 0);
    for (VertexId s = 0; s < n; ++s) {
      path_.clear();
      path_.push_back(s);
      in_path_[s] = 1;
      for (VertexId v1 : neighbors_[s]) {
        if (v1 <= s) continue;
        path_.push_back(v1);
        in_path_[v1] = 1;
        extend();
        in_path_[v1] = 0;
        path_.pop_back();
      }
      in_path_[s] = 0;
    }
  }

 private:
  void extend() {
    const VertexId s = path_.front();
    const VertexId tip = path_.back();
    const std::size_t t = path_.size() - 1;  // index of tip
    for (VertexId w : neighbors_[tip]) {
      if (w <= s || in_path_[w]) continue;
      bool touches_interior = false;
      for (std::size_t i = 1; i < t; ++i) {
        if (adj_(w, path_[i])) {
          touches_interior = true;
          break;
        }
      }
      if (touches_interior) continue;
      if (adj_(w, s)) {
        // Closing vertex; record once per cycle (direction fixed by
        // path_[1] < w).
        if (t + 2 >= 3 && t + 2 <= m_ && path_[1] < w) {
          Ring r;
          r.vertices = path_;
          r.vertices.push_back(w);
          out_.push_back(std::move(r));
        }
        continue;  // a closing vertex cannot be an interior vertex
      }
      if (t + 3 <= m_) {  // room for at least one more vertex plus closure
        path_.push_back(w);
        in_path_[w] = 1;
        extend();
        in_path_[w] = 0;
        path_.pop_back();
      }
    }
  }

  AdjMatrix adj_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::size_t m_;
  std::vector<Ring>& out_;
  std::vector<VertexId> path_;
  std::vector<char> in_path_;
};

}  // namespace

std::vector<Ring> enumerate_rings(const Graph& graph, std::size_t m, std::size_t cap) {
  if (m < 3) throw ConfigError("enumerate_rings: m must be >= 3, got " + std::to_string(m));
  if (m > cap) {
    throw ConfigError("enumerate_rings: m = " + std::to_string(m) + " exceeds cap " +
                      std::to_string(cap));
  }

  std::vector<Ring> rings;
  RingSearch(graph, m, rings).run();

  std::sort(rings.begin(), rings.end(), [](const Ring& a, const Ring& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });

  // Edge ids by sorted endpoint pairs.
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    edge_id[graph.edges[i]] = static_cast<EdgeId>(i);
  }
  for (auto& r : rings) {
    const std::size_t len = r.length();
    r.edge_ids.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      VertexId u = r.vertices[i];
      VertexId v = r.vertices[(i + 1) % len];
      if (u > v) std::swap(u, v);
      r.edge_ids[i] = edge_id.at({u, v});
    }
  }
  return rings;
}

}  // namespace ringforge
