#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace antcd {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

struct Neighbor {
  VertexId target;
  double weight;
};

struct WeightedEdge {
  VertexId u;
  VertexId v;
  double weight;
};

/// Immutable weighted undirected graph in CSR form.
///
/// An edge {u, v} with u != v is stored in both adjacency rows. A self-loop
/// on v is stored once in v's row. Strength counts a self-loop twice, so
/// strength(v) = sum_{u != v} w_uv + 2 w_vv and total_weight_2m() is the sum
/// of all strengths. Under this convention collapsing a community to a single
/// vertex with a self-loop preserves modularity exactly.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `num_vertices` vertices. Parallel edges (in either
  /// orientation) are merged by summing their weights. Throws
  /// InvalidArgument on out-of-range endpoints or negative weights.
  static Graph from_edges(VertexId num_vertices,
                          std::span<const WeightedEdge> edges);

  /// As above, but adopts `total_weight_2m` as 2m instead of the rounded
  /// sum of strengths. Coarsening uses it to keep the fine graph's 2m
  /// bit for bit. Throws InvalidArgument if the two disagree beyond rounding.
  static Graph from_edges(VertexId num_vertices,
                          std::span<const WeightedEdge> edges,
                          double total_weight_2m);

  VertexId num_vertices() const noexcept { return num_vertices_; }

  /// Number of distinct undirected edges, self-loops included.
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Neighbor> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  std::size_t degree(VertexId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

  double strength(VertexId v) const noexcept { return strength_[v]; }
  std::span<const double> strengths() const noexcept { return strength_; }

  /// Stored weight w_vv of v's self-loop, 0 if absent.
  double self_loop(VertexId v) const noexcept { return self_loop_[v]; }

  /// Weight of edge {u, v}; 0 if absent. O(deg(u)).
  double edge_weight(VertexId u, VertexId v) const noexcept;

  /// 2m = sum of strengths.
  double total_weight_2m() const noexcept { return total_weight_2m_; }

  /// m = sum of stored edge weights, each undirected edge and self-loop once.
  double total_weight() const noexcept { return total_weight_2m_ / 2.0; }

 private:
  VertexId num_vertices_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<double> strength_;
  std::vector<double> self_loop_;
  double total_weight_2m_ = 0.0;
};

/// Throws NoEdgesError when 2m == 0.
void require_edges(const Graph& g);

}  // namespace antcd
