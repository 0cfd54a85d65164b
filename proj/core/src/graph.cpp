#include "antcd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "antcd/error.hpp"

namespace antcd {

Graph Graph::from_edges(VertexId num_vertices,
                        std::span<const WeightedEdge> edges) {
  std::vector<WeightedEdge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw InvalidArgument("edge endpoint out of range: " +
                            std::to_string(std::max(e.u, e.v)));
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument("edge weight must be finite and non-negative");
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(canon.begin(), canon.end(), [](const auto& a, const auto& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });

  // Merge parallel edges.
  std::vector<WeightedEdge> merged;
  merged.reserve(canon.size());
  for (const auto& e : canon) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }

  Graph g;
  g.num_vertices_ = num_vertices;
  g.num_edges_ = merged.size();
  g.strength_.assign(num_vertices, 0.0);
  g.self_loop_.assign(num_vertices, 0.0);

  std::vector<std::size_t> row_size(num_vertices, 0);
  for (const auto& e : merged) {
    ++row_size[e.u];
    if (e.u != e.v) ++row_size[e.v];
  }
  g.offsets_.assign(static_cast<std::size_t>(num_vertices) + 1, 0);
  for (VertexId v = 0; v < num_vertices; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + row_size[v];
  }
  g.adjacency_.resize(g.offsets_.back());

  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : merged) {
    g.adjacency_[cursor[e.u]++] = {e.v, e.weight};
    if (e.u == e.v) {
      g.self_loop_[e.u] = e.weight;
      g.strength_[e.u] += 2.0 * e.weight;
    } else {
      g.adjacency_[cursor[e.v]++] = {e.u, e.weight};
      g.strength_[e.u] += e.weight;
      g.strength_[e.v] += e.weight;
    }
  }
  for (VertexId v = 0; v < num_vertices; ++v) {
    auto row = std::span(g.adjacency_).subspan(g.offsets_[v], row_size[v]);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.target < b.target; });
  }

  double total = 0.0;
  for (double s : g.strength_) total += s;
  g.total_weight_2m_ = total;
  return g;
}

Graph Graph::from_edges(VertexId num_vertices,
                        std::span<const WeightedEdge> edges,
                        double total_weight_2m) {
  Graph g = from_edges(num_vertices, edges);
  const double drift = std::abs(g.total_weight_2m_ - total_weight_2m);
  if (!(drift <= 1e-9 * std::max(1.0, std::abs(total_weight_2m)))) {
    throw InvalidArgument("2m does not match the summed strengths");
  }
  g.total_weight_2m_ = total_weight_2m;
  return g;
}

double Graph::edge_weight(VertexId u, VertexId v) const noexcept {
  const auto row = neighbors(u);
  const auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const Neighbor& n, VertexId t) { return n.target < t; });
  return (it != row.end() && it->target == v) ? it->weight : 0.0;
}

void require_edges(const Graph& g) {
  if (!(g.total_weight_2m() > 0.0)) throw NoEdgesError();
}

}  // namespace antcd
