#include "antcd/maba.hpp"

#include <string>
#include <utility>

#include "antcd/error.hpp"
#include "antcd/metrics.hpp"

namespace antcd {

Coarsened coarsen(const Graph& g, const Partition& p) {
  if (p.num_vertices() != g.num_vertices()) {
    throw InvalidArgument("partition does not match graph");
  }
  const Partition compact = p.compacted();
  Coarsened out;
  out.map.coarse_size = static_cast<VertexId>(compact.num_communities());
  out.map.image.assign(compact.labels().begin(), compact.labels().end());

  std::vector<WeightedEdge> edges;
  edges.reserve(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.target < v) continue;
      edges.push_back({out.map.image[v], out.map.image[nb.target], nb.weight});
    }
  }
  out.graph = Graph::from_edges(out.map.coarse_size, edges, g.total_weight_2m());
  return out;
}

Partition project_partition(const Graph& fine,
                            std::span<const CoarsenMap> chain,
                            const Partition& coarse) {
  std::vector<CommunityId> labels(fine.num_vertices());
  for (VertexId v = 0; v < fine.num_vertices(); ++v) labels[v] = v;

  std::size_t domain = fine.num_vertices();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const CoarsenMap& map = chain[i];
    if (map.image.size() != domain) {
      throw InvalidArgument("coarsen map " + std::to_string(i) + " expects " +
                            std::to_string(map.image.size()) +
                            " vertices, got " + std::to_string(domain));
    }
    for (auto& l : labels) {
      l = map.image[l];
      if (l >= map.coarse_size) {
        throw InvalidArgument("coarsen map " + std::to_string(i) +
                              " has an image outside its codomain");
      }
    }
    domain = map.coarse_size;
  }
  if (coarse.num_vertices() != domain) {
    throw InvalidArgument("coarse partition covers " +
                          std::to_string(coarse.num_vertices()) +
                          " vertices, chain ends at " + std::to_string(domain));
  }
  for (auto& l : labels) l = coarse.label(l);
  return Partition::from_labels(fine, std::move(labels));
}

std::uint64_t level_seed(std::uint64_t master, std::size_t level) {
  // splitmix64 finalizer over (master, level).
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (level + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Hierarchy run_maba(const Graph& g, const SabaConfig& cfg) {
  cfg.validate();
  require_edges(g);

  Hierarchy h;
  std::vector<CoarsenMap> chain;
  Graph current = g;
  while (true) {
    const std::size_t level = h.levels.size();
    SabaConfig level_cfg = cfg;
    level_cfg.seed = level_seed(cfg.seed, level);
    if (level > 0) level_cfg.stop_rule = cfg.coarse_stop_rule;
    SabaResult run = run_saba(current, Partition::singleton(current), level_cfg);

    HierarchyLevel rec;
    rec.projected = project_partition(g, chain, run.partition);
    rec.q = run.modularity;
    rec.q_trace = std::move(run.q_trace);
    rec.iterations = run.iterations;
    rec.converged = run.converged;
    rec.seed = level_cfg.seed;
    rec.coarse_partition = std::move(run.partition);
    rec.graph = current;

    const bool improved = h.levels.empty() || rec.q > h.levels.back().q;
    h.levels.push_back(std::move(rec));
    if (!improved) break;
    h.best_level = level;

    Coarsened next = coarsen(current, h.levels.back().coarse_partition);
    chain.push_back(std::move(next.map));
    current = std::move(next.graph);
  }
  return h;
}

const Partition& best_partition(const Hierarchy& h) {
  if (h.levels.empty()) throw InvalidArgument("empty hierarchy");
  return h.levels[h.best_level].projected;
}

}  // namespace antcd
