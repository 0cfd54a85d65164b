#include "antcd/generators.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "antcd/error.hpp"
#include "antcd/random.hpp"

namespace antcd {

namespace {

// Appends each v in [first, last) as a neighbour of u with probability p,
// skipping ahead geometrically so the cost is proportional to the output.
void sample_row(std::vector<WeightedEdge>& edges, VertexId u, VertexId first,
                VertexId last, double p, Rng& rng) {
  if (p <= 0.0 || first >= last) return;
  if (p >= 1.0) {
    for (VertexId v = first; v < last; ++v) edges.push_back({u, v, 1.0});
    return;
  }
  const double log_q = std::log1p(-p);
  double pos = static_cast<double>(first) - 1.0;
  while (true) {
    const double r = 1.0 - uniform_unit(rng);  // (0, 1]
    pos += 1.0 + std::floor(std::log(r) / log_q);
    if (pos >= static_cast<double>(last)) break;
    edges.push_back({u, static_cast<VertexId>(pos), 1.0});
  }
}

BenchmarkInstance make_instance(VertexId n, const std::vector<WeightedEdge>& edges,
                                std::vector<CommunityId> truth,
                                nlohmann::json params) {
  BenchmarkInstance inst;
  inst.graph = Graph::from_edges(n, edges);
  inst.truth = Partition::from_labels(inst.graph, std::move(truth));
  inst.params = std::move(params);
  return inst;
}

void add_clique(std::vector<WeightedEdge>& edges, VertexId first,
                std::size_t size) {
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      edges.push_back({static_cast<VertexId>(first + a),
                       static_cast<VertexId>(first + b), 1.0});
    }
  }
}

}  // namespace

BenchmarkInstance gen_gn(std::size_t groups, std::size_t group_size,
                         double z_in, double z_out, std::uint64_t seed) {
  if (groups < 2) throw ConfigError("gn: need at least 2 groups");
  if (group_size < 2) throw ConfigError("gn: group size must be >= 2");
  const double total = static_cast<double>(groups) * group_size;
  if (total > std::numeric_limits<VertexId>::max()) {
    throw ConfigError("gn: too many vertices");
  }
  const double p_in = z_in / static_cast<double>(group_size - 1);
  const double p_out =
      z_out / (static_cast<double>(groups - 1) * static_cast<double>(group_size));
  if (!(p_in >= 0.0 && p_in <= 1.0)) {
    throw ConfigError("gn: z_in gives intra-group probability outside [0, 1]");
  }
  if (!(p_out >= 0.0 && p_out <= 1.0)) {
    throw ConfigError("gn: z_out gives inter-group probability outside [0, 1]");
  }

  const auto n = static_cast<VertexId>(total);
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(total * (z_in + z_out) / 2.0 * 1.1) + 16);
  std::vector<CommunityId> truth(n);
  for (VertexId u = 0; u < n; ++u) {
    const auto group = static_cast<VertexId>(u / group_size);
    truth[u] = group;
    const auto group_end = static_cast<VertexId>((group + 1) * group_size);
    sample_row(edges, u, u + 1, group_end, p_in, rng);
    sample_row(edges, u, group_end, n, p_out, rng);
  }
  return make_instance(n, edges, std::move(truth),
                       {{"kind", "gn"},
                        {"groups", groups},
                        {"group_size", group_size},
                        {"z_in", z_in},
                        {"z_out", z_out},
                        {"seed", seed}});
}

BenchmarkInstance gen_clique_ring(std::size_t num_cliques,
                                  std::size_t clique_size) {
  if (num_cliques < 3) throw ConfigError("clique-ring: need at least 3 cliques");
  if (clique_size < 3) throw ConfigError("clique-ring: clique size must be >= 3");
  const double total = static_cast<double>(num_cliques) * clique_size;
  if (total > std::numeric_limits<VertexId>::max()) {
    throw ConfigError("clique-ring: too many vertices");
  }
  const auto n = static_cast<VertexId>(total);
  std::vector<WeightedEdge> edges;
  std::vector<CommunityId> truth(n);
  for (std::size_t t = 0; t < num_cliques; ++t) {
    const auto first = static_cast<VertexId>(t * clique_size);
    add_clique(edges, first, clique_size);
    for (std::size_t a = 0; a < clique_size; ++a) {
      truth[first + a] = static_cast<CommunityId>(t);
    }
    const auto next = static_cast<VertexId>(((t + 1) % num_cliques) * clique_size);
    edges.push_back({first, next + 1, 1.0});
  }
  return make_instance(n, edges, std::move(truth),
                       {{"kind", "clique-ring"},
                        {"cliques", num_cliques},
                        {"clique_size", clique_size}});
}

BenchmarkInstance gen_clique_pairs() {
  constexpr std::size_t kSizes[] = {20, 20, 5, 5};
  std::vector<VertexId> first;
  VertexId n = 0;
  for (std::size_t s : kSizes) {
    first.push_back(n);
    n += static_cast<VertexId>(s);
  }
  std::vector<WeightedEdge> edges;
  std::vector<CommunityId> truth(n);
  for (std::size_t t = 0; t < 4; ++t) {
    add_clique(edges, first[t], kSizes[t]);
    for (std::size_t a = 0; a < kSizes[t]; ++a) {
      truth[first[t] + a] = static_cast<CommunityId>(t);
    }
    edges.push_back({first[t], first[(t + 1) % 4] + 1, 1.0});
  }
  return make_instance(n, edges, std::move(truth),
                       {{"kind", "clique-pairs"}, {"clique_sizes", {20, 20, 5, 5}}});
}

}  // namespace antcd
