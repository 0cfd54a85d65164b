#pragma once

#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "antcd/graph.hpp"
#include "antcd/partition.hpp"

namespace antcd {

struct BenchmarkInstance {
  Graph graph;
  Partition truth;
  nlohmann::json params;  // generator parameters echoed back
};

/// Planted partition with independent Bernoulli edges: intra-group pairs
/// with probability z_in / (group_size - 1), inter-group pairs with
/// z_out / ((groups - 1) * group_size). Expected degree is z_in + z_out.
/// Vertex v belongs to group v / group_size.
BenchmarkInstance gen_gn(std::size_t groups, std::size_t group_size,
                         double z_in, double z_out, std::uint64_t seed);

/// `num_cliques` disjoint K_{clique_size}; vertex 0 of clique t is joined to
/// vertex 1 of clique (t + 1) mod num_cliques.
BenchmarkInstance gen_clique_ring(std::size_t num_cliques,
                                  std::size_t clique_size);

/// Ring K20 - K20 - K5 - K5 (- back to the first K20) with single unit edges
/// between neighbouring cliques, wired as in gen_clique_ring. n = 50, m = 404.
BenchmarkInstance gen_clique_pairs();

}  // namespace antcd
