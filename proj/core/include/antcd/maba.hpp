#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "antcd/graph.hpp"
#include "antcd/partition.hpp"
#include "antcd/saba.hpp"

namespace antcd {

/// Fine vertex -> coarse vertex surjection onto 0..coarse_size-1.
struct CoarsenMap {
  std::vector<VertexId> image;
  VertexId coarse_size = 0;
};

struct Coarsened {
  Graph graph;
  CoarsenMap map;
};

/// Collapses every community of `p` into one vertex. Crossing weights
/// between two communities are summed into one edge; weight inside a
/// community (fine self-loops included) becomes the coarse self-loop.
/// Coarse vertex ids follow p.compacted() numbering. 2m is preserved.
Coarsened coarsen(const Graph& g, const Partition& p);

/// Pulls `coarse` back through the composed maps onto the vertices of
/// `fine`. chain[0] maps fine's vertices; each later map's domain is the
/// previous map's codomain. Throws InvalidArgument on a size mismatch.
Partition project_partition(const Graph& fine, std::span<const CoarsenMap> chain,
                            const Partition& coarse);

struct HierarchyLevel {
  Graph graph;                 // N(i); level 0 holds the input graph
  Partition coarse_partition;  // H(i) on N(i)
  Partition projected;         // H(i) pulled back to the input vertices
  double q = 0.0;
  std::vector<double> q_trace;  // SABA trace for this level
  std::size_t iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;        // seed the level's SABA run used
};

struct Hierarchy {
  std::vector<HierarchyLevel> levels;
  std::size_t best_level = 0;
};

/// Seed for the SABA run at `level`, derived from the master seed.
std::uint64_t level_seed(std::uint64_t master, std::size_t level);

/// Alternates SABA and coarsening. Each level starts from the singleton
/// partition of its graph at full temperature. Stops once a level's Q does
/// not strictly exceed the previous level's; that last level is kept in
/// the hierarchy but never chosen as best.
Hierarchy run_maba(const Graph& g, const SabaConfig& cfg);

const Partition& best_partition(const Hierarchy& h);

}  // namespace antcd
