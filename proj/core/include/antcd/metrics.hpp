#pragma once

#include <cstddef>
#include <span>

#include <nlohmann/json_fwd.hpp>

#include "antcd/graph.hpp"
#include "antcd/partition.hpp"

namespace antcd {

/// Modularity by the literal double sum over ordered vertex pairs, with
/// A_ii = 2 w_ii. O(n^2); meant as a reference for small graphs.
double modularity_naive(const Graph& g, const Partition& p);

/// Modularity from community aggregates:
///   Q = sum_c [ in_c / m - (K_c / 2m)^2 ].
double modularity(const Graph& g, const Partition& p);

/// Per-vertex contribution f(i) evaluated as if i carried `as_label`, every
/// other label unchanged:
///   f = sum_{j != i, r(j) = as_label} A_ij + A_ii - k_i K'_c / 2m
/// where K'_c is the strength of `as_label` counting k_i once. Summing
/// f(i, r(i)) over all i gives 2m Q. O(deg(i)).
double local_f(const Graph& g, const Partition& p, VertexId i,
               CommunityId as_label);

/// Normalized mutual information (natural log) between two labelings of
/// the same vertex set. Returns 1 when both labelings are a single
/// community and 0 when exactly one is.
double nmi(std::span<const CommunityId> a, std::span<const CommunityId> b);
double nmi(const Partition& a, const Partition& b);

/// Vertex partition density
///   D = (2/n) sum_s n_s (m_s - n_s + 1) / ((n_s - 2)(n_s - 1)),
/// with m_s the number of distinct non-loop edges inside s and the term
/// taken as 0 for n_s <= 2.
double partition_density(const Graph& g, const Partition& p);

/// Radicchi weak community: total internal degree strictly exceeds total
/// external degree, i.e. 2 in_c > K_c - 2 in_c.
bool weak_community_check(const Graph& g, const Partition& p, CommunityId c);

struct ResolutionReport {
  std::size_t C = 0;
  double Q = 0.0;
  std::size_t C1 = 0;  // internal weight < sqrt(L/2)
  double P1 = 0.0;
  std::size_t C2 = 0;  // internal weight in [sqrt(L/2), sqrt(2L)]
  double P2 = 0.0;
  std::size_t C3 = 0;  // weak communities
  double P3 = 0.0;
  double D = 0.0;
  double L = 0.0;  // total edge weight m
};

ResolutionReport resolution_report(const Graph& g, const Partition& p);

void to_json(nlohmann::json& j, const ResolutionReport& r);

}  // namespace antcd
