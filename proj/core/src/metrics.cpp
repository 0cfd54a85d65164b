#include "antcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "antcd/error.hpp"

namespace antcd {

namespace {

void require_matching(const Graph& g, const Partition& p) {
  if (p.num_vertices() != g.num_vertices()) {
    throw InvalidArgument("partition covers " +
                          std::to_string(p.num_vertices()) +
                          " vertices, graph has " +
                          std::to_string(g.num_vertices()));
  }
}

}  // namespace

double modularity_naive(const Graph& g, const Partition& p) {
  require_edges(g);
  require_matching(g, p);
  const VertexId n = g.num_vertices();
  const double two_m = g.total_weight_2m();
  std::vector<double> row(n, 0.0);
  double sum = 0.0;
  for (VertexId i = 0; i < n; ++i) {
    for (const auto& nb : g.neighbors(i)) {
      row[nb.target] = nb.target == i ? 2.0 * nb.weight : nb.weight;
    }
    const double ki = g.strength(i);
    for (VertexId j = 0; j < n; ++j) {
      if (p.label(i) != p.label(j)) continue;
      sum += row[j] - ki * g.strength(j) / two_m;
    }
    for (const auto& nb : g.neighbors(i)) row[nb.target] = 0.0;
  }
  return sum / two_m;
}

double modularity(const Graph& g, const Partition& p) {
  require_edges(g);
  require_matching(g, p);
  const double m = g.total_weight();
  const double two_m = g.total_weight_2m();
  double q = 0.0;
  for (CommunityId c = 0; c < p.label_bound(); ++c) {
    if (!p.is_nonempty(c)) continue;
    const double share = p.strength(c) / two_m;
    q += p.internal_weight(c) / m - share * share;
  }
  return q;
}

double local_f(const Graph& g, const Partition& p, VertexId i,
               CommunityId as_label) {
  require_edges(g);
  require_matching(g, p);
  if (i >= g.num_vertices()) {
    throw InvalidArgument("vertex id out of range: " + std::to_string(i));
  }
  if (!p.is_nonempty(as_label)) {
    throw InvalidArgument("no such community: " + std::to_string(as_label));
  }
  double linked = 0.0;
  for (const auto& nb : g.neighbors(i)) {
    if (nb.target != i && p.label(nb.target) == as_label) linked += nb.weight;
  }
  const double ki = g.strength(i);
  const double kc = p.strength(as_label) + (p.label(i) == as_label ? 0.0 : ki);
  return linked + 2.0 * g.self_loop(i) - ki * kc / g.total_weight_2m();
}

double nmi(std::span<const CommunityId> a, std::span<const CommunityId> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("nmi: labelings cover different vertex counts (" +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + ")");
  }
  if (a.empty()) throw InvalidArgument("nmi: empty vertex set");
  const double n = static_cast<double>(a.size());

  std::unordered_map<CommunityId, double> count_a;
  std::unordered_map<CommunityId, double> count_b;
  std::unordered_map<std::uint64_t, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count_a[a[i]] += 1.0;
    count_b[b[i]] += 1.0;
    joint[(static_cast<std::uint64_t>(a[i]) << 32) | b[i]] += 1.0;
  }

  double h_a = 0.0;
  for (const auto& [c, nx] : count_a) h_a += nx * std::log(nx / n);
  double h_b = 0.0;
  for (const auto& [c, ny] : count_b) h_b += ny * std::log(ny / n);

  const bool flat_a = count_a.size() == 1;
  const bool flat_b = count_b.size() == 1;
  if (flat_a && flat_b) return 1.0;
  if (flat_a || flat_b) return 0.0;

  // Summing the cell terms in sorted order makes nmi(a, b) == nmi(b, a)
  // bit for bit.
  std::vector<double> cells;
  cells.reserve(joint.size());
  for (const auto& [key, nxy] : joint) {
    const double nx = count_a[static_cast<CommunityId>(key >> 32)];
    const double ny = count_b[static_cast<CommunityId>(key & 0xffffffffu)];
    cells.push_back(nxy * std::log(nxy * n / (nx * ny)));
  }
  std::sort(cells.begin(), cells.end());
  double mutual = 0.0;
  for (double c : cells) mutual += c;
  const double value = -2.0 * mutual / (h_a + h_b);
  return std::clamp(value, 0.0, 1.0);
}

double nmi(const Partition& a, const Partition& b) {
  return nmi(a.labels(), b.labels());
}

double partition_density(const Graph& g, const Partition& p) {
  require_matching(g, p);
  if (g.num_vertices() == 0) throw InvalidArgument("empty graph");
  std::vector<double> edges_inside(p.label_bound(), 0.0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.target > v && p.label(nb.target) == p.label(v)) {
        edges_inside[p.label(v)] += 1.0;
      }
    }
  }
  double sum = 0.0;
  for (CommunityId c = 0; c < p.label_bound(); ++c) {
    const auto ns = static_cast<double>(p.size(c));
    if (ns <= 2.0) continue;
    sum += ns * (edges_inside[c] - ns + 1.0) / ((ns - 2.0) * (ns - 1.0));
  }
  return 2.0 * sum / static_cast<double>(g.num_vertices());
}

bool weak_community_check(const Graph& g, const Partition& p, CommunityId c) {
  require_matching(g, p);
  if (!p.is_nonempty(c)) {
    throw InvalidArgument("no such community: " + std::to_string(c));
  }
  const double internal_degree = 2.0 * p.internal_weight(c);
  const double external_degree = p.strength(c) - internal_degree;
  return internal_degree > external_degree;
}

ResolutionReport resolution_report(const Graph& g, const Partition& p) {
  ResolutionReport r;
  r.Q = modularity(g, p);
  r.L = g.total_weight();
  r.D = partition_density(g, p);
  const double small = std::sqrt(r.L / 2.0);
  const double medium = std::sqrt(2.0 * r.L);
  for (CommunityId c = 0; c < p.label_bound(); ++c) {
    if (!p.is_nonempty(c)) continue;
    ++r.C;
    const double in = p.internal_weight(c);
    if (in < small) {
      ++r.C1;
    } else if (in <= medium) {
      ++r.C2;
    }
    if (weak_community_check(g, p, c)) ++r.C3;
  }
  const auto total = static_cast<double>(r.C);
  r.P1 = static_cast<double>(r.C1) / total;
  r.P2 = static_cast<double>(r.C2) / total;
  r.P3 = static_cast<double>(r.C3) / total;
  return r;
}

void to_json(nlohmann::json& j, const ResolutionReport& r) {
  j = nlohmann::json{{"C", r.C},   {"Q", r.Q},   {"C1", r.C1}, {"P1", r.P1},
                     {"C2", r.C2}, {"P2", r.P2}, {"C3", r.C3}, {"P3", r.P3},
                     {"D", r.D},   {"L", r.L}};
}

}  // namespace antcd
