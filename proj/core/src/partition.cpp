#include "antcd/partition.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "antcd/error.hpp"

namespace antcd {

Partition Partition::singleton(const Graph& g) {
  std::vector<CommunityId> labels(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) labels[v] = v;
  return from_labels(g, std::move(labels));
}

Partition Partition::from_labels(const Graph& g,
                                 std::vector<CommunityId> labels) {
  if (labels.size() != g.num_vertices()) {
    throw InvalidArgument("label count " + std::to_string(labels.size()) +
                          " does not match vertex count " +
                          std::to_string(g.num_vertices()));
  }
  Partition p;
  p.labels_ = std::move(labels);
  const std::size_t bound =
      p.labels_.empty()
          ? 0
          : static_cast<std::size_t>(
                *std::max_element(p.labels_.begin(), p.labels_.end())) + 1;
  p.internal_.assign(bound, 0.0);
  p.strength_.assign(bound, 0.0);
  p.size_.assign(bound, 0);

  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const CommunityId c = p.labels_[v];
    p.strength_[c] += g.strength(v);
    if (p.size_[c]++ == 0) ++p.num_communities_;
    for (const auto& nb : g.neighbors(v)) {
      // Count each non-loop edge from its lower endpoint only.
      if (nb.target < v || p.labels_[nb.target] != c) continue;
      p.internal_[c] += nb.weight;
    }
  }
  return p;
}

void Partition::move(const Graph& g, VertexId v, CommunityId to) {
  if (v >= labels_.size()) {
    throw InvalidArgument("vertex id out of range: " + std::to_string(v));
  }
  if (to >= size_.size()) {
    throw InvalidArgument("community id out of range: " + std::to_string(to));
  }
  const CommunityId from = labels_[v];
  if (from == to) return;

  double to_from = 0.0;
  double to_to = 0.0;
  for (const auto& nb : g.neighbors(v)) {
    if (nb.target == v) continue;
    const CommunityId c = labels_[nb.target];
    if (c == from) {
      to_from += nb.weight;
    } else if (c == to) {
      to_to += nb.weight;
    }
  }
  const double loop = g.self_loop(v);
  const double k = g.strength(v);

  internal_[from] -= to_from + loop;
  internal_[to] += to_to + loop;
  strength_[from] -= k;
  strength_[to] += k;
  if (--size_[from] == 0) {
    --num_communities_;
    internal_[from] = 0.0;
    strength_[from] = 0.0;
  }
  if (size_[to]++ == 0) ++num_communities_;
  labels_[v] = to;
}

Partition Partition::compacted() const {
  constexpr auto kUnset = std::numeric_limits<CommunityId>::max();
  std::vector<CommunityId> remap(label_bound(), kUnset);
  CommunityId next = 0;
  Partition out;
  out.labels_.resize(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    CommunityId& r = remap[labels_[v]];
    if (r == kUnset) r = next++;
    out.labels_[v] = r;
  }
  out.internal_.assign(next, 0.0);
  out.strength_.assign(next, 0.0);
  out.size_.assign(next, 0);
  for (std::size_t c = 0; c < remap.size(); ++c) {
    if (remap[c] == kUnset) continue;
    out.internal_[remap[c]] = internal_[c];
    out.strength_[remap[c]] = strength_[c];
    out.size_[remap[c]] = size_[c];
  }
  out.num_communities_ = next;
  return out;
}

bool same_grouping(std::span<const CommunityId> a,
                   std::span<const CommunityId> b) {
  if (a.size() != b.size()) return false;
  std::unordered_map<CommunityId, CommunityId> ab;
  std::unordered_map<CommunityId, CommunityId> ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto [it1, new1] = ab.emplace(a[i], b[i]);
    const auto [it2, new2] = ba.emplace(b[i], a[i]);
    if (it1->second != b[i] || it2->second != a[i]) return false;
  }
  return true;
}

}  // namespace antcd
