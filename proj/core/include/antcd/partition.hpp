#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antcd/graph.hpp"

namespace antcd {

/// Vertex -> community labeling with per-community aggregates.
///
/// Community ids are non-negative integers below label_bound(); ids need not
/// be contiguous until compacted(). For each id c the partition tracks
///   internal_weight(c): sum of weights of edges with both endpoints in c,
///                       self-loops once at their stored weight,
///   strength(c):        K_c = sum of member strengths,
///   size(c):            member count.
/// Aggregates are exact for integer weights and always equal their
/// recomputation from (graph, labels) up to floating-point rounding.
class Partition {
 public:
  Partition() = default;

  /// Every vertex in its own community, label[i] = i.
  static Partition singleton(const Graph& g);

  /// Adopts `labels` verbatim (one per vertex) and computes aggregates.
  static Partition from_labels(const Graph& g, std::vector<CommunityId> labels);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  CommunityId label(VertexId v) const noexcept { return labels_[v]; }
  std::span<const CommunityId> labels() const noexcept { return labels_; }

  /// All community ids are < label_bound().
  std::size_t label_bound() const noexcept { return size_.size(); }
  std::size_t num_communities() const noexcept { return num_communities_; }

  bool is_nonempty(CommunityId c) const noexcept {
    return c < size_.size() && size_[c] > 0;
  }
  double internal_weight(CommunityId c) const noexcept { return internal_[c]; }
  double strength(CommunityId c) const noexcept { return strength_[c]; }
  std::size_t size(CommunityId c) const noexcept { return size_[c]; }

  /// Moves v into community `to` (which must be < label_bound()) and updates
  /// aggregates incrementally in O(deg(v)). `g` must be the graph the
  /// partition was built on.
  void move(const Graph& g, VertexId v, CommunityId to);

  /// Renumbers communities 0..C-1 in order of first appearance over vertex
  /// ids, carrying aggregates along.
  Partition compacted() const;

  bool is_compact() const noexcept { return label_bound() == num_communities_; }

 private:
  std::vector<CommunityId> labels_;
  std::vector<double> internal_;
  std::vector<double> strength_;
  std::vector<std::size_t> size_;
  std::size_t num_communities_ = 0;
};

/// True when the two labelings induce the same grouping of vertices.
bool same_grouping(std::span<const CommunityId> a,
                   std::span<const CommunityId> b);

}  // namespace antcd
