#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "antcd/graph.hpp"
#include "antcd/maba.hpp"
#include "antcd/metrics.hpp"
#include "antcd/partition.hpp"

namespace antcd {

/// A graph read from text, with the original vertex tokens. tokens[v] is
/// the token that vertex v was assigned on first appearance.
struct EdgeList {
  Graph graph;
  std::vector<std::string> tokens;
};

/// Parses "u v" / "u v w" records. Blank lines and lines starting with '#'
/// or '%' are skipped. Duplicate pairs have their weights summed and u == v
/// gives a self-loop. When `weighted` is false a third column is ignored and
/// every record has weight 1. Throws ParseError (with the line number) on
/// malformed records and on input without any record ("empty graph").
EdgeList from_edge_list(std::span<const std::string> lines, bool weighted);
EdgeList read_edge_list(std::istream& in, bool weighted);
EdgeList read_edge_list_file(const std::filesystem::path& path, bool weighted);

/// One record per stored edge, lower vertex id first; the weight column is
/// written only when some edge weight differs from 1.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> tokens);

/// Reads "token community" records covering exactly the vertices named by
/// `tokens`. Community ids are arbitrary non-negative integers; the returned
/// labels are compacted in order of first appearance over vertex ids.
/// Errors name the offending token.
std::vector<CommunityId> read_partition(std::istream& in,
                                        std::span<const std::string> tokens);
std::vector<CommunityId> read_partition_file(const std::filesystem::path& path,
                                             std::span<const std::string> tokens);

/// One "token community" record per vertex in vertex order, communities
/// compacted.
void write_partition(std::ostream& out, const Partition& p,
                     std::span<const std::string> tokens);

/// "iteration,Q" header followed by one row per trace entry.
void write_qtrace_csv(std::ostream& out, std::span<const double> q_trace);

/// {"best_level": b, "levels": [{"level", "num_vertices", "num_communities",
///  "Q", "iterations", "converged", "best"}...]}
nlohmann::json hierarchy_to_json(const Hierarchy& h);

/// Shortest round-trip decimal form of `x`.
std::string format_double(double x);

/// Decimal tokens "0".."n-1", the naming generated graphs use.
std::vector<std::string> index_tokens(VertexId n);

}  // namespace antcd
