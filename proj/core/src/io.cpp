#include "antcd/io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "antcd/error.hpp"

namespace antcd {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool skippable(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields[0].front() == '#' || fields[0].front() == '%';
}

double parse_weight(std::string_view text, std::size_t line_no) {
  double w = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(w)) {
    throw ParseError(line_no, "unparseable weight '" + std::string(text) + "'");
  }
  if (w < 0.0) {
    throw ParseError(line_no, "negative weight '" + std::string(text) + "'");
  }
  return w;
}

class EdgeListBuilder {
 public:
  explicit EdgeListBuilder(bool weighted) : weighted_(weighted) {}

  void add_line(std::string_view line, std::size_t line_no) {
    const auto fields = split_ws(line);
    if (skippable(fields)) return;
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected 'u v' or 'u v w', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    double w = 1.0;
    if (fields.size() == 3 && weighted_) w = parse_weight(fields[2], line_no);
    const VertexId u = intern(fields[0]);
    const VertexId v = intern(fields[1]);
    edges_.push_back({u, v, w});
  }

  EdgeList finish() && {
    if (edges_.empty()) throw ParseError(0, "empty graph");
    EdgeList out;
    out.graph = Graph::from_edges(static_cast<VertexId>(tokens_.size()), edges_);
    out.tokens = std::move(tokens_);
    return out;
  }

 private:
  VertexId intern(std::string_view token) {
    const auto [it, inserted] =
        index_.try_emplace(std::string(token), static_cast<VertexId>(tokens_.size()));
    if (inserted) tokens_.emplace_back(token);
    return it->second;
  }

  bool weighted_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::string> tokens_;
  std::vector<WeightedEdge> edges_;
};

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

EdgeList from_edge_list(std::span<const std::string> lines, bool weighted) {
  EdgeListBuilder builder(weighted);
  for (std::size_t i = 0; i < lines.size(); ++i) builder.add_line(lines[i], i + 1);
  return std::move(builder).finish();
}

EdgeList read_edge_list(std::istream& in, bool weighted) {
  EdgeListBuilder builder(weighted);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) builder.add_line(line, ++line_no);
  return std::move(builder).finish();
}

EdgeList read_edge_list_file(const std::filesystem::path& path, bool weighted) {
  auto in = open_input(path);
  return read_edge_list(in, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::span<const std::string> tokens) {
  bool unit = true;
  for (VertexId v = 0; v < g.num_vertices() && unit; ++v) {
    for (const auto& nb : g.neighbors(v)) unit = unit && nb.weight == 1.0;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (const auto& nb : g.neighbors(v)) {
      if (nb.target < v) continue;
      out << tokens[v] << ' ' << tokens[nb.target];
      if (!unit) out << ' ' << format_double(nb.weight);
      out << '\n';
    }
  }
}

std::vector<CommunityId> read_partition(std::istream& in,
                                        std::span<const std::string> tokens) {
  std::unordered_map<std::string_view, VertexId> index;
  index.reserve(tokens.size());
  for (VertexId v = 0; v < tokens.size(); ++v) index.emplace(tokens[v], v);

  std::vector<std::uint64_t> raw_labels(tokens.size(), 0);
  std::vector<char> seen(tokens.size(), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_ws(line);
    if (skippable(fields)) continue;
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 'token community', got " +
                                    std::to_string(fields.size()) + " fields");
    }
    const auto it = index.find(fields[0]);
    if (it == index.end()) {
      throw ParseError(line_no, "vertex '" + std::string(fields[0]) +
                                    "' does not appear in the graph");
    }
    std::uint64_t raw = 0;
    const auto [ptr, ec] = std::from_chars(
        fields[1].data(), fields[1].data() + fields[1].size(), raw);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) {
      throw ParseError(line_no, "bad community id '" + std::string(fields[1]) +
                                    "' for vertex '" + std::string(fields[0]) + "'");
    }
    if (seen[it->second]) {
      throw ParseError(line_no, "vertex '" + std::string(fields[0]) +
                                    "' listed twice");
    }
    seen[it->second] = 1;
    raw_labels[it->second] = raw;
  }
  std::unordered_map<std::uint64_t, CommunityId> compact;
  std::vector<CommunityId> labels(tokens.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (!seen[v]) {
      throw ParseError(0, "vertex '" + tokens[v] + "' missing from partition");
    }
    const auto [it, fresh] = compact.try_emplace(
        raw_labels[v], static_cast<CommunityId>(compact.size()));
    labels[v] = it->second;
  }
  return labels;
}

std::vector<CommunityId> read_partition_file(const std::filesystem::path& path,
                                             std::span<const std::string> tokens) {
  auto in = open_input(path);
  return read_partition(in, tokens);
}

void write_partition(std::ostream& out, const Partition& p,
                     std::span<const std::string> tokens) {
  const Partition compact = p.compacted();
  for (VertexId v = 0; v < compact.num_vertices(); ++v) {
    out << tokens[v] << ' ' << compact.label(v) << '\n';
  }
}

void write_qtrace_csv(std::ostream& out, std::span<const double> q_trace) {
  out << "iteration,Q\n";
  for (std::size_t i = 0; i < q_trace.size(); ++i) {
    out << i << ',' << format_double(q_trace[i]) << '\n';
  }
}

nlohmann::json hierarchy_to_json(const Hierarchy& h) {
  nlohmann::json levels = nlohmann::json::array();
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    const auto& lvl = h.levels[i];
    levels.push_back({{"level", i},
                      {"num_vertices", lvl.graph.num_vertices()},
                      {"num_communities", lvl.projected.num_communities()},
                      {"Q", lvl.q},
                      {"iterations", lvl.iterations},
                      {"converged", lvl.converged},
                      {"seed", lvl.seed},
                      {"best", i == h.best_level}});
  }
  return {{"best_level", h.best_level}, {"levels", std::move(levels)}};
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::vector<std::string> index_tokens(VertexId n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (VertexId v = 0; v < n; ++v) out.push_back(std::to_string(v));
  return out;
}

}  // namespace antcd
