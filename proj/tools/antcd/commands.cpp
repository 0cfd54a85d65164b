#include "antcd/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "antcd/error.hpp"
#include "antcd/generators.hpp"
#include "antcd/io.hpp"
#include "antcd/maba.hpp"
#include "antcd/metrics.hpp"

namespace antcd::cli {

namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr const char* kVersion = ANTCD_VERSION;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void write_file(const std::string& path,
                const std::function<void(std::ostream&)>& body) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  body(out);
  out.flush();
  if (!out) throw Error("write failed: " + path);
}

void write_json(const std::string& path, const json& doc) {
  write_file(path, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

const char* units_name(EnergyUnits u) {
  return u == EnergyUnits::kTwoM ? "2m" : "edge";
}

const char* stop_name(StopRule r) {
  return r == StopRule::kLocalOptimum ? "local-opt" : "plateau";
}

json config_json(const SabaConfig& cfg) {
  return {{"T0", cfg.initial_temperature},
          {"c_T", cfg.cooling},
          {"p", cfg.ant_fraction},
          {"eps", cfg.eps},
          {"max_iters", cfg.max_iters},
          {"seed", cfg.seed},
          {"anneal_units", units_name(cfg.energy_units)},
          {"stop", stop_name(cfg.stop_rule)},
          {"coarse_stop", stop_name(cfg.coarse_stop_rule)}};
}

std::vector<std::string> config_args(const SabaConfig& cfg) {
  return {"--seed",         std::to_string(cfg.seed),
          "--temp",         format_double(cfg.initial_temperature),
          "--cool",         format_double(cfg.cooling),
          "--ants-frac",    format_double(cfg.ant_fraction),
          "--eps",          format_double(cfg.eps),
          "--max-iters",    std::to_string(cfg.max_iters),
          "--anneal-units", units_name(cfg.energy_units),
          "--stop",         stop_name(cfg.stop_rule),
          "--coarse-stop",  stop_name(cfg.coarse_stop_rule)};
}

json manifest(const std::string& command, std::vector<std::string> reproduce,
              json inputs, json config, json outputs, Clock::time_point start) {
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return {{"command", command},
          {"reproduce", std::move(reproduce)},
          {"inputs", std::move(inputs)},
          {"config", std::move(config)},
          {"outputs", std::move(outputs)},
          {"version", kVersion},
          {"duration_seconds", seconds}};
}

void write_partition_file(const std::string& path, const Partition& p,
                          std::span<const std::string> tokens) {
  write_file(path, [&](std::ostream& out) { write_partition(out, p, tokens); });
}

}  // namespace

void cmd_generate(const GenerateOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  if (opts.out.empty()) throw ConfigError("generate: --out is required");

  BenchmarkInstance inst;
  std::vector<std::string> reproduce{"generate", opts.kind};
  bool stochastic = false;
  if (opts.kind == "gn") {
    const std::uint64_t seed = resolve_seed(opts.seed);
    inst = gen_gn(opts.groups, opts.group_size, opts.z_in, opts.z_out, seed);
    stochastic = true;
    reproduce.insert(reproduce.end(),
                     {"--groups", std::to_string(opts.groups), "--size",
                      std::to_string(opts.group_size), "--zin",
                      format_double(opts.z_in), "--zout", format_double(opts.z_out),
                      "--seed", std::to_string(seed)});
  } else if (opts.kind == "clique-ring") {
    inst = gen_clique_ring(opts.cliques, opts.clique_size);
    reproduce.insert(reproduce.end(),
                     {"--cliques", std::to_string(opts.cliques), "--size",
                      std::to_string(opts.clique_size)});
  } else if (opts.kind == "clique-pairs") {
    inst = gen_clique_pairs();
  } else {
    throw ConfigError("generate: unknown kind '" + opts.kind + "'");
  }
  reproduce.insert(reproduce.end(), {"--out", opts.out});

  const Graph& g = inst.graph;
  const auto tokens = index_tokens(g.num_vertices());
  const std::string edges_path = opts.out + ".edges";
  const std::string truth_path = opts.out + ".truth";
  write_file(edges_path, [&](std::ostream& out) { write_edge_list(out, g, tokens); });
  // Isolated vertices never reach the edge list, so the truth file skips
  // them too and both files name the same vertex set.
  write_file(truth_path, [&](std::ostream& out) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) > 0) out << tokens[v] << ' ' << inst.truth.label(v) << '\n';
    }
  });
  if (stochastic) {
    write_json(opts.out + ".manifest.json",
               manifest("generate", reproduce, json::object(), inst.params,
                        {edges_path, truth_path}, start));
  }
  log << "n=" << g.num_vertices() << " m=" << g.num_edges()
      << " communities=" << inst.truth.num_communities() << '\n';
}

void cmd_detect(const DetectOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  if (opts.out.empty()) throw ConfigError("detect: --out is required");
  if (opts.algo != "saba" && opts.algo != "maba") {
    throw ConfigError("detect: unknown algorithm '" + opts.algo + "'");
  }
  SabaConfig cfg = opts.config;
  cfg.seed = resolve_seed(opts.seed);
  cfg.validate();

  const EdgeList input = read_edge_list_file(opts.edges, opts.weighted);
  const Graph& g = input.graph;
  require_edges(g);

  std::vector<std::string> reproduce{"detect", opts.edges, "--algo", opts.algo};
  const auto cfg_args = config_args(cfg);
  reproduce.insert(reproduce.end(), cfg_args.begin(), cfg_args.end());
  if (opts.weighted) reproduce.push_back("--weighted");
  reproduce.insert(reproduce.end(), {"--out", opts.out});

  const std::string part_path = opts.out + ".part";
  const std::string trace_path = opts.out + ".qtrace.csv";
  json outputs = json::array({part_path, trace_path});

  double best_q = 0.0;
  std::size_t best_c = 0;
  if (opts.algo == "saba") {
    SabaResult r = run_saba(g, Partition::singleton(g), cfg);
    write_partition_file(part_path, r.partition, input.tokens);
    write_file(trace_path, [&](std::ostream& out) { write_qtrace_csv(out, r.q_trace); });
    best_q = r.modularity;
    best_c = r.partition.num_communities();
  } else {
    const Hierarchy h = run_maba(g, cfg);
    write_partition_file(part_path, best_partition(h), input.tokens);
    write_file(trace_path, [&](std::ostream& out) {
      write_qtrace_csv(out, h.levels.front().q_trace);
    });
    json doc = hierarchy_to_json(h);
    for (std::size_t i = 0; i < h.levels.size(); ++i) {
      const std::string level_path = opts.out + ".level" + std::to_string(i) + ".part";
      write_partition_file(level_path, h.levels[i].projected, input.tokens);
      doc["levels"][i]["partition"] =
          std::filesystem::path(level_path).filename().string();
      outputs.push_back(level_path);
    }
    const std::string hier_path = opts.out + ".hierarchy.json";
    write_json(hier_path, doc);
    outputs.push_back(hier_path);
    best_q = h.levels[h.best_level].q;
    best_c = best_partition(h).num_communities();
  }

  write_json(opts.out + ".manifest.json",
             manifest("detect", reproduce,
                      {{"edges", opts.edges}, {"weighted", opts.weighted},
                       {"algo", opts.algo}},
                      config_json(cfg), outputs, start));
  log << "Q=" << format_double(best_q) << " communities=" << best_c << '\n';
}

void cmd_eval(const EvalOptions& opts, std::ostream& log) {
  const EdgeList input = read_edge_list_file(opts.edges, opts.weighted);
  const Graph& g = input.graph;
  const Partition p = Partition::from_labels(
      g, read_partition_file(opts.partition, input.tokens));
  const ResolutionReport report = resolution_report(g, p);

  json doc = report;
  if (opts.truth) {
    const auto truth = read_partition_file(*opts.truth, input.tokens);
    doc["NMI"] = nmi(p.labels(), truth);
  }
  for (const char* key : {"C", "Q", "C1", "P1", "C2", "P2", "C3", "P3", "D", "L", "NMI"}) {
    if (!doc.contains(key)) continue;
    const json& v = doc[key];
    log << key << '=' << (v.is_number_float() ? format_double(v.get<double>()) : v.dump())
        << '\n';
  }
  if (opts.json_out) write_json(*opts.json_out, doc);
}

void cmd_bench(const BenchOptions& opts, std::ostream& log) {
  const auto start = Clock::now();
  if (opts.out.empty()) throw ConfigError("bench: --out is required");
  if (opts.groups.empty()) throw ConfigError("bench: empty --groups list");
  if (opts.seeds == 0) throw ConfigError("bench: --seeds must be >= 1");
  const std::uint64_t master = resolve_seed(opts.seed);

  std::ostringstream csv;
  csv << "n,mean_seconds,mean_Q,mean_NMI\n";
  for (std::size_t k : opts.groups) {
    double seconds = 0.0;
    double q = 0.0;
    double accuracy = 0.0;
    for (std::size_t i = 0; i < opts.seeds; ++i) {
      const BenchmarkInstance inst = gen_gn(k, opts.group_size, opts.z_in,
                                            opts.z_out, level_seed(master, 2 * i));
      SabaConfig cfg = opts.config;
      cfg.seed = level_seed(master, 2 * i + 1);
      const auto t0 = Clock::now();
      const Hierarchy h = run_maba(inst.graph, cfg);
      seconds += std::chrono::duration<double>(Clock::now() - t0).count();
      q += h.levels[h.best_level].q;
      accuracy += nmi(best_partition(h), inst.truth);
    }
    const auto runs = static_cast<double>(opts.seeds);
    csv << k * opts.group_size << ',' << format_double(seconds / runs) << ','
        << format_double(q / runs) << ',' << format_double(accuracy / runs) << '\n';
  }
  write_file(opts.out, [&](std::ostream& out) { out << csv.str(); });

  std::vector<std::string> reproduce{"bench", "--groups"};
  for (std::size_t k : opts.groups) reproduce.push_back(std::to_string(k));
  reproduce.insert(reproduce.end(),
                   {"--size", std::to_string(opts.group_size), "--zin",
                    format_double(opts.z_in), "--zout", format_double(opts.z_out),
                    "--seeds", std::to_string(opts.seeds)});
  SabaConfig shown = opts.config;
  shown.seed = master;
  const auto cfg_args = config_args(shown);
  reproduce.insert(reproduce.end(), cfg_args.begin(), cfg_args.end());
  reproduce.insert(reproduce.end(), {"--out", opts.out});
  write_json(opts.out + ".manifest.json",
             manifest("bench", reproduce, json::object(), config_json(shown),
                      {opts.out}, start));
  log << csv.str();
}

namespace {

void add_config_flags(CLI::App& cmd, SabaConfig& cfg,
                      std::optional<std::uint64_t>& seed) {
  cmd.add_option("--seed", seed, "RNG seed (drawn from entropy and recorded if omitted)");
  cmd.add_option("--temp", cfg.initial_temperature, "Initial temperature T")
      ->capture_default_str();
  cmd.add_option("--cool", cfg.cooling, "Cooling coefficient c_T")->capture_default_str();
  cmd.add_option("--ants-frac", cfg.ant_fraction, "Ants per eligible vertex p")
      ->capture_default_str();
  cmd.add_option("--eps", cfg.eps, "Convergence threshold on |dQ|")->capture_default_str();
  cmd.add_option("--max-iters", cfg.max_iters, "Iteration cap per SABA run")
      ->capture_default_str();
  const std::map<std::string, EnergyUnits> units{{"2m", EnergyUnits::kTwoM},
                                                 {"edge", EnergyUnits::kEdgeWeight}};
  cmd.add_option("--anneal-units", cfg.energy_units,
                 "Units of f in the acceptance rule: 2m (2m*f) or edge (f)")
      ->transform(CLI::CheckedTransformer(units, CLI::ignore_case));
  const std::map<std::string, StopRule> rules{{"local-opt", StopRule::kLocalOptimum},
                                              {"plateau", StopRule::kPlateau}};
  cmd.add_option("--stop", cfg.stop_rule,
                 "Level-0 stop: any Q plateau (plateau) or a plateau at a local optimum "
                 "(local-opt)")
      ->transform(CLI::CheckedTransformer(rules, CLI::ignore_case));
  cmd.add_option("--coarse-stop", cfg.coarse_stop_rule,
                 "Stop rule for the coarse levels of a multi-layer run")
      ->transform(CLI::CheckedTransformer(rules, CLI::ignore_case));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ant-colony community detection toolkit", "antcd"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a benchmark graph and its planted partition");
  generate->add_option("kind", gen.kind, "gn | clique-ring | clique-pairs")
      ->required()
      ->check(CLI::IsMember({"gn", "clique-ring", "clique-pairs"}));
  generate->add_option("--groups", gen.groups, "gn: number of groups")->capture_default_str();
  generate->add_option("--zin", gen.z_in, "gn: expected intra-group degree")->capture_default_str();
  generate->add_option("--zout", gen.z_out, "gn: expected inter-group degree")->capture_default_str();
  generate->add_option("--cliques", gen.cliques, "clique-ring: number of cliques")
      ->capture_default_str();
  std::optional<std::size_t> size;
  generate->add_option("--size", size, "gn: group size (32); clique-ring: clique size (5)");
  generate->add_option("--seed", gen.seed, "gn: RNG seed");
  generate->add_option("--out", gen.out, "Output prefix")->required();

  DetectOptions det;
  auto* detect = app.add_subcommand("detect", "Run SABA or MABA on an edge list");
  detect->add_option("edges", det.edges, "Edge-list file")->required();
  detect->add_option("--algo", det.algo, "saba | maba")
      ->capture_default_str()
      ->check(CLI::IsMember({"saba", "maba"}));
  detect->add_flag("--weighted", det.weighted, "Read a third column as edge weight");
  detect->add_option("--out", det.out, "Output prefix")->required();
  add_config_flags(*detect, det.config, det.seed);

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "Score a partition against its graph");
  eval->add_option("edges", ev.edges, "Edge-list file")->required();
  eval->add_option("partition", ev.partition, "Partition file")->required();
  eval->add_option("--truth", ev.truth, "Ground-truth partition for NMI");
  eval->add_option("--json", ev.json_out, "Also write the report as JSON");
  eval->add_flag("--weighted", ev.weighted, "Read a third column as edge weight");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time MABA on growing planted-partition graphs");
  bench_cmd->add_option("--groups", bench.groups, "Group counts K to sweep")
      ->capture_default_str()
      ->delimiter(',');
  bench_cmd->add_option("--size", bench.group_size, "Group size")->capture_default_str();
  bench_cmd->add_option("--zin", bench.z_in, "Expected intra-group degree")->capture_default_str();
  bench_cmd->add_option("--zout", bench.z_out, "Expected inter-group degree")->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Runs per K")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV output path")->required();
  add_config_flags(*bench_cmd, bench.config, bench.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*generate) {
      if (size) {
        gen.group_size = *size;
        gen.clique_size = *size;
      }
      cmd_generate(gen, out);
    } else if (*detect) {
      cmd_detect(det, out);
    } else if (*eval) {
      cmd_eval(ev, out);
    } else if (*bench_cmd) {
      cmd_bench(bench, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kOk;
}

}  // namespace antcd::cli
