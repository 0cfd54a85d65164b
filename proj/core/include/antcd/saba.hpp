#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "antcd/graph.hpp"
#include "antcd/partition.hpp"
#include "antcd/random.hpp"

namespace antcd {

/// Scale of the local-f values fed to the acceptance rule.
enum class EnergyUnits {
  kTwoM,        // 2m * f, the integer form sum_j (2m A_ij - k_i k_j)
  kEdgeWeight,  // f as is
};

/// When a run may stop once |Q(l) - Q(l-1)| < eps. run_saba uses
/// stop_rule; run_maba applies coarse_stop_rule above level 0.
enum class StopRule {
  kLocalOptimum,  // only if no single relabel to a neighbour's label raises f
  kPlateau,       // immediately
};

struct SabaConfig {
  double initial_temperature = 500.0;
  double cooling = 0.1;        // T <- cooling * T after every iteration
  double ant_fraction = 0.6;   // ants per eligible vertex
  double eps = 1e-6;           // stop when |Q(l) - Q(l-1)| < eps
  std::size_t max_iters = 200;
  std::uint64_t seed = 0;
  EnergyUnits energy_units = EnergyUnits::kTwoM;
  StopRule stop_rule = StopRule::kPlateau;
  StopRule coarse_stop_rule = StopRule::kLocalOptimum;  // MABA levels above 0

  /// Throws ConfigError when any field is out of range.
  void validate() const;
};

/// Annealing acceptance: 1 when f_prime >= f_cur, exp(-(f_cur - f_prime)/T)
/// otherwise. Throws ConfigError for T <= 0.
double acceptance_probability(double f_cur, double f_prime, double temperature);

/// One accepted relabel, with the two local-f values that drove it.
struct LabelChange {
  VertexId vertex;
  CommunityId from;
  CommunityId to;
  double f_cur;
  double f_prime;
};

struct SabaState {
  std::vector<VertexId> ant_position;
  double temperature = 0.0;
  Partition partition;
  std::size_t iteration = 0;
  std::vector<double> q_trace;  // q_trace.size() == iteration + 1
  double q = 0.0;               // incrementally maintained modularity

  // Scratch buffers reused by ant_step.
  std::vector<VertexId> scratch_all;
  std::vector<VertexId> scratch_other;
};

/// Number of ants for `eligible` placeable vertices: max(1, round(p * eligible)),
/// or 0 when nothing is placeable.
std::size_t ant_count(double ant_fraction, std::size_t eligible);

/// Fresh state: `start` as the labeling, ants scattered without replacement
/// over vertices that have at least one non-loop neighbor and positive
/// strength, temperature at cfg.initial_temperature.
SabaState init_saba_state(const Graph& g, Partition start,
                          const SabaConfig& cfg, Rng& rng);

/// Moves one ant. If the ant's vertex and all of its neighbours share a
/// label the ant walks to a uniformly random neighbour and nothing else
/// happens. Otherwise it walks to a uniformly random neighbour carrying a
/// different label and offers that vertex the label of the vertex it left,
/// accepted with acceptance_probability() on f values in `units`. Returns
/// the relabel, if any.
/// Self-loops are never walked.
std::optional<LabelChange> ant_step(const Graph& g, SabaState& state,
                                    std::size_t ant, Rng& rng,
                                    EnergyUnits units = EnergyUnits::kTwoM);

/// True when some vertex would strictly raise its local f by adopting the
/// label of one of its neighbours. O(sum of degrees).
bool has_improving_move(const Graph& g, const Partition& p);

/// One full iteration: every ant steps in index order, then the temperature
/// cools and Q(l) is appended to the trace. Returns |Q(l) - Q(l-1)|.
double saba_iterate(const Graph& g, SabaState& state, const SabaConfig& cfg,
                    Rng& rng);

struct SabaResult {
  Partition partition;          // compacted
  std::vector<double> q_trace;  // Q(0), Q(1), ..., Q(iterations)
  std::size_t iterations = 0;
  bool converged = false;       // stopped by the eps rule, not max_iters
  double modularity = 0.0;      // recomputed from aggregates at termination
};

/// Runs the single-layer ant colony from `start` until |Q(l) - Q(l-1)| < eps
/// (and, under StopRule::kLocalOptimum, no improving relabel remains) or
/// max_iters. Throws NoEdgesError when 2m == 0 and ConfigError for an
/// invalid configuration.
SabaResult run_saba(const Graph& g, Partition start, const SabaConfig& cfg);

}  // namespace antcd
