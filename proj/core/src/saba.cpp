#include "antcd/saba.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "antcd/error.hpp"
#include "antcd/metrics.hpp"
#include "antcd/random.hpp"

namespace antcd {

namespace {

bool placeable(const Graph& g, VertexId v) {
  if (!(g.strength(v) > 0.0)) return false;
  for (const auto& nb : g.neighbors(v)) {
    if (nb.target != v) return true;
  }
  return false;
}

}  // namespace

void SabaConfig::validate() const {
  if (!(initial_temperature > 0.0)) {
    throw ConfigError("initial temperature must be > 0");
  }
  if (!(cooling > 0.0 && cooling < 1.0)) {
    throw ConfigError("cooling coefficient must lie in (0, 1)");
  }
  if (!(ant_fraction > 0.0 && ant_fraction <= 1.0)) {
    throw ConfigError("ant fraction must lie in (0, 1]");
  }
  if (!(eps > 0.0)) throw ConfigError("eps must be > 0");
  if (max_iters < 1) throw ConfigError("max_iters must be >= 1");
}

double acceptance_probability(double f_cur, double f_prime,
                              double temperature) {
  if (!(temperature > 0.0)) {
    throw ConfigError("temperature must be > 0");
  }
  if (f_prime >= f_cur) return 1.0;
  return std::exp(-(f_cur - f_prime) / temperature);
}

std::size_t ant_count(double ant_fraction, std::size_t eligible) {
  if (eligible == 0) return 0;
  const auto n = static_cast<std::size_t>(
      std::llround(ant_fraction * static_cast<double>(eligible)));
  return std::max<std::size_t>(1, n);
}

SabaState init_saba_state(const Graph& g, Partition start,
                          const SabaConfig& cfg, Rng& rng) {
  cfg.validate();
  require_edges(g);
  if (start.num_vertices() != g.num_vertices()) {
    throw InvalidArgument("start partition does not match graph");
  }

  SabaState s;
  s.temperature = cfg.initial_temperature;
  s.partition = std::move(start);
  s.q = modularity(g, s.partition);
  s.q_trace.push_back(s.q);

  std::vector<VertexId> eligible;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (placeable(g, v)) eligible.push_back(v);
  }
  const std::size_t ants = ant_count(cfg.ant_fraction, eligible.size());
  s.ant_position.reserve(ants);
  // Partial Fisher-Yates: ants <= eligible.size() always holds for p <= 1.
  for (std::size_t a = 0; a < ants; ++a) {
    const std::size_t pick = a + uniform_index(rng, eligible.size() - a);
    std::swap(eligible[a], eligible[pick]);
    s.ant_position.push_back(eligible[a]);
  }
  return s;
}

std::optional<LabelChange> ant_step(const Graph& g, SabaState& state,
                                    std::size_t ant, Rng& rng,
                                    EnergyUnits units) {
  Partition& part = state.partition;
  const VertexId here = state.ant_position[ant];
  const CommunityId here_label = part.label(here);

  state.scratch_all.clear();
  state.scratch_other.clear();
  for (const auto& nb : g.neighbors(here)) {
    if (nb.target == here) continue;
    state.scratch_all.push_back(nb.target);
    if (part.label(nb.target) != here_label) {
      state.scratch_other.push_back(nb.target);
    }
  }
  if (state.scratch_all.empty()) return std::nullopt;

  if (state.scratch_other.empty()) {
    state.ant_position[ant] =
        state.scratch_all[uniform_index(rng, state.scratch_all.size())];
    return std::nullopt;
  }

  const VertexId previous = here;
  const VertexId current =
      state.scratch_other[uniform_index(rng, state.scratch_other.size())];
  state.ant_position[ant] = current;

  const CommunityId own = part.label(current);
  const CommunityId offered = part.label(previous);
  double to_own = 0.0;
  double to_offered = 0.0;
  for (const auto& nb : g.neighbors(current)) {
    if (nb.target == current) continue;
    const CommunityId c = part.label(nb.target);
    if (c == own) {
      to_own += nb.weight;
    } else if (c == offered) {
      to_offered += nb.weight;
    }
  }
  const double two_m = g.total_weight_2m();
  const double k = g.strength(current);
  const double loop_term = 2.0 * g.self_loop(current);
  const double f_cur = to_own + loop_term - k * part.strength(own) / two_m;
  const double f_prime =
      to_offered + loop_term - k * (part.strength(offered) + k) / two_m;

  const double scale = units == EnergyUnits::kTwoM ? two_m : 1.0;
  const double accept = acceptance_probability(scale * f_cur, scale * f_prime,
                                               state.temperature);
  if (accept < 1.0 && !(uniform_unit(rng) < accept)) return std::nullopt;

  part.move(g, current, offered);
  state.q += 2.0 * (f_prime - f_cur) / two_m;
  return LabelChange{current, own, offered, f_cur, f_prime};
}

double saba_iterate(const Graph& g, SabaState& state, const SabaConfig& cfg,
                    Rng& rng) {
  for (std::size_t ant = 0; ant < state.ant_position.size(); ++ant) {
    ant_step(g, state, ant, rng, cfg.energy_units);
  }
  state.temperature *= cfg.cooling;
  ++state.iteration;
  state.q_trace.push_back(state.q);
  return std::abs(state.q - state.q_trace[state.q_trace.size() - 2]);
}

bool has_improving_move(const Graph& g, const Partition& p) {
  const double two_m = g.total_weight_2m();
  std::vector<double> linked(p.label_bound(), 0.0);
  std::vector<char> seen(p.label_bound(), 0);
  std::vector<CommunityId> touched;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const CommunityId own = p.label(v);
    touched.clear();
    for (const auto& nb : g.neighbors(v)) {
      if (nb.target == v) continue;
      const CommunityId c = p.label(nb.target);
      if (!seen[c]) {
        seen[c] = 1;
        touched.push_back(c);
      }
      linked[c] += nb.weight;
    }
    const double k = g.strength(v);
    // Shared self-loop terms cancel in the comparison.
    const double f_own = linked[own] - k * p.strength(own) / two_m;
    bool found = false;
    for (CommunityId c : touched) {
      if (c == own) continue;
      const double f_other = linked[c] - k * (p.strength(c) + k) / two_m;
      if (f_other - f_own > 1e-12 * (1.0 + std::abs(f_own))) found = true;
    }
    for (CommunityId c : touched) {
      linked[c] = 0.0;
      seen[c] = 0;
    }
    if (found) return true;
  }
  return false;
}

SabaResult run_saba(const Graph& g, Partition start, const SabaConfig& cfg) {
  Rng rng(cfg.seed);
  SabaState state = init_saba_state(g, std::move(start), cfg, rng);

  SabaResult result;
  while (state.iteration < cfg.max_iters) {
    if (saba_iterate(g, state, cfg, rng) >= cfg.eps) continue;
    if (cfg.stop_rule == StopRule::kLocalOptimum &&
        has_improving_move(g, state.partition)) {
      continue;
    }
    result.converged = true;
    break;
  }

  result.partition = state.partition.compacted();
  result.modularity = modularity(g, result.partition);
  if (std::abs(result.modularity - state.q) > 1e-9) {
    throw Error("incremental modularity drifted from aggregate value");
  }
  result.q_trace = std::move(state.q_trace);
  result.iterations = state.iteration;
  return result;
}

}  // namespace antcd
