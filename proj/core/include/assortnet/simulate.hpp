#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "assortnet/census.hpp"
#include "assortnet/rng.hpp"

namespace assortnet {

/// Random group-membership simulation parameters. Defaults reproduce the
/// 100-individual / 20-group / 20-census / 10-run setting.
struct SimulationConfig {
    std::size_t population = 100;
    std::size_t groups_per_census = 20;
    std::size_t censuses = 20;
    std::size_t runs = 10;
    double dirichlet_alpha = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Per run and per census: Newman assortativity of the dichotomized
/// cumulative network, with undefined values kept explicit.
struct SimulationTrace {
    std::size_t runs = 0;
    std::size_t censuses = 0;
    std::vector<std::vector<std::optional<double>>> assortativity;   // [run][census]
    std::vector<std::vector<std::size_t>> edges;                     // binary edge count
    std::vector<std::vector<std::size_t>> associations_observed;     // cumulative pair events
    std::vector<CensusData> data;                                    // generated data per run
};

/// Per-census order statistics over the defined run values.
struct TraceSummary {
    std::vector<std::optional<double>> median, q25, q75, min, max;
    std::vector<std::size_t> n_undefined;
};

/// Group sizes from a symmetric Dirichlet(alpha) draw: floor(population * p_g)
/// plus each remaining individual assigned to an independently uniform group.
/// Sizes sum to population and may be zero.
std::vector<std::size_t> draw_group_sizes(std::size_t population, std::size_t groups, double alpha,
                                          Rng& rng);

/// Uniformly random partition of all individuals into groups of the given
/// sizes (sizes must sum to the number of individuals).
Census run_census(const std::vector<NodeId>& individuals, const std::vector<std::size_t>& sizes,
                  Rng& rng);

SimulationTrace run_simulation(const SimulationConfig& cfg, unsigned threads = 1);

/// Same simulation, but the cumulative frequency-weighted network is filtered
/// at each threshold before measuring. Thresholds are frequencies in (0,1].
std::vector<SimulationTrace> filtering_experiment(const SimulationConfig& cfg,
                                                  const std::vector<double>& thresholds,
                                                  unsigned threads = 1);

TraceSummary summarize_trace(const SimulationTrace& trace);

}  // namespace assortnet
