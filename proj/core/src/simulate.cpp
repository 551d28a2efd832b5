#include "assortnet/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace assortnet {

void SimulationConfig::validate() const {
    if (population < 2) throw data_error("population must be >= 2");
    if (groups_per_census < 1) throw data_error("groups per census must be >= 1");
    if (censuses < 1) throw data_error("censuses must be >= 1");
    if (runs < 1) throw data_error("runs must be >= 1");
    if (!(dirichlet_alpha > 0.0)) throw data_error("dirichlet alpha must be positive");
}

std::vector<std::size_t> draw_group_sizes(std::size_t population, std::size_t groups, double alpha,
                                          Rng& rng) {
    if (groups == 1) return {population};
    // symmetric Dirichlet via normalized unit-scale Gamma draws
    std::gamma_distribution<double> gamma(alpha, 1.0);
    std::vector<double> draws(groups);
    double total = 0.0;
    for (auto& d : draws) {
        d = gamma(rng);
        total += d;
    }
    std::vector<std::size_t> sizes(groups, 0);
    std::size_t assigned = 0;
    for (std::size_t g = 0; g < groups; ++g) {
        sizes[g] = static_cast<std::size_t>(
            std::floor(static_cast<double>(population) * draws[g] / total));
        assigned += sizes[g];
    }
    std::uniform_int_distribution<std::size_t> pick(0, groups - 1);
    for (std::size_t r = assigned; r < population; ++r) ++sizes[pick(rng)];
    return sizes;
}

Census run_census(const std::vector<NodeId>& individuals, const std::vector<std::size_t>& sizes,
                  Rng& rng) {
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    if (total != individuals.size())
        throw data_error("group sizes sum to " + std::to_string(total) + " but there are " +
                         std::to_string(individuals.size()) + " individuals");
    std::vector<NodeId> order = individuals;
    std::shuffle(order.begin(), order.end(), rng);
    Census census;
    census.reserve(sizes.size());
    std::size_t at = 0;
    for (auto s : sizes) {
        census.emplace_back(order.begin() + at, order.begin() + at + s);
        at += s;
    }
    return census;
}

namespace {

std::vector<NodeId> make_population(std::size_t n) {
    std::size_t width = std::to_string(n).size();
    std::vector<NodeId> ids;
    ids.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        ids.push_back("i" + std::string(width - s.size(), '0') + s);
    }
    return ids;
}

// One simulated run measured under every requested threshold.
// A nullopt threshold means plain dichotomization of the count network.
struct RunMeasurement {
    CensusData data;
    // [threshold][census]
    std::vector<std::vector<std::optional<double>>> assortativity;
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> associations_observed;  // per census, cumulative
};

RunMeasurement simulate_run(const SimulationConfig& cfg, std::size_t run,
                            const std::vector<std::optional<double>>& thresholds) {
    Rng rng = derive_rng(cfg.seed, run + 1);
    const std::size_t n = cfg.population;
    std::vector<NodeId> ids = make_population(n);  // sorted; row i is ids[i]
    std::vector<std::uint32_t> counts(n * n, 0);

    RunMeasurement out;
    out.assortativity.assign(thresholds.size(), {});
    out.edges.assign(thresholds.size(), {});
    std::size_t assoc = 0;

    for (std::size_t c = 0; c < cfg.censuses; ++c) {
        auto sizes = draw_group_sizes(n, cfg.groups_per_census, cfg.dirichlet_alpha, rng);
        Census census = run_census(ids, sizes, rng);
        std::vector<std::size_t> members;
        for (const auto& group : census) {
            members.clear();
            for (const auto& id : group) {
                auto it = std::lower_bound(ids.begin(), ids.end(), id);
                members.push_back(static_cast<std::size_t>(it - ids.begin()));
            }
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    ++counts[members[a] * n + members[b]];
                    ++counts[members[b] * n + members[a]];
                    ++assoc;
                }
        }
        out.data.censuses.push_back(std::move(census));
        out.associations_observed.push_back(assoc);

        double freq_denom = static_cast<double>(c + 1);
        for (std::size_t t = 0; t < thresholds.size(); ++t) {
            std::vector<long long> deg(n, 0);
            std::vector<std::uint8_t> adj(n * n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    bool keep;
                    if (!thresholds[t]) {
                        keep = counts[i * n + j] > 0;
                    } else {
                        keep = static_cast<double>(counts[i * n + j]) / freq_denom >=
                               *thresholds[t];
                    }
                    if (keep) {
                        adj[i * n + j] = 1;
                        ++deg[i];
                        ++deg[j];
                    }
                }
            std::vector<std::pair<long long, long long>> doubled;
            std::size_t m = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (adj[i * n + j]) {
                        ++m;
                        doubled.emplace_back(deg[i], deg[j]);
                        doubled.emplace_back(deg[j], deg[i]);
                    }
            out.assortativity[t].push_back(
                assortativity_from_pairs(doubled, AssortMethod::newman).value);
            out.edges[t].push_back(m);
        }
    }
    return out;
}

std::vector<SimulationTrace> simulate_all(const SimulationConfig& cfg,
                                          const std::vector<std::optional<double>>& thresholds,
                                          unsigned threads) {
    cfg.validate();
    std::vector<RunMeasurement> runs(cfg.runs);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) runs[r] = simulate_run(cfg, r, thresholds);
    };
    threads = std::max(1u, threads);
    if (threads == 1 || cfg.runs < 2) {
        worker(0, cfg.runs);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (cfg.runs + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t b = t * chunk;
            std::size_t e = std::min<std::size_t>(b + chunk, cfg.runs);
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<SimulationTrace> traces(thresholds.size());
    for (std::size_t t = 0; t < thresholds.size(); ++t) {
        auto& trace = traces[t];
        trace.runs = cfg.runs;
        trace.censuses = cfg.censuses;
        for (std::size_t r = 0; r < cfg.runs; ++r) {
            trace.assortativity.push_back(runs[r].assortativity[t]);
            trace.edges.push_back(runs[r].edges[t]);
            trace.associations_observed.push_back(runs[r].associations_observed);
            trace.data.push_back(runs[r].data);
        }
    }
    return traces;
}

// linear-interpolation quantile over a sorted sample
double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.size() == 1) return sorted[0];
    double h = p * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(h));
    auto hi = std::min(lo + 1, sorted.size() - 1);
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

SimulationTrace run_simulation(const SimulationConfig& cfg, unsigned threads) {
    return std::move(simulate_all(cfg, {std::nullopt}, threads).front());
}

std::vector<SimulationTrace> filtering_experiment(const SimulationConfig& cfg,
                                                  const std::vector<double>& thresholds,
                                                  unsigned threads) {
    if (thresholds.empty()) throw data_error("at least one threshold required");
    std::vector<std::optional<double>> ts;
    for (double t : thresholds) {
        if (!(t > 0.0) || t > 1.0) throw data_error("thresholds must lie in (0,1]");
        ts.emplace_back(t);
    }
    return simulate_all(cfg, ts, threads);
}

TraceSummary summarize_trace(const SimulationTrace& trace) {
    TraceSummary s;
    for (std::size_t c = 0; c < trace.censuses; ++c) {
        std::vector<double> defined;
        for (std::size_t r = 0; r < trace.runs; ++r)
            if (trace.assortativity[r][c]) defined.push_back(*trace.assortativity[r][c]);
        s.n_undefined.push_back(trace.runs - defined.size());
        if (defined.empty()) {
            s.median.push_back(std::nullopt);
            s.q25.push_back(std::nullopt);
            s.q75.push_back(std::nullopt);
            s.min.push_back(std::nullopt);
            s.max.push_back(std::nullopt);
            continue;
        }
        std::sort(defined.begin(), defined.end());
        s.min.push_back(defined.front());
        s.max.push_back(defined.back());
        s.q25.push_back(quantile_sorted(defined, 0.25));
        s.median.push_back(quantile_sorted(defined, 0.5));
        s.q75.push_back(quantile_sorted(defined, 0.75));
    }
    return s;
}

}  // namespace assortnet
