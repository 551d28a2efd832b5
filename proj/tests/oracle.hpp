// Test-only oracles, independent of the library's computation paths.
#pragma once

#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "assortnet/census.hpp"
#include "assortnet/network.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// Plain edge-set view of a graph; degrees recomputed by counting edges.
struct SimpleGraph {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;  // first < second
};

inline SimpleGraph from_network(const assortnet::Network& net) {
    SimpleGraph g;
    g.nodes = net.nodes();
    for (const auto& [key, w] : net.edges()) {
        (void)w;
        g.edges.insert(key);
    }
    return g;
}

inline std::map<std::string, long long> degrees(const SimpleGraph& g) {
    std::map<std::string, long long> deg;
    for (const auto& v : g.nodes) deg[v] = 0;
    for (const auto& [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

// Pearson correlation with exact big-integer sums over 2x-scaled values.
// Values are passed doubled so that average ranks stay integral.
inline std::optional<double> pearson_doubled_values(
    const std::vector<std::pair<BigInt, BigInt>>& pairs) {
    if (pairs.empty()) return std::nullopt;
    BigInt n = pairs.size(), sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (const auto& [x, y] : pairs) {
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    BigInt num = n * sxy - sx * sy;
    BigInt dx = n * sxx - sx * sx;
    BigInt dy = n * syy - sy * sy;
    if (dx == 0 || dy == 0) return std::nullopt;
    long double r = static_cast<long double>(num) /
                    sqrtl(static_cast<long double>(dx) * static_cast<long double>(dy));
    return static_cast<double>(r);
}

inline std::optional<double> newman(const SimpleGraph& g) {
    auto deg = degrees(g);
    std::vector<std::pair<BigInt, BigInt>> pairs;
    for (const auto& [u, v] : g.edges) {
        pairs.emplace_back(2 * deg[u], 2 * deg[v]);
        pairs.emplace_back(2 * deg[v], 2 * deg[u]);
    }
    return pearson_doubled_values(pairs);
}

inline std::optional<double> spearman(const SimpleGraph& g) {
    auto deg = degrees(g);
    // pooled endpoint degrees of the doubled edge list
    std::vector<long long> pooled;
    for (const auto& [u, v] : g.edges) {
        pooled.push_back(deg[u]);
        pooled.push_back(deg[v]);
    }
    // brute-force doubled average rank of x: (#less)*2 + (#equal) + 1
    auto rank2 = [&](long long x) {
        long long less = 0, equal = 0;
        for (long long p : pooled) {
            if (p < x) ++less;
            if (p == x) ++equal;
        }
        return BigInt(2 * less + equal + 1);
    };
    std::vector<std::pair<BigInt, BigInt>> pairs;
    for (const auto& [u, v] : g.edges) {
        pairs.emplace_back(rank2(deg[u]), rank2(deg[v]));
        pairs.emplace_back(rank2(deg[v]), rank2(deg[u]));
    }
    return pearson_doubled_values(pairs);
}

inline std::optional<double> rich_club_phi(const SimpleGraph& g, long long k) {
    auto deg = degrees(g);
    std::set<std::string> club;
    for (const auto& [v, d] : deg)
        if (d > k) club.insert(v);
    if (club.size() < 2) return std::nullopt;
    long long within = 0;
    for (const auto& [u, v] : g.edges)
        if (club.count(u) && club.count(v)) ++within;
    return 2.0 * static_cast<double>(within) /
           (static_cast<double>(club.size()) * static_cast<double>(club.size() - 1));
}

// ---- generators ----

inline assortnet::Network random_graph(std::mt19937_64& rng, int max_nodes = 12) {
    std::uniform_int_distribution<int> nd(2, max_nodes);
    std::uniform_real_distribution<double> pd(0.05, 0.9);
    int n = nd(rng);
    double p = pd(rng);
    assortnet::Network net(assortnet::Network::Kind::binary);
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) {
        ids.push_back("n" + std::to_string(i));
        net.add_node(ids.back());
    }
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) net.add_edge(ids[i], ids[j]);
    return net;
}

inline assortnet::CensusData random_census_data(std::mt19937_64& rng, int max_individuals = 12,
                                                int max_censuses = 5, int max_groups = 4) {
    std::uniform_int_distribution<int> nd(2, max_individuals);
    std::uniform_int_distribution<int> cd(1, max_censuses);
    std::uniform_int_distribution<int> gd(1, max_groups);
    int n = nd(rng), censuses = cd(rng);
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("a" + std::to_string(i));
    assortnet::CensusData data;
    for (int c = 0; c < censuses; ++c) {
        int groups = gd(rng);
        assortnet::Census census(static_cast<std::size_t>(groups));
        std::uniform_int_distribution<int> pick(0, groups);  // == groups means unobserved
        for (const auto& id : ids) {
            int g = pick(rng);
            if (g < groups) census[static_cast<std::size_t>(g)].insert(id);
        }
        data.censuses.push_back(std::move(census));
    }
    return data;
}

}  // namespace oracle
