#include "assortnet/network.hpp"

namespace assortnet {

DegreePairSample edge_degree_pairs(const Network& net) {
    DegreePairSample sample;
    sample.pairs.reserve(2 * net.edge_count());
    for (const auto& [key, w] : net.edges()) {
        (void)w;
        auto da = static_cast<long long>(net.degree(key.first));
        auto db = static_cast<long long>(net.degree(key.second));
        sample.pairs.emplace_back(da, db);
        sample.pairs.emplace_back(db, da);
    }
    return sample;
}

Network filter_edges(const Network& net, double threshold) {
    if (threshold <= 0.0) throw data_error("filter threshold must be positive");
    Network out(Network::Kind::binary);
    for (const auto& v : net.nodes()) out.add_node(v);
    for (const auto& [key, w] : net.edges()) {
        if (w >= threshold) out.add_edge(key.first, key.second);
    }
    return out;
}

Network dichotomize(const Network& net) {
    Network out(Network::Kind::binary);
    for (const auto& v : net.nodes()) out.add_node(v);
    for (const auto& [key, w] : net.edges()) {
        (void)w;  // all stored weights are positive
        out.add_edge(key.first, key.second);
    }
    return out;
}

}  // namespace assortnet
