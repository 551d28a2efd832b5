#include "assortnet/measures.hpp"

#include <algorithm>
#include <cmath>

namespace assortnet {

std::string to_string(AssortMethod m) {
    return m == AssortMethod::newman ? "newman" : "spearman";
}

AssortMethod assort_method_from_string(const std::string& s) {
    if (s == "newman") return AssortMethod::newman;
    if (s == "spearman") return AssortMethod::spearman;
    throw data_error("unknown assortativity method '" + s + "'");
}

std::string to_string(MixingTrend t) {
    switch (t) {
        case MixingTrend::assortative: return "assortative";
        case MixingTrend::disassortative: return "disassortative";
        default: return "neutral/undefined";
    }
}

namespace {

// Pearson over integer-valued pairs with exact sums. Returns empty when the
// endpoint variance is zero or the sample is empty.
std::optional<double> exact_pearson(const std::vector<std::pair<long long, long long>>& pairs) {
    if (pairs.empty()) return std::nullopt;
    using i128 = __int128;
    i128 n = static_cast<i128>(pairs.size());
    i128 sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (const auto& [x, y] : pairs) {
        sx += x;
        sy += y;
        sxx += static_cast<i128>(x) * x;
        syy += static_cast<i128>(y) * y;
        sxy += static_cast<i128>(x) * y;
    }
    i128 num = n * sxy - sx * sy;
    i128 dx = n * sxx - sx * sx;
    i128 dy = n * syy - sy * sy;
    if (dx == 0 || dy == 0) return std::nullopt;
    long double r = static_cast<long double>(num) /
                    std::sqrt(static_cast<long double>(dx) * static_cast<long double>(dy));
    return static_cast<double>(r);
}

// Doubled average ranks of each value over the pooled first components.
// Doubling keeps ranks integral under ties; Pearson is affine-invariant.
std::map<long long, long long> doubled_rank_map(
    const std::vector<std::pair<long long, long long>>& pairs) {
    std::map<long long, long long> counts;
    for (const auto& [x, y] : pairs) {
        (void)y;  // pooled multiset of second components is identical by symmetry
        ++counts[x];
    }
    std::map<long long, long long> rank2;
    long long start = 1;  // 1-based rank of the first element of the tie block
    for (const auto& [value, cnt] : counts) {
        rank2[value] = 2 * start + (cnt - 1);
        start += cnt;
    }
    return rank2;
}

}  // namespace

AssortativityResult assortativity_from_pairs(
    const std::vector<std::pair<long long, long long>>& doubled_pairs, AssortMethod method) {
    AssortativityResult res;
    res.method = method;
    res.n_edges = doubled_pairs.size() / 2;
    if (method == AssortMethod::newman) {
        res.value = exact_pearson(doubled_pairs);
        return res;
    }
    auto rank2 = doubled_rank_map(doubled_pairs);
    std::vector<std::pair<long long, long long>> ranked;
    ranked.reserve(doubled_pairs.size());
    for (const auto& [x, y] : doubled_pairs) ranked.emplace_back(rank2.at(x), rank2.at(y));
    res.value = exact_pearson(ranked);
    return res;
}

AssortativityResult newman_assortativity(const Network& net) {
    return assortativity_from_pairs(edge_degree_pairs(net).pairs, AssortMethod::newman);
}

AssortativityResult spearman_assortativity(const Network& net) {
    return assortativity_from_pairs(edge_degree_pairs(net).pairs, AssortMethod::spearman);
}

KnnCurve knn_curve(const Network& net) {
    KnnCurve curve;
    for (const auto& v : net.nodes()) {
        const auto& nb = net.neighbors(v);
        if (nb.empty()) continue;
        double sum = 0.0;
        for (const auto& u : nb) sum += static_cast<double>(net.degree(u));
        curve.per_node[v] = sum / static_cast<double>(nb.size());
    }
    std::map<long long, std::pair<double, std::size_t>> acc;
    for (const auto& [v, knn] : curve.per_node) {
        auto k = static_cast<long long>(net.degree(v));
        acc[k].first += knn;
        acc[k].second += 1;
    }
    for (const auto& [k, s] : acc) curve.per_degree[k] = s.first / static_cast<double>(s.second);

    if (curve.per_degree.size() >= 2) {
        double n = static_cast<double>(curve.per_degree.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [k, y] : curve.per_degree) {
            double x = static_cast<double>(k);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double den = n * sxx - sx * sx;
        if (den != 0.0) {
            double slope = (n * sxy - sx * sy) / den;
            curve.slope = slope;
            if (slope > 0.0) curve.trend = MixingTrend::assortative;
            else if (slope < 0.0) curve.trend = MixingTrend::disassortative;
        }
    }
    return curve;
}

RichClubCurve rich_club(const Network& net) {
    RichClubCurve curve;
    long long max_deg = 0;
    for (const auto& v : net.nodes())
        max_deg = std::max(max_deg, static_cast<long long>(net.degree(v)));
    for (long long k = 0; k < max_deg; ++k) {
        std::size_t club = 0;
        for (const auto& v : net.nodes())
            if (static_cast<long long>(net.degree(v)) > k) ++club;
        if (club < 2) {
            curve.per_k[k] = std::nullopt;
            continue;
        }
        std::size_t within = 0;
        for (const auto& [key, w] : net.edges()) {
            (void)w;
            if (static_cast<long long>(net.degree(key.first)) > k &&
                static_cast<long long>(net.degree(key.second)) > k)
                ++within;
        }
        curve.per_k[k] = 2.0 * static_cast<double>(within) /
                         (static_cast<double>(club) * static_cast<double>(club - 1));
    }
    return curve;
}

std::optional<double> local_degree_difference(const Network& net, const NodeId& v) {
    const auto& nb = net.neighbors(v);
    if (nb.empty()) return std::nullopt;
    auto dv = static_cast<long long>(net.degree(v));
    double sum = 0.0;
    for (const auto& u : nb)
        sum += static_cast<double>(std::llabs(dv - static_cast<long long>(net.degree(u))));
    return sum / static_cast<double>(nb.size());
}

}  // namespace assortnet
