#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "assortnet/network.hpp"

namespace assortnet {

enum class AssortMethod { newman, spearman };

std::string to_string(AssortMethod m);
AssortMethod assort_method_from_string(const std::string& s);

/// Degree assortativity. `value` is empty when the statistic is undefined:
/// zero degree variance over edge endpoints (regular graphs) or no edges.
struct AssortativityResult {
    std::optional<double> value;
    std::size_t n_edges = 0;
    AssortMethod method = AssortMethod::newman;
};

/// Pearson correlation over a doubled edge-endpoint sample. Endpoint values
/// must be integers (degrees, or doubled average ranks); sums are exact.
AssortativityResult assortativity_from_pairs(
    const std::vector<std::pair<long long, long long>>& doubled_pairs, AssortMethod method);

/// Newman (2002) assortativity: Pearson correlation of endpoint degrees over
/// every edge in both orientations.
AssortativityResult newman_assortativity(const Network& net);

/// Rank-based variant: endpoint degrees are replaced by their average ranks
/// over the pooled doubled endpoint sample before the Pearson correlation.
AssortativityResult spearman_assortativity(const Network& net);

enum class MixingTrend { assortative, disassortative, neutral_or_undefined };

std::string to_string(MixingTrend t);

/// Mean-neighbor-degree curve: per node, then averaged per degree class,
/// with an ordinary least-squares slope over the per-degree points.
struct KnnCurve {
    std::map<NodeId, double> per_node;   // nodes of degree >= 1 only
    std::map<long long, double> per_degree;
    std::optional<double> slope;         // needs >= 2 degree classes
    MixingTrend trend = MixingTrend::neutral_or_undefined;
};

KnnCurve knn_curve(const Network& net);

/// Rich-club coefficient phi(k) for k in [0, max degree): density of the
/// subgraph induced by nodes of degree > k. Undefined when that subgraph has
/// fewer than two nodes.
struct RichClubCurve {
    std::map<long long, std::optional<double>> per_k;
};

RichClubCurve rich_club(const Network& net);

/// Mean absolute degree difference between a node and its neighbors.
/// Empty for isolated nodes.
std::optional<double> local_degree_difference(const Network& net, const NodeId& v);

}  // namespace assortnet
