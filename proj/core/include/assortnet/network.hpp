#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "assortnet/errors.hpp"

namespace assortnet {

using NodeId = std::string;

// Canonical unordered pair key (first <= second).
inline std::pair<NodeId, NodeId> edge_key(const NodeId& u, const NodeId& v) {
    return u <= v ? std::make_pair(u, v) : std::make_pair(v, u);
}

/// Undirected network with positive edge weights. Binary networks carry
/// weight 1 on every edge. Values are immutable once built; construction is
/// single-writer.
class Network {
public:
    enum class Kind { binary, weighted };

    explicit Network(Kind kind = Kind::binary) : kind_(kind) {}

    Kind kind() const { return kind_; }

    void add_node(const NodeId& v) { nodes_.insert(v); }

    // Rejects self-loops, nonpositive weights and duplicate pairs.
    void add_edge(const NodeId& u, const NodeId& v, double weight = 1.0) {
        if (u == v) throw data_error("self-loop on node '" + u + "' not allowed");
        if (weight <= 0.0) throw data_error("nonpositive weight on edge " + u + "," + v);
        if (kind_ == Kind::binary) weight = 1.0;
        auto key = edge_key(u, v);
        if (edges_.count(key)) throw data_error("duplicate edge " + key.first + "," + key.second);
        edges_.emplace(key, weight);
        nodes_.insert(u);
        nodes_.insert(v);
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }

    // Adds to the weight of an existing edge, or creates it. Used by
    // accumulation from census data.
    void bump_edge(const NodeId& u, const NodeId& v, double delta) {
        if (u == v) throw data_error("self-loop on node '" + u + "' not allowed");
        if (delta <= 0.0) throw data_error("nonpositive weight increment on edge " + u + "," + v);
        auto key = edge_key(u, v);
        auto it = edges_.find(key);
        if (it == edges_.end()) {
            edges_.emplace(key, kind_ == Kind::binary ? 1.0 : delta);
            nodes_.insert(u);
            nodes_.insert(v);
            adjacency_[u].insert(v);
            adjacency_[v].insert(u);
        } else if (kind_ != Kind::binary) {
            it->second += delta;
        }
    }

    const std::set<NodeId>& nodes() const { return nodes_; }
    const std::map<std::pair<NodeId, NodeId>, double>& edges() const { return edges_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_node(const NodeId& v) const { return nodes_.count(v) != 0; }
    bool has_edge(const NodeId& u, const NodeId& v) const { return edges_.count(edge_key(u, v)) != 0; }

    double weight(const NodeId& u, const NodeId& v) const {
        auto it = edges_.find(edge_key(u, v));
        return it == edges_.end() ? 0.0 : it->second;
    }

    const std::set<NodeId>& neighbors(const NodeId& v) const {
        require_node(v);
        auto it = adjacency_.find(v);
        return it == adjacency_.end() ? empty_set_ : it->second;
    }

    /// Number of distinct neighbors; weights ignored.
    std::size_t degree(const NodeId& v) const {
        require_node(v);
        auto it = adjacency_.find(v);
        return it == adjacency_.end() ? 0 : it->second.size();
    }

private:
    void require_node(const NodeId& v) const {
        if (!nodes_.count(v)) throw data_error("unknown node '" + v + "'");
    }

    Kind kind_;
    std::set<NodeId> nodes_;
    std::map<std::pair<NodeId, NodeId>, double> edges_;
    std::map<NodeId, std::set<NodeId>> adjacency_;
    inline static const std::set<NodeId> empty_set_{};
};

/// Degrees of both endpoints of every edge, in both orientations.
/// Length is always 2M.
struct DegreePairSample {
    std::vector<std::pair<long long, long long>> pairs;
};

DegreePairSample edge_degree_pairs(const Network& net);

/// Keep edges with weight >= threshold, binarize. Node set unchanged.
Network filter_edges(const Network& net, double threshold);

/// Keep every positive-weight edge, binarize. Idempotent.
Network dichotomize(const Network& net);

}  // namespace assortnet
