#include "assortnet/census.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace assortnet {

std::string to_string(Weighting w) {
    return w == Weighting::count ? "count" : "frequency";
}

Weighting weighting_from_string(const std::string& s) {
    if (s == "count") return Weighting::count;
    if (s == "frequency") return Weighting::frequency;
    throw data_error("unknown weighting '" + s + "'");
}

void CensusData::validate() const {
    for (std::size_t c = 0; c < censuses.size(); ++c) {
        std::set<NodeId> seen;
        for (const auto& group : censuses[c]) {
            for (const auto& id : group) {
                if (!seen.insert(id).second)
                    throw data_error("individual '" + id + "' appears in two groups of census " +
                                     std::to_string(c + 1));
            }
        }
    }
}

std::vector<NodeId> CensusData::individuals() const {
    std::set<NodeId> all;
    for (const auto& census : censuses)
        for (const auto& group : census) all.insert(group.begin(), group.end());
    return {all.begin(), all.end()};
}

Network accumulate(const CensusData& data, Weighting weighting) {
    if (data.censuses.empty()) throw data_error("census data is empty");
    data.validate();
    Network net(Network::Kind::weighted);
    for (const auto& id : data.individuals()) net.add_node(id);
    std::map<std::pair<NodeId, NodeId>, std::size_t> counts;
    for (const auto& census : data.censuses) {
        for (const auto& group : census) {
            for (auto it = group.begin(); it != group.end(); ++it) {
                auto jt = it;
                for (++jt; jt != group.end(); ++jt) ++counts[edge_key(*it, *jt)];
            }
        }
    }
    double denom = weighting == Weighting::frequency
                       ? static_cast<double>(data.censuses.size())
                       : 1.0;
    for (const auto& [key, c] : counts)
        net.add_edge(key.first, key.second, static_cast<double>(c) / denom);
    return net;
}

OccurrenceMatrix to_occurrence_matrix(const CensusData& data) {
    data.validate();
    OccurrenceMatrix m;
    m.individuals = data.individuals();
    std::map<NodeId, std::size_t> row_of;
    for (std::size_t i = 0; i < m.individuals.size(); ++i) row_of[m.individuals[i]] = i;

    m.census_begin.push_back(0);
    for (std::size_t c = 0; c < data.censuses.size(); ++c) {
        for (std::size_t g = 0; g < data.censuses[c].size(); ++g) m.occasions.emplace_back(c, g);
        m.census_begin.push_back(m.occasions.size());
    }
    m.cells.assign(m.n_rows(), std::vector<std::uint8_t>(m.n_cols(), 0));
    m.row_sums.assign(m.n_rows(), 0);
    m.col_sums.assign(m.n_cols(), 0);
    std::size_t col = 0;
    for (const auto& census : data.censuses) {
        for (const auto& group : census) {
            for (const auto& id : group) {
                std::size_t r = row_of.at(id);
                m.cells[r][col] = 1;
                ++m.row_sums[r];
                ++m.col_sums[col];
            }
            ++col;
        }
    }
    return m;
}

bool OccurrenceMatrix::consistent() const {
    if (cells.size() != n_rows()) return false;
    std::vector<std::size_t> rs(n_rows(), 0), cs(n_cols(), 0);
    for (std::size_t r = 0; r < n_rows(); ++r) {
        if (cells[r].size() != n_cols()) return false;
        for (std::size_t c = 0; c < n_cols(); ++c) {
            if (cells[r][c] > 1) return false;
            rs[r] += cells[r][c];
            cs[c] += cells[r][c];
        }
    }
    if (rs != row_sums || cs != col_sums) return false;
    // at most one sighting per individual per census
    for (std::size_t r = 0; r < n_rows(); ++r) {
        for (std::size_t c = 0; c + 1 < census_begin.size(); ++c) {
            std::size_t ones = 0;
            for (std::size_t k = census_begin[c]; k < census_begin[c + 1]; ++k) ones += cells[r][k];
            if (ones > 1) return false;
        }
    }
    return true;
}

CensusData census_from_matrix(const OccurrenceMatrix& m) {
    CensusData data;
    data.censuses.resize(m.n_censuses());
    for (std::size_t c = 0; c < m.n_censuses(); ++c)
        data.censuses[c].resize(m.census_begin[c + 1] - m.census_begin[c]);
    for (std::size_t col = 0; col < m.n_cols(); ++col) {
        auto [c, g] = m.occasions[col];
        for (std::size_t r = 0; r < m.n_rows(); ++r)
            if (m.cells[r][col]) data.censuses[c][g].insert(m.individuals[r]);
    }
    return data;
}

Network network_from_matrix(const OccurrenceMatrix& m, Weighting weighting) {
    if (m.n_censuses() == 0) throw data_error("occurrence matrix has no censuses");
    Network net(Network::Kind::weighted);
    for (const auto& id : m.individuals) net.add_node(id);
    std::map<std::pair<NodeId, NodeId>, std::size_t> counts;
    std::vector<std::size_t> members;
    for (std::size_t col = 0; col < m.n_cols(); ++col) {
        members.clear();
        for (std::size_t r = 0; r < m.n_rows(); ++r)
            if (m.cells[r][col]) members.push_back(r);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                ++counts[edge_key(m.individuals[members[a]], m.individuals[members[b]])];
    }
    double denom = weighting == Weighting::frequency
                       ? static_cast<double>(m.n_censuses())
                       : 1.0;
    for (const auto& [key, c] : counts)
        net.add_edge(key.first, key.second, static_cast<double>(c) / denom);
    return net;
}

std::optional<double> assortativity_from_matrix(const OccurrenceMatrix& m, AssortMethod method) {
    const std::size_t n = m.n_rows();
    std::vector<std::uint8_t> adj(n * n, 0);
    std::vector<std::size_t> members;
    for (std::size_t col = 0; col < m.n_cols(); ++col) {
        members.clear();
        for (std::size_t r = 0; r < n; ++r)
            if (m.cells[r][col]) members.push_back(r);
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                adj[members[a] * n + members[b]] = 1;
                adj[members[b] * n + members[a]] = 1;
            }
    }
    std::vector<long long> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) deg[i] += adj[i * n + j];
    std::vector<std::pair<long long, long long>> doubled;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (adj[i * n + j]) {
                doubled.emplace_back(deg[i], deg[j]);
                doubled.emplace_back(deg[j], deg[i]);
            }
    return assortativity_from_pairs(doubled, method).value;
}

}  // namespace assortnet
