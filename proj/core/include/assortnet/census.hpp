#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "assortnet/measures.hpp"
#include "assortnet/network.hpp"

namespace assortnet {

using Group = std::set<NodeId>;
using Census = std::vector<Group>;  // groups may be empty

/// Ordered list of censuses; each census partitions the individuals observed
/// on that occasion into groups.
struct CensusData {
    std::vector<Census> censuses;

    // Throws if an individual appears in two groups of one census.
    void validate() const;

    /// Sorted union of individuals over all censuses.
    std::vector<NodeId> individuals() const;

    bool operator==(const CensusData&) const = default;
};

enum class Weighting { count, frequency };

std::string to_string(Weighting w);
Weighting weighting_from_string(const std::string& s);

/// Gambit-of-the-group accumulation: weight(u,v) = number of censuses in
/// which u and v share a group (count), or that divided by the number of
/// censuses (frequency). All observed individuals become nodes.
Network accumulate(const CensusData& data, Weighting weighting);

/// Binary individuals x group-occasions matrix. Columns are grouped per
/// census; within one census's columns each row has at most one 1.
struct OccurrenceMatrix {
    std::vector<NodeId> individuals;                       // row labels, sorted
    std::vector<std::pair<std::size_t, std::size_t>> occasions;  // (census, group) col labels
    std::vector<std::size_t> census_begin;                 // C+1 offsets into columns
    std::vector<std::vector<std::uint8_t>> cells;          // rows x cols
    std::vector<std::size_t> row_sums;                     // sighting counts
    std::vector<std::size_t> col_sums;                     // group sizes

    std::size_t n_rows() const { return individuals.size(); }
    std::size_t n_cols() const { return occasions.size(); }
    std::size_t n_censuses() const { return census_begin.empty() ? 0 : census_begin.size() - 1; }

    // Recompute sums from cells and check structural invariants.
    bool consistent() const;
};

OccurrenceMatrix to_occurrence_matrix(const CensusData& data);

/// Equivalent of accumulate() on the census data the matrix encodes.
Network network_from_matrix(const OccurrenceMatrix& m, Weighting weighting);

CensusData census_from_matrix(const OccurrenceMatrix& m);

/// Assortativity of the dichotomized co-occurrence network, computed on row
/// indices without materializing a Network. Same arithmetic as the Network
/// path; used to score permuted matrices.
std::optional<double> assortativity_from_matrix(const OccurrenceMatrix& m, AssortMethod method);

}  // namespace assortnet
