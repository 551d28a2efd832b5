#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "assortnet/census.hpp"
#include "assortnet/rng.hpp"

namespace assortnet {

/// Bejder-style resampling: per census, the individuals observed in that
/// census are reassigned uniformly at random to groups whose sizes match the
/// original census's group-size multiset.
CensusData resample_groups(const CensusData& data, Rng& rng);

/// Checkerboard-swap chain over an occurrence matrix. Swaps are restricted
/// to column pairs within the same census, so row sums, column sums and the
/// one-group-per-individual-per-census constraint are all preserved.
class SwapChain {
public:
    explicit SwapChain(OccurrenceMatrix m);

    /// One swap attempt with bounded rejection sampling; returns false if no
    /// valid checkerboard was found within max_draws draws (matrix unchanged).
    bool step(Rng& rng, int max_draws = 100);

    const OccurrenceMatrix& matrix() const { return m_; }

private:
    OccurrenceMatrix m_;
    std::vector<std::vector<std::uint32_t>> col_members_;
    std::vector<std::uint32_t> eligible_censuses_;  // censuses with >= 2 columns
};

/// Single checkerboard swap step (value semantics surface over SwapChain).
OccurrenceMatrix swap_step(const OccurrenceMatrix& m, Rng& rng, int max_draws = 100);

enum class PermutationScheme { resample, swap };

std::string to_string(PermutationScheme s);
PermutationScheme permutation_scheme_from_string(const std::string& s);

struct PermutationTestResult {
    double observed = 0.0;
    std::vector<std::optional<double>> null_values;  // one per requested replicate
    std::size_t undefined_replicates = 0;
    double p_greater = 1.0;
    double p_less = 1.0;
    double p_two_sided = 1.0;
    std::size_t replicates = 0;
    std::size_t burn_in = 0;
    std::size_t thin = 0;
    std::uint64_t seed = 0;
    AssortMethod statistic = AssortMethod::newman;
    PermutationScheme scheme = PermutationScheme::resample;
};

struct PermutationTestOptions {
    AssortMethod statistic = AssortMethod::newman;
    PermutationScheme scheme = PermutationScheme::swap;
    std::size_t replicates = 1000;
    // Defaults scale with the number of 1-cells in the occurrence matrix:
    // burn_in = 1000 * ones, thin = ones.
    std::optional<std::size_t> burn_in;
    std::optional<std::size_t> thin;
    std::uint64_t seed = 0;
    unsigned threads = 1;  // must not affect results
};

/// Monte-Carlo significance test of an assortativity statistic on the
/// dichotomized group network against group-size-preserving null data.
/// Add-one p-values over defined replicates; undefined replicates are
/// counted and excluded from the denominators.
PermutationTestResult permutation_test(const CensusData& data, const PermutationTestOptions& opts);

}  // namespace assortnet
