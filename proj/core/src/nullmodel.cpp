#include "assortnet/nullmodel.hpp"

#include <algorithm>
#include <thread>

namespace assortnet {

std::string to_string(PermutationScheme s) {
    return s == PermutationScheme::resample ? "resample" : "swap";
}

PermutationScheme permutation_scheme_from_string(const std::string& s) {
    if (s == "resample") return PermutationScheme::resample;
    if (s == "swap") return PermutationScheme::swap;
    throw data_error("unknown permutation scheme '" + s + "'");
}

CensusData resample_groups(const CensusData& data, Rng& rng) {
    data.validate();
    CensusData out;
    out.censuses.reserve(data.censuses.size());
    for (const auto& census : data.censuses) {
        std::vector<NodeId> participants;
        for (const auto& group : census)
            participants.insert(participants.end(), group.begin(), group.end());
        std::sort(participants.begin(), participants.end());
        std::shuffle(participants.begin(), participants.end(), rng);
        Census shuffled;
        shuffled.reserve(census.size());
        std::size_t at = 0;
        for (const auto& group : census) {
            Group g(participants.begin() + at, participants.begin() + at + group.size());
            at += group.size();
            shuffled.push_back(std::move(g));
        }
        out.censuses.push_back(std::move(shuffled));
    }
    return out;
}

SwapChain::SwapChain(OccurrenceMatrix m) : m_(std::move(m)) {
    col_members_.resize(m_.n_cols());
    for (std::size_t col = 0; col < m_.n_cols(); ++col)
        for (std::size_t r = 0; r < m_.n_rows(); ++r)
            if (m_.cells[r][col]) col_members_[col].push_back(static_cast<std::uint32_t>(r));
    for (std::size_t c = 0; c + 1 < m_.census_begin.size(); ++c)
        if (m_.census_begin[c + 1] - m_.census_begin[c] >= 2)
            eligible_censuses_.push_back(static_cast<std::uint32_t>(c));
}

bool SwapChain::step(Rng& rng, int max_draws) {
    if (eligible_censuses_.empty()) return false;
    for (int draw = 0; draw < max_draws; ++draw) {
        std::size_t c = eligible_censuses_[std::uniform_int_distribution<std::size_t>(
            0, eligible_censuses_.size() - 1)(rng)];
        std::size_t lo = m_.census_begin[c], hi = m_.census_begin[c + 1];
        std::uniform_int_distribution<std::size_t> col_dist(lo, hi - 1);
        std::size_t g = col_dist(rng);
        std::size_t h = col_dist(rng);
        if (g == h) continue;
        auto& mg = col_members_[g];
        auto& mh = col_members_[h];
        if (mg.empty() || mh.empty()) continue;
        std::size_t gi = std::uniform_int_distribution<std::size_t>(0, mg.size() - 1)(rng);
        std::size_t hj = std::uniform_int_distribution<std::size_t>(0, mh.size() - 1)(rng);
        std::uint32_t i = mg[gi], j = mh[hj];
        // within one census a row has at most one 1, so i != j here
        if (m_.cells[i][h] || m_.cells[j][g]) continue;
        m_.cells[i][g] = 0;
        m_.cells[i][h] = 1;
        m_.cells[j][h] = 0;
        m_.cells[j][g] = 1;
        mg[gi] = j;
        mh[hj] = i;
        return true;
    }
    return false;
}

OccurrenceMatrix swap_step(const OccurrenceMatrix& m, Rng& rng, int max_draws) {
    SwapChain chain(m);
    chain.step(rng, max_draws);
    return chain.matrix();
}

PermutationTestResult permutation_test(const CensusData& data, const PermutationTestOptions& opts) {
    if (opts.replicates < 1) throw data_error("replicates must be >= 1");
    Network observed_net = dichotomize(accumulate(data, Weighting::count));
    auto observed = (opts.statistic == AssortMethod::newman ? newman_assortativity(observed_net)
                                                            : spearman_assortativity(observed_net))
                        .value;
    if (!observed)
        throw undefined_statistic_error(
            "assortativity is undefined on the observed network (zero degree variance); "
            "consider analysing the weighted, unfiltered network instead");

    OccurrenceMatrix matrix = to_occurrence_matrix(data);
    std::size_t ones = 0;
    for (auto s : matrix.row_sums) ones += s;

    PermutationTestResult res;
    res.observed = *observed;
    res.replicates = opts.replicates;
    res.seed = opts.seed;
    res.statistic = opts.statistic;
    res.scheme = opts.scheme;
    res.burn_in = opts.burn_in.value_or(1000 * ones);
    res.thin = std::max<std::size_t>(1, opts.thin.value_or(ones));
    res.null_values.assign(opts.replicates, std::nullopt);

    if (opts.scheme == PermutationScheme::resample) {
        // independent replicates; per-replicate RNG streams keep the result
        // identical for any thread count
        auto worker = [&](std::size_t begin, std::size_t end) {
            for (std::size_t r = begin; r < end; ++r) {
                Rng rng = derive_rng(opts.seed, r + 1);
                CensusData null_data = resample_groups(data, rng);
                res.null_values[r] =
                    assortativity_from_matrix(to_occurrence_matrix(null_data), opts.statistic);
            }
        };
        unsigned threads = std::max(1u, opts.threads);
        if (threads == 1 || opts.replicates < 2 * threads) {
            worker(0, opts.replicates);
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (opts.replicates + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                std::size_t b = t * chunk;
                std::size_t e = std::min<std::size_t>(b + chunk, opts.replicates);
                if (b < e) pool.emplace_back(worker, b, e);
            }
            for (auto& th : pool) th.join();
        }
    } else {
        Rng rng = derive_rng(opts.seed, 0);
        SwapChain chain(std::move(matrix));
        for (std::size_t s = 0; s < res.burn_in; ++s) chain.step(rng);
        for (std::size_t r = 0; r < opts.replicates; ++r) {
            for (std::size_t s = 0; s < res.thin; ++s) chain.step(rng);
            res.null_values[r] = assortativity_from_matrix(chain.matrix(), opts.statistic);
        }
    }

    std::size_t defined = 0, ge = 0, le = 0;
    for (const auto& v : res.null_values) {
        if (!v) continue;
        ++defined;
        if (*v >= res.observed) ++ge;
        if (*v <= res.observed) ++le;
    }
    res.undefined_replicates = opts.replicates - defined;
    res.p_greater = static_cast<double>(1 + ge) / static_cast<double>(1 + defined);
    res.p_less = static_cast<double>(1 + le) / static_cast<double>(1 + defined);
    res.p_two_sided = std::min(1.0, 2.0 * std::min(res.p_greater, res.p_less));
    return res;
}

}  // namespace assortnet
