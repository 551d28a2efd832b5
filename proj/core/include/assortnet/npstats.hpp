#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "assortnet/errors.hpp"

namespace assortnet {

enum class NetworkClass { nonsocial, social_direct, social_group };

std::string to_string(NetworkClass c);

/// One published network: name, node count, class and reported Newman
/// assortativity.
struct NetworkRecord {
    std::string name;
    std::size_t size = 0;
    NetworkClass cls = NetworkClass::nonsocial;
    double assortativity = 0.0;
    std::string type;    // raw column values, kept for reporting
    std::string method;
    std::string source;
};

/// Average ranks (1-based); tied values share the mean of their rank block.
std::vector<double> rank_with_ties(const std::vector<double>& values);

struct RankTestResult {
    double statistic = 0.0;
    char statistic_name = 'H';  // 'H', 'W' or 'V'
    std::size_t df = 0;         // H only
    double p_value = 1.0;
    bool tie_corrected = false;
    bool continuity_corrected = false;
};

/// Tie-corrected Kruskal-Wallis H with a chi-squared upper-tail p-value.
RankTestResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

/// Two-sample rank-sum test. The statistic is the Mann-Whitney U of the
/// first sample; p by normal approximation with tie and continuity
/// corrections.
RankTestResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b);

/// One-sample signed-rank test against location mu. Values equal to mu are
/// dropped; V is the rank sum of values above mu.
RankTestResult wilcoxon_signed_rank(const std::vector<double>& values, double mu = 0.0);

struct ClassSummary {
    NetworkClass cls;
    std::size_t n = 0;
    double mean = 0.0;
    RankTestResult signed_rank_vs_zero;
};

struct PairwiseRankSum {
    NetworkClass first, second;
    double w_first = 0.0;        // U of the first class
    double w_complement = 0.0;   // n1*n2 - U
    double p_value = 1.0;
};

struct MetaReport {
    std::vector<ClassSummary> classes;
    RankTestResult kruskal;
    std::vector<PairwiseRankSum> pairwise;
};

/// Class means, Kruskal-Wallis across classes, all pairwise rank-sum tests
/// and one-sample signed-rank tests against zero.
MetaReport meta_analysis(const std::vector<NetworkRecord>& dataset);

}  // namespace assortnet
