#include "assortnet/npstats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

namespace assortnet {

std::string to_string(NetworkClass c) {
    switch (c) {
        case NetworkClass::social_direct: return "social_direct";
        case NetworkClass::social_group: return "social_group";
        default: return "nonsocial";
    }
}

std::vector<double> rank_with_ties(const std::vector<double>& values) {
    if (values.empty()) throw data_error("cannot rank an empty sample");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        double avg = static_cast<double>(i + j + 2) / 2.0;  // mean of ranks i+1 .. j+1
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

namespace {

// sum of (t^3 - t) over tie blocks of the pooled sample
double tie_term(const std::vector<double>& pooled) {
    std::map<double, std::size_t> counts;
    for (double v : pooled) ++counts[v];
    double s = 0.0;
    for (const auto& [v, t] : counts) {
        (void)v;
        auto td = static_cast<double>(t);
        s += td * td * td - td;
    }
    return s;
}

double normal_two_sided_p(double z) {
    boost::math::normal_distribution<double> normal;
    double lower = boost::math::cdf(normal, z);
    double upper = boost::math::cdf(boost::math::complement(normal, z));
    return std::min(1.0, 2.0 * std::min(lower, upper));
}

// z with continuity correction: shift the centered statistic 0.5 toward 0
double corrected_z(double centered, double sd) {
    if (centered > 0.5) centered -= 0.5;
    else if (centered < -0.5) centered += 0.5;
    else centered = 0.0;
    return centered / sd;
}

}  // namespace

RankTestResult kruskal_wallis(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) throw data_error("kruskal-wallis needs at least 2 groups");
    std::vector<double> pooled;
    for (const auto& g : groups) {
        if (g.empty()) throw data_error("kruskal-wallis groups must be nonempty");
        pooled.insert(pooled.end(), g.begin(), g.end());
    }
    const auto n = static_cast<double>(pooled.size());
    if (pooled.size() < 3) throw data_error("kruskal-wallis needs at least 3 observations");

    auto ranks = rank_with_ties(pooled);
    double h = 0.0;
    std::size_t at = 0;
    for (const auto& g : groups) {
        double rank_sum = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) rank_sum += ranks[at + i];
        at += g.size();
        h += rank_sum * rank_sum / static_cast<double>(g.size());
    }
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);

    double ties = tie_term(pooled);
    double correction = 1.0 - ties / (n * n * n - n);
    if (correction <= 0.0)
        throw undefined_statistic_error("kruskal-wallis H undefined: all values tied");
    h /= correction;

    RankTestResult res;
    res.statistic = h;
    res.statistic_name = 'H';
    res.df = groups.size() - 1;
    res.tie_corrected = true;
    boost::math::chi_squared_distribution<double> chi2(static_cast<double>(res.df));
    res.p_value = boost::math::cdf(boost::math::complement(chi2, std::max(0.0, h)));
    return res;
}

RankTestResult wilcoxon_rank_sum(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) throw data_error("rank-sum samples must be nonempty");
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    auto ranks = rank_with_ties(pooled);
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    const double n = na + nb;
    double rank_sum_a = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) rank_sum_a += ranks[i];
    double u = rank_sum_a - na * (na + 1.0) / 2.0;

    RankTestResult res;
    res.statistic = u;
    res.statistic_name = 'W';
    res.tie_corrected = true;
    res.continuity_corrected = true;
    double ties = tie_term(pooled);
    double var = na * nb / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
    if (var <= 0.0)
        throw undefined_statistic_error("rank-sum variance is zero: all values tied");
    res.p_value = normal_two_sided_p(corrected_z(u - na * nb / 2.0, std::sqrt(var)));
    return res;
}

RankTestResult wilcoxon_signed_rank(const std::vector<double>& values, double mu) {
    std::vector<double> diffs;
    for (double v : values)
        if (v != mu) diffs.push_back(v - mu);
    if (diffs.empty())
        throw undefined_statistic_error("signed-rank test undefined: all values equal mu");

    std::vector<double> abs_diffs;
    abs_diffs.reserve(diffs.size());
    for (double d : diffs) abs_diffs.push_back(std::fabs(d));
    auto ranks = rank_with_ties(abs_diffs);
    double v_plus = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i)
        if (diffs[i] > 0.0) v_plus += ranks[i];

    const auto m = static_cast<double>(diffs.size());
    RankTestResult res;
    res.statistic = v_plus;
    res.statistic_name = 'V';
    res.tie_corrected = true;
    res.continuity_corrected = true;
    double ties = tie_term(abs_diffs);
    double var = m * (m + 1.0) * (2.0 * m + 1.0) / 24.0 - ties / 48.0;
    if (var <= 0.0)
        throw undefined_statistic_error("signed-rank variance is zero");
    res.p_value = normal_two_sided_p(corrected_z(v_plus - m * (m + 1.0) / 4.0, std::sqrt(var)));
    return res;
}

MetaReport meta_analysis(const std::vector<NetworkRecord>& dataset) {
    if (dataset.empty()) throw data_error("meta-analysis dataset is empty");
    std::map<NetworkClass, std::vector<double>> by_class;
    for (const auto& rec : dataset) by_class[rec.cls].push_back(rec.assortativity);
    if (by_class.size() < 2) throw data_error("meta-analysis needs at least 2 network classes");

    MetaReport report;
    std::vector<std::vector<double>> groups;
    std::vector<NetworkClass> order;
    for (const auto& [cls, vals] : by_class) {
        ClassSummary s;
        s.cls = cls;
        s.n = vals.size();
        s.mean = std::accumulate(vals.begin(), vals.end(), 0.0) / static_cast<double>(vals.size());
        s.signed_rank_vs_zero = wilcoxon_signed_rank(vals, 0.0);
        report.classes.push_back(std::move(s));
        groups.push_back(vals);
        order.push_back(cls);
    }
    report.kruskal = kruskal_wallis(groups);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            PairwiseRankSum pw;
            pw.first = order[i];
            pw.second = order[j];
            auto rs = wilcoxon_rank_sum(groups[i], groups[j]);
            pw.w_first = rs.statistic;
            pw.w_complement =
                static_cast<double>(groups[i].size()) * static_cast<double>(groups[j].size()) -
                rs.statistic;
            pw.p_value = rs.p_value;
            report.pairwise.push_back(pw);
        }
    }
    return report;
}

}  // namespace assortnet
