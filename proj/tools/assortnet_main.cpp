// assortnet: build, measure and significance-test group-based social
// networks from census data.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "assortnet/io.hpp"

namespace an = assortnet;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;  // empty = stdout
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) std::cout << text;
    else an::write_file(g.out, text);
}

an::RunManifest make_manifest(const std::string& command, const GlobalOpts& g,
                              std::vector<std::pair<std::string, std::string>> params,
                              const std::vector<std::string>& input_paths) {
    an::RunManifest m;
    m.command = command;
    m.seed = g.seed;
    m.parameters = std::move(params);
    for (const auto& p : input_paths)
        m.input_digests.emplace_back(p, an::fnv1a64_hex(an::read_file(p)));
    return m;
}

std::string dump(const an::json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"Group-based social network construction, assortativity measures, "
                 "permutation null models and simulation"};
    app.require_subcommand(1);
    app.fallthrough(true);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (never affects results)")
        ->capture_default_str();
    app.add_option("--out", g.out, "Write the primary result here instead of stdout");

    // measure
    auto* measure = app.add_subcommand("measure", "Compute a measure on an edge-list network");
    std::string m_input, m_measure = "newman", m_node;
    measure->add_option("--input", m_input, "Edge-list CSV (header u,v,weight)")->required();
    measure->add_option("--measure", m_measure, "newman|spearman|knn|richclub|localdiff")
        ->check(CLI::IsMember({"newman", "spearman", "knn", "richclub", "localdiff"}))
        ->capture_default_str();
    measure->add_option("--node", m_node, "Node id (localdiff only; all nodes if omitted)");

    // build
    auto* build = app.add_subcommand("build", "Accumulate a weighted network from census data");
    std::string b_census, b_weighting = "count";
    bool b_dichotomize = false;
    build->add_option("--census", b_census, "Census CSV (header census,group,individual)")
        ->required();
    build->add_option("--weighting", b_weighting, "count|frequency")
        ->check(CLI::IsMember({"count", "frequency"}))
        ->capture_default_str();
    build->add_flag("--dichotomize", b_dichotomize, "Binarize the accumulated network");

    // filter
    auto* filter = app.add_subcommand("filter", "Threshold-filter a weighted network to binary");
    std::string f_input;
    double f_threshold = 0.0;
    filter->add_option("--input", f_input, "Edge-list CSV")->required();
    filter->add_option("--threshold", f_threshold, "Keep edges with weight >= threshold")
        ->required();

    // nulltest
    auto* nulltest = app.add_subcommand(
        "nulltest", "Permutation significance test against group-size-preserving null data");
    std::string n_census, n_statistic = "newman", n_method = "swap", n_null_out;
    std::size_t n_replicates = 1000;
    std::optional<std::size_t> n_burnin, n_thin;
    nulltest->add_option("--census", n_census, "Census CSV")->required();
    nulltest->add_option("--statistic", n_statistic, "newman|spearman")
        ->check(CLI::IsMember({"newman", "spearman"}))
        ->capture_default_str();
    nulltest->add_option("--method", n_method, "swap|resample")
        ->check(CLI::IsMember({"swap", "resample"}))
        ->capture_default_str();
    nulltest->add_option("--replicates", n_replicates, "Null replicates")->capture_default_str();
    nulltest->add_option("--burnin", n_burnin,
                         "Swap burn-in steps (default 1000 x number of sightings)");
    nulltest->add_option("--thin", n_thin,
                         "Swap steps between recorded replicates (default number of sightings)");
    nulltest->add_option("--null-out", n_null_out, "Dump the null distribution to this CSV");

    // simulate
    auto* simulate = app.add_subcommand(
        "simulate", "Random group-membership simulation with cumulative assortativity trace");
    an::SimulationConfig cfg;
    std::string s_summary_out, s_thresholds;
    simulate->add_option("--pop", cfg.population, "Population size")->capture_default_str();
    simulate->add_option("--groups", cfg.groups_per_census, "Groups per census")
        ->capture_default_str();
    simulate->add_option("--censuses", cfg.censuses, "Number of censuses")->capture_default_str();
    simulate->add_option("--runs", cfg.runs, "Simulation repeats")->capture_default_str();
    simulate->add_option("--alpha", cfg.dirichlet_alpha, "Symmetric Dirichlet concentration")
        ->capture_default_str();
    simulate->add_option("--summary-out", s_summary_out, "Write the per-census summary CSV here");
    simulate->add_option("--thresholds", s_thresholds,
                         "Comma-separated frequency thresholds; runs the filtering experiment");

    // meta
    auto* meta = app.add_subcommand("meta", "Meta-analysis over a published-network dataset");
    std::string t_dataset;
    meta->add_option("--dataset", t_dataset, "Dataset CSV (name,size,type,assortativity,method,source)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (measure->parsed()) {
        an::Network net = an::parse_edgelist_csv(m_input);
        auto manifest = make_manifest(
            "measure", g,
            {{"input", m_input}, {"measure", m_measure}, {"node", m_node}}, {m_input});
        an::json result;
        if (m_measure == "newman") result = an::to_json(an::newman_assortativity(net));
        else if (m_measure == "spearman") result = an::to_json(an::spearman_assortativity(net));
        else if (m_measure == "knn") result = an::to_json(an::knn_curve(net));
        else if (m_measure == "richclub") result = an::to_json(an::rich_club(net));
        else {
            an::json per_node = an::json::object();
            if (!m_node.empty()) {
                per_node[m_node] = an::json_value(an::local_degree_difference(net, m_node));
            } else {
                for (const auto& v : net.nodes())
                    per_node[v] = an::json_value(an::local_degree_difference(net, v));
            }
            result["local_degree_difference"] = per_node;
        }
        an::json out;
        out["manifest"] = an::to_json(manifest);
        out["result"] = result;
        emit(g, dump(out));
        return 0;
    }

    if (build->parsed()) {
        an::CensusData data = an::parse_census_csv(b_census);
        an::Network net = an::accumulate(data, an::weighting_from_string(b_weighting));
        if (b_dichotomize) net = an::dichotomize(net);
        auto manifest = make_manifest("build", g,
                                      {{"census", b_census},
                                       {"weighting", b_weighting},
                                       {"dichotomize", b_dichotomize ? "true" : "false"}},
                                      {b_census});
        std::cerr << dump(an::to_json(manifest));
        emit(g, an::write_edgelist_csv(net));
        return 0;
    }

    if (filter->parsed()) {
        an::Network net = an::parse_edgelist_csv(f_input);
        an::Network out = an::filter_edges(net, f_threshold);
        auto manifest = make_manifest(
            "filter", g,
            {{"input", f_input}, {"threshold", an::format_double(f_threshold)}}, {f_input});
        std::cerr << dump(an::to_json(manifest));
        emit(g, an::write_edgelist_csv(out));
        return 0;
    }

    if (nulltest->parsed()) {
        an::CensusData data = an::parse_census_csv(n_census);
        an::PermutationTestOptions opts;
        opts.statistic = an::assort_method_from_string(n_statistic);
        opts.scheme = an::permutation_scheme_from_string(n_method);
        opts.replicates = n_replicates;
        opts.burn_in = n_burnin;
        opts.thin = n_thin;
        opts.seed = g.seed;
        opts.threads = g.threads;
        an::PermutationTestResult result = an::permutation_test(data, opts);
        auto manifest = make_manifest("nulltest", g,
                                      {{"census", n_census},
                                       {"statistic", n_statistic},
                                       {"method", n_method},
                                       {"replicates", std::to_string(n_replicates)},
                                       {"burnin", std::to_string(result.burn_in)},
                                       {"thin", std::to_string(result.thin)}},
                                      {n_census});
        if (!n_null_out.empty()) an::write_file(n_null_out, an::write_nulls_csv(result.null_values));
        an::json out;
        out["manifest"] = an::to_json(manifest);
        out["result"] = an::to_json(result);
        emit(g, dump(out));
        return 0;
    }

    if (simulate->parsed()) {
        cfg.seed = g.seed;
        std::vector<std::pair<std::string, std::string>> params = {
            {"pop", std::to_string(cfg.population)},
            {"groups", std::to_string(cfg.groups_per_census)},
            {"censuses", std::to_string(cfg.censuses)},
            {"runs", std::to_string(cfg.runs)},
            {"alpha", an::format_double(cfg.dirichlet_alpha)},
            {"thresholds", s_thresholds}};
        auto manifest = make_manifest("simulate", g, params, {});

        std::vector<double> thresholds;
        if (!s_thresholds.empty()) {
            std::size_t at = 0;
            while (at <= s_thresholds.size()) {
                std::size_t comma = s_thresholds.find(',', at);
                std::string tok = s_thresholds.substr(
                    at, comma == std::string::npos ? std::string::npos : comma - at);
                if (tok.empty()) throw an::data_error("malformed --thresholds list");
                thresholds.push_back(std::stod(tok));
                if (comma == std::string::npos) break;
                at = comma + 1;
            }
        }

        std::cerr << dump(an::to_json(manifest));
        if (thresholds.empty()) {
            an::SimulationTrace trace = an::run_simulation(cfg, g.threads);
            emit(g, an::write_trace_csv(trace));
            if (!s_summary_out.empty())
                an::write_file(s_summary_out, an::write_summary_csv(an::summarize_trace(trace)));
        } else {
            if (g.out.empty())
                throw an::data_error("--thresholds needs --out as a base path for per-threshold traces");
            auto traces = an::filtering_experiment(cfg, thresholds, g.threads);
            for (std::size_t t = 0; t < thresholds.size(); ++t) {
                // one trace file per threshold: <out>.t<threshold>
                an::write_file(g.out + ".t" + an::format_double(thresholds[t]),
                               an::write_trace_csv(traces[t]));
                if (!s_summary_out.empty())
                    an::write_file(s_summary_out + ".t" + an::format_double(thresholds[t]),
                                   an::write_summary_csv(an::summarize_trace(traces[t])));
            }
        }
        return 0;
    }

    // meta
    auto records = an::parse_table_csv(t_dataset);
    an::MetaReport report = an::meta_analysis(records);
    auto manifest = make_manifest("meta", g, {{"dataset", t_dataset}}, {t_dataset});
    an::json out;
    out["manifest"] = an::to_json(manifest);
    out["result"] = an::to_json(report);
    emit(g, dump(out));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const an::undefined_statistic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const an::data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ParseError&) {
        return 1;  // CLI11_PARSE handles these before we get here
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
