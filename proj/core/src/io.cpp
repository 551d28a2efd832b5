#include "assortnet/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace assortnet {

double round15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::strtod(buf, nullptr);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("cannot write file '" + path + "'");
    out << content;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// strict comma split; no quoting, labels with commas are thereby rejected
// through field-count mismatches
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) {
        if (cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

double parse_number(const std::string& s, const std::string& what, std::size_t row) {
    if (s.empty()) throw data_error("row " + std::to_string(row) + ": empty " + what);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        throw data_error("row " + std::to_string(row) + ": malformed " + what + " '" + s + "'");
    return v;
}

void require_header(const std::vector<std::string>& lines, const std::string& expected) {
    if (lines.empty()) throw data_error("empty file");
    if (lines[0] != expected)
        throw data_error("expected header '" + expected + "', got '" + lines[0] + "'");
}

}  // namespace

CensusData parse_census_csv_text(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "census,group,individual");
    if (lines.size() < 2) throw data_error("census file has no data rows");

    // labels map to indices by first appearance
    std::vector<std::string> census_labels;
    std::map<std::string, std::size_t> census_index;
    std::vector<std::vector<std::string>> group_labels;  // per census
    CensusData data;
    // (census, individual) -> (group label, row number)
    std::map<std::pair<std::string, std::string>, std::pair<std::string, std::size_t>> seen;

    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) throw data_error("row " + std::to_string(row + 1) + ": empty row");
        auto fields = split_csv_line(lines[row]);
        if (fields.size() != 3)
            throw data_error("row " + std::to_string(row + 1) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        const std::string& census = fields[0];
        const std::string& group = fields[1];
        const std::string& individual = fields[2];
        if (census.empty() || group.empty() || individual.empty())
            throw data_error("row " + std::to_string(row + 1) + ": empty label");

        auto [cit, inserted] = census_index.try_emplace(census, census_labels.size());
        if (inserted) {
            census_labels.push_back(census);
            group_labels.emplace_back();
            data.censuses.emplace_back();
        }
        std::size_t c = cit->second;

        auto prev = seen.find({census, individual});
        if (prev != seen.end())
            throw data_error("individual '" + individual + "' appears twice in census '" + census +
                             "' (rows " + std::to_string(prev->second.second) + " and " +
                             std::to_string(row + 1) + ")");
        seen[{census, individual}] = {group, row + 1};

        auto& labels = group_labels[c];
        auto git = std::find(labels.begin(), labels.end(), group);
        std::size_t g;
        if (git == labels.end()) {
            g = labels.size();
            labels.push_back(group);
            data.censuses[c].emplace_back();
        } else {
            g = static_cast<std::size_t>(git - labels.begin());
        }
        data.censuses[c][g].insert(individual);
    }
    data.validate();
    return data;
}

CensusData parse_census_csv(const std::string& path) {
    return parse_census_csv_text(read_file(path));
}

Network parse_edgelist_csv_text(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "u,v,weight");
    Network net(Network::Kind::weighted);
    bool all_unit = true;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) throw data_error("row " + std::to_string(row + 1) + ": empty row");
        auto fields = split_csv_line(lines[row]);
        if (fields.size() != 3)
            throw data_error("row " + std::to_string(row + 1) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        double w = parse_number(fields[2], "weight", row + 1);
        if (w <= 0.0)
            throw data_error("row " + std::to_string(row + 1) + ": nonpositive weight");
        if (fields[0].empty() || fields[1].empty())
            throw data_error("row " + std::to_string(row + 1) + ": empty node label");
        if (net.has_edge(fields[0], fields[1]))
            throw data_error("row " + std::to_string(row + 1) + ": duplicate edge " + fields[0] +
                             "," + fields[1]);
        net.add_edge(fields[0], fields[1], w);
        if (w != 1.0) all_unit = false;
    }
    if (all_unit) {
        Network binary(Network::Kind::binary);
        for (const auto& v : net.nodes()) binary.add_node(v);
        for (const auto& [key, w] : net.edges()) {
            (void)w;
            binary.add_edge(key.first, key.second);
        }
        return binary;
    }
    return net;
}

Network parse_edgelist_csv(const std::string& path) {
    return parse_edgelist_csv_text(read_file(path));
}

std::vector<NetworkRecord> parse_table_csv_text(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "name,size,type,assortativity,method,source");
    std::vector<NetworkRecord> records;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        if (lines[row].empty()) continue;
        auto fields = split_csv_line(lines[row]);
        if (fields.size() != 6)
            throw data_error("row " + std::to_string(row + 1) + ": expected 6 fields, got " +
                             std::to_string(fields.size()));
        NetworkRecord rec;
        rec.name = fields[0];
        double size = parse_number(fields[1], "size", row + 1);
        if (size < 1.0 || size != std::floor(size))
            throw data_error("row " + std::to_string(row + 1) + ": size must be a positive count");
        rec.size = static_cast<std::size_t>(size);
        rec.type = fields[2];
        rec.assortativity = parse_number(fields[3], "assortativity", row + 1);
        if (rec.assortativity < -1.0 || rec.assortativity > 1.0)
            throw data_error("row " + std::to_string(row + 1) + ": assortativity out of [-1,1]");
        rec.method = fields[4];
        rec.source = fields[5];
        std::string method_lower = rec.method;
        std::transform(method_lower.begin(), method_lower.end(), method_lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (rec.type == "social" && method_lower == "direct") rec.cls = NetworkClass::social_direct;
        else if (rec.type == "social" && method_lower == "group") rec.cls = NetworkClass::social_group;
        else rec.cls = NetworkClass::nonsocial;
        records.push_back(std::move(rec));
    }
    if (records.empty()) throw data_error("dataset has no records");
    return records;
}

std::vector<NetworkRecord> parse_table_csv(const std::string& path) {
    return parse_table_csv_text(read_file(path));
}

std::string write_edgelist_csv(const Network& net) {
    std::string out = "u,v,weight\n";
    for (const auto& [key, w] : net.edges())
        out += key.first + "," + key.second + "," + format_double(w) + "\n";
    return out;
}

std::string write_census_csv(const CensusData& data) {
    std::string out = "census,group,individual\n";
    for (std::size_t c = 0; c < data.censuses.size(); ++c)
        for (std::size_t g = 0; g < data.censuses[c].size(); ++g)
            for (const auto& id : data.censuses[c][g])
                out += std::to_string(c + 1) + "," + std::to_string(g + 1) + "," + id + "\n";
    return out;
}

namespace {

std::string cell(const std::optional<double>& v) {
    return v ? format_double(*v) : "undefined";
}

}  // namespace

std::string write_trace_csv(const SimulationTrace& trace) {
    std::string out = "run,census,assortativity,defined,edges,associations_observed\n";
    for (std::size_t r = 0; r < trace.runs; ++r)
        for (std::size_t c = 0; c < trace.censuses; ++c) {
            const auto& v = trace.assortativity[r][c];
            out += std::to_string(r + 1) + "," + std::to_string(c + 1) + "," + cell(v) + "," +
                   (v ? "1" : "0") + "," + std::to_string(trace.edges[r][c]) + "," +
                   std::to_string(trace.associations_observed[r][c]) + "\n";
        }
    return out;
}

std::string write_summary_csv(const TraceSummary& summary) {
    std::string out = "census,median,q25,q75,min,max,n_undefined\n";
    for (std::size_t c = 0; c < summary.median.size(); ++c)
        out += std::to_string(c + 1) + "," + cell(summary.median[c]) + "," + cell(summary.q25[c]) +
               "," + cell(summary.q75[c]) + "," + cell(summary.min[c]) + "," +
               cell(summary.max[c]) + "," + std::to_string(summary.n_undefined[c]) + "\n";
    return out;
}

std::string write_nulls_csv(const std::vector<std::optional<double>>& nulls) {
    std::string out = "replicate,value\n";
    for (std::size_t i = 0; i < nulls.size(); ++i)
        out += std::to_string(i + 1) + "," + cell(nulls[i]) + "\n";
    return out;
}

json json_value(const std::optional<double>& v) {
    if (!v) return "undefined";
    return round15(*v);
}

json to_json(const RunManifest& manifest) {
    json j;
    j["command"] = manifest.command;
    j["version"] = manifest.version;
    j["seed"] = manifest.seed;
    json params = json::object();
    for (const auto& [k, v] : manifest.parameters) params[k] = v;
    j["parameters"] = params;
    json inputs = json::object();
    for (const auto& [path, digest] : manifest.input_digests) inputs[path] = digest;
    j["inputs"] = inputs;
    return j;
}

json to_json(const AssortativityResult& result) {
    json j;
    j["method"] = to_string(result.method);
    j["value"] = json_value(result.value);
    if (!result.value) j["note"] = "undefined (zero degree variance)";
    j["n_edges"] = result.n_edges;
    return j;
}

json to_json(const KnnCurve& curve) {
    json j;
    json per_node = json::object();
    for (const auto& [v, knn] : curve.per_node) per_node[v] = round15(knn);
    j["per_node"] = per_node;
    json per_degree = json::object();
    for (const auto& [k, knn] : curve.per_degree) per_degree[std::to_string(k)] = round15(knn);
    j["per_degree"] = per_degree;
    j["slope"] = json_value(curve.slope);
    j["trend"] = to_string(curve.trend);
    return j;
}

json to_json(const RichClubCurve& curve) {
    json j;
    json per_k = json::object();
    for (const auto& [k, phi] : curve.per_k) per_k[std::to_string(k)] = json_value(phi);
    j["per_k"] = per_k;
    return j;
}

json to_json(const PermutationTestResult& result) {
    json j;
    j["statistic"] = to_string(result.statistic);
    j["method"] = to_string(result.scheme);
    j["observed"] = round15(result.observed);
    j["replicates"] = result.replicates;
    j["defined_replicates"] = result.replicates - result.undefined_replicates;
    j["undefined_replicates"] = result.undefined_replicates;
    j["burn_in"] = result.burn_in;
    j["thin"] = result.thin;
    j["seed"] = result.seed;
    j["p_greater"] = round15(result.p_greater);
    j["p_less"] = round15(result.p_less);
    j["p_two_sided"] = round15(result.p_two_sided);
    return j;
}

namespace {

json to_json(const RankTestResult& r) {
    json j;
    j["statistic_name"] = std::string(1, r.statistic_name);
    j["statistic"] = round15(r.statistic);
    if (r.statistic_name == 'H') j["df"] = r.df;
    j["p_value"] = round15(r.p_value);
    j["tie_corrected"] = r.tie_corrected;
    j["continuity_corrected"] = r.continuity_corrected;
    return j;
}

}  // namespace

json to_json(const MetaReport& report) {
    json j;
    json classes = json::object();
    for (const auto& c : report.classes) {
        json jc;
        jc["n"] = c.n;
        jc["mean"] = round15(c.mean);
        jc["signed_rank_vs_zero"] = to_json(c.signed_rank_vs_zero);
        classes[to_string(c.cls)] = jc;
    }
    j["classes"] = classes;
    j["kruskal_wallis"] = to_json(report.kruskal);
    json pairwise = json::array();
    for (const auto& pw : report.pairwise) {
        json jp;
        jp["first"] = to_string(pw.first);
        jp["second"] = to_string(pw.second);
        jp["w_first"] = round15(pw.w_first);
        jp["w_complement"] = round15(pw.w_complement);
        jp["p_value"] = round15(pw.p_value);
        pairwise.push_back(jp);
    }
    j["pairwise_rank_sum"] = pairwise;
    return j;
}

}  // namespace assortnet
