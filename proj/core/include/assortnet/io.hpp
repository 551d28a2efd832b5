#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "assortnet/census.hpp"
#include "assortnet/measures.hpp"
#include "assortnet/network.hpp"
#include "assortnet/npstats.hpp"
#include "assortnet/nullmodel.hpp"
#include "assortnet/simulate.hpp"

namespace assortnet {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

/// Round through a 15-significant-digit decimal representation, so that
/// serialized JSON/CSV numbers never carry more than 15 significant digits.
double round15(double v);

std::string format_double(double v);  // %.15g

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest, hex-encoded. Used for input digests in manifests.
std::string fnv1a64_hex(const std::string& bytes);

// ---- parsing (parsers reject rather than repair) ----

CensusData parse_census_csv_text(const std::string& text);
CensusData parse_census_csv(const std::string& path);

Network parse_edgelist_csv_text(const std::string& text);
Network parse_edgelist_csv(const std::string& path);

std::vector<NetworkRecord> parse_table_csv_text(const std::string& text);
std::vector<NetworkRecord> parse_table_csv(const std::string& path);

// ---- writing (deterministic ordering throughout) ----

std::string write_edgelist_csv(const Network& net);
std::string write_census_csv(const CensusData& data);
std::string write_trace_csv(const SimulationTrace& trace);
std::string write_summary_csv(const TraceSummary& summary);
std::string write_nulls_csv(const std::vector<std::optional<double>>& nulls);

// ---- result serialization ----

/// Everything needed to reproduce a run byte-for-byte.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // ordered
    std::uint64_t seed = 0;
    std::string version = kVersion;
    std::vector<std::pair<std::string, std::string>> input_digests;  // path -> digest
};

json to_json(const RunManifest& manifest);
json to_json(const AssortativityResult& result);
json to_json(const KnnCurve& curve);
json to_json(const RichClubCurve& curve);
json to_json(const PermutationTestResult& result);
json to_json(const MetaReport& report);

/// JSON number or the explicit string "undefined".
json json_value(const std::optional<double>& v);

}  // namespace assortnet
