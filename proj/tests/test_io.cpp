#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "assortnet/io.hpp"

using namespace assortnet;

TEST_CASE("round15 caps significant digits") {
    CHECK(round15(1.0 / 3.0) == 0.333333333333333);
    CHECK(round15(0.0) == 0.0);
    CHECK(round15(-2.5) == -2.5);
    CHECK(format_double(round15(1.0 / 3.0)).size() <= 17);
}

TEST_CASE("fnv1a64 digest is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
    CHECK(fnv1a64_hex("abc") == fnv1a64_hex("abc"));
}

TEST_CASE("census CSV round trip") {
    CensusData data;
    data.censuses.push_back(Census{Group{"a", "b"}, Group{"c"}});
    data.censuses.push_back(Census{Group{"b", "c"}});
    std::string text = write_census_csv(data);
    CHECK(text.substr(0, text.find('\n')) == "census,group,individual");
    CensusData parsed = parse_census_csv_text(text);
    CHECK(parsed == data);
}

TEST_CASE("census CSV parser rejects malformed input") {
    CHECK_THROWS_AS(parse_census_csv_text("bogus,header,row\n1,1,a\n"), data_error);
    CHECK_THROWS_AS(parse_census_csv_text("census,group,individual\n"), data_error);
    CHECK_THROWS_AS(parse_census_csv_text("census,group,individual\n1,1\n"), data_error);
    // duplicate individual within one census
    CHECK_THROWS_AS(
        parse_census_csv_text("census,group,individual\n1,1,a\n1,2,a\n"), data_error);
    // same individual in two censuses is fine
    CHECK_NOTHROW(parse_census_csv_text("census,group,individual\n1,1,a\n2,1,a\n"));
}

TEST_CASE("census labels map by first appearance") {
    CensusData data = parse_census_csv_text(
        "census,group,individual\nsummer,north,a\nsummer,south,b\nwinter,north,a\n");
    REQUIRE(data.censuses.size() == 2);
    CHECK(data.censuses[0][0] == Group{"a"});
    CHECK(data.censuses[0][1] == Group{"b"});
    CHECK(data.censuses[1][0] == Group{"a"});
}

TEST_CASE("edgelist CSV round trip") {
    Network net(Network::Kind::weighted);
    net.add_edge("a", "b", 2.0);
    net.add_edge("b", "c", 0.5);
    std::string text = write_edgelist_csv(net);
    CHECK(text.substr(0, text.find('\n')) == "u,v,weight");
    Network parsed = parse_edgelist_csv_text(text);
    CHECK(parsed.edges() == net.edges());

    Network binary;
    binary.add_edge("a", "b");
    Network rb = parse_edgelist_csv_text(write_edgelist_csv(binary));
    CHECK(rb.kind() == Network::Kind::binary);
}

TEST_CASE("edgelist parser rejects bad rows") {
    CHECK_THROWS_AS(parse_edgelist_csv_text("u,v\na,b\n"), data_error);
    CHECK_THROWS_AS(parse_edgelist_csv_text("u,v,weight\na,a,1\n"), data_error);
    CHECK_THROWS_AS(parse_edgelist_csv_text("u,v,weight\na,b,0\n"), data_error);
    CHECK_THROWS_AS(parse_edgelist_csv_text("u,v,weight\na,b,x\n"), data_error);
    CHECK_THROWS_AS(parse_edgelist_csv_text("u,v,weight\na,b,1\nb,a,1\n"), data_error);
}

TEST_CASE("table CSV parses the shipped dataset") {
    auto records = parse_table_csv(ASSORTNET_TABLE1_CSV);
    CHECK(records.size() == 88);
    for (const auto& rec : records) {
        CHECK(!rec.name.empty());
        CHECK(rec.size > 0);
        CHECK(rec.assortativity >= -1.0);
        CHECK(rec.assortativity <= 1.0);
    }
}

TEST_CASE("table CSV class derivation") {
    const std::string header = "name,size,type,assortativity,method,source\n";
    auto one = [&](const std::string& row) {
        return parse_table_csv_text(header + row + "\n").at(0);
    };
    CHECK(one("X,10,social,0.1,direct,S").cls == NetworkClass::social_direct);
    CHECK(one("X,10,social,0.1,Direct,S").cls == NetworkClass::social_direct);
    CHECK(one("X,10,social,0.1,group,S").cls == NetworkClass::social_group);
    CHECK(one("X,10,technological,0.1,,S").cls == NetworkClass::nonsocial);
    CHECK_THROWS_AS(one("X,10,social,1.5,direct,S"), data_error);
    CHECK_THROWS_AS(one("X,0,social,0.1,direct,S"), data_error);
}

TEST_CASE("trace, summary and nulls CSV writers") {
    SimulationTrace trace;
    trace.runs = 1;
    trace.censuses = 2;
    trace.assortativity = {{0.5, std::nullopt}};
    trace.edges = {{3, 5}};
    trace.associations_observed = {{4, 9}};
    std::string text = write_trace_csv(trace);
    CHECK(text ==
          "run,census,assortativity,defined,edges,associations_observed\n"
          "1,1,0.5,1,3,4\n"
          "1,2,undefined,0,5,9\n");

    TraceSummary s;
    s.median = {0.25};
    s.q25 = {0.1};
    s.q75 = {0.4};
    s.min = {std::nullopt};
    s.max = {0.5};
    s.n_undefined = {2};
    CHECK(write_summary_csv(s) ==
          "census,median,q25,q75,min,max,n_undefined\n"
          "1,0.25,0.1,0.4,undefined,0.5,2\n");

    CHECK(write_nulls_csv({0.5, std::nullopt}) ==
          "replicate,value\n1,0.5\n2,undefined\n");
}

TEST_CASE("manifest serialization") {
    RunManifest m;
    m.command = "measure";
    m.parameters = {{"measure", "newman"}, {"input", "net.csv"}};
    m.seed = 42;
    m.input_digests = {{"net.csv", fnv1a64_hex("u,v,weight\n")}};
    json j = to_json(m);
    CHECK(j["command"] == "measure");
    CHECK(j["seed"] == 42);
    CHECK(j["version"] == kVersion);
    CHECK(j["parameters"]["measure"] == "newman");
    CHECK(j["inputs"]["net.csv"] == fnv1a64_hex("u,v,weight\n"));
    // parameter order preserved
    auto it = j["parameters"].begin();
    CHECK(it.key() == "measure");
}

TEST_CASE("result JSON uses the explicit undefined marker") {
    AssortativityResult r;
    r.method = AssortMethod::newman;
    r.n_edges = 0;
    json j = to_json(r);
    CHECK(j["value"] == "undefined");
    CHECK(j.contains("note"));
    r.value = 1.0 / 3.0;
    r.n_edges = 7;
    json k = to_json(r);
    CHECK(k["value"].is_number());
    CHECK(k["value"].get<double>() == round15(1.0 / 3.0));
    CHECK(k["n_edges"] == 7);
    CHECK_FALSE(k.contains("note"));
}

TEST_CASE("file round trip and read errors") {
    std::string path = "io_test_tmp.txt";
    write_file(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("definitely/not/here.csv"), data_error);
}
