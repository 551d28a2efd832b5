#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "assortnet/measures.hpp"
#include "assortnet/network.hpp"
#include "oracle.hpp"

using namespace assortnet;

namespace {

Network kite() {
    // degrees: A=1, B=3, C=2, D=2
    Network net;
    net.add_edge("A", "B");
    net.add_edge("B", "C");
    net.add_edge("C", "D");
    net.add_edge("D", "B");
    return net;
}

Network star(int leaves) {
    Network net;
    for (int i = 0; i < leaves; ++i) net.add_edge("hub", "x" + std::to_string(i));
    return net;
}

Network cycle(int n) {
    Network net;
    for (int i = 0; i < n; ++i)
        net.add_edge("c" + std::to_string(i), "c" + std::to_string((i + 1) % n));
    return net;
}

constexpr double kTol = 1e-12;

}  // namespace

TEST_CASE("newman on frozen small graphs") {
    auto r = newman_assortativity(kite());
    REQUIRE(r.value.has_value());
    CHECK(*r.value == doctest::Approx(-5.0 / 7.0).epsilon(kTol));
    CHECK(r.n_edges == 4);

    auto s = newman_assortativity(star(5));
    REQUIRE(s.value.has_value());
    CHECK(*s.value == doctest::Approx(-1.0).epsilon(kTol));
}

TEST_CASE("newman undefined on regular and empty graphs") {
    CHECK_FALSE(newman_assortativity(cycle(6)).value.has_value());

    Network single;  // one edge: both endpoints degree 1
    single.add_edge("A", "B");
    CHECK_FALSE(newman_assortativity(single).value.has_value());

    Network empty;
    empty.add_node("A");
    auto r = newman_assortativity(empty);
    CHECK_FALSE(r.value.has_value());
    CHECK(r.n_edges == 0);
}

TEST_CASE("spearman on frozen small graphs") {
    auto r = spearman_assortativity(kite());
    REQUIRE(r.value.has_value());
    CHECK(*r.value == doctest::Approx(-51.0 / 70.0).epsilon(kTol));
    CHECK(r.method == AssortMethod::spearman);

    CHECK_FALSE(spearman_assortativity(cycle(5)).value.has_value());
    auto s = spearman_assortativity(star(4));
    REQUIRE(s.value.has_value());
    CHECK(*s.value == doctest::Approx(-1.0).epsilon(kTol));
}

TEST_CASE("both measures match the big-integer oracle on random graphs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        Network net = oracle::random_graph(rng);
        auto g = oracle::from_network(net);

        auto rn = newman_assortativity(net);
        auto on = oracle::newman(g);
        REQUIRE(rn.value.has_value() == on.has_value());
        if (on) CHECK(*rn.value == doctest::Approx(*on).epsilon(kTol));

        auto rs = spearman_assortativity(net);
        auto os = oracle::spearman(g);
        REQUIRE(rs.value.has_value() == os.has_value());
        if (os) CHECK(*rs.value == doctest::Approx(*os).epsilon(kTol));
    }
}

TEST_CASE("spearman equals newman when the endpoint rank map is affine") {
    // With at most two distinct endpoint degree values, average ranks are an
    // affine function of degree, so the two correlations coincide exactly.
    std::mt19937_64 rng(313);
    int found = 0;
    for (int trial = 0; trial < 5000 && found < 50; ++trial) {
        Network net = oracle::random_graph(rng, 8);
        std::set<std::size_t> degs;
        for (const auto& v : net.nodes())
            if (net.degree(v) > 0) degs.insert(net.degree(v));
        if (degs.size() != 2) continue;
        auto rn = newman_assortativity(net);
        auto rs = spearman_assortativity(net);
        REQUIRE(rn.value.has_value() == rs.value.has_value());
        if (rn.value) {
            CHECK(*rs.value == doctest::Approx(*rn.value).epsilon(kTol));
            ++found;
        }
    }
    CHECK(found == 50);
}

TEST_CASE("assortativity bounded in [-1, 1]") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        Network net = oracle::random_graph(rng);
        for (auto m : {AssortMethod::newman, AssortMethod::spearman}) {
            auto r = assortativity_from_pairs(edge_degree_pairs(net).pairs, m);
            if (r.value) {
                CHECK(*r.value >= -1.0 - kTol);
                CHECK(*r.value <= 1.0 + kTol);
            }
        }
    }
}

TEST_CASE("knn curve on the kite") {
    auto curve = knn_curve(kite());
    REQUIRE(curve.per_node.size() == 4);
    CHECK(curve.per_node.at("A") == doctest::Approx(3.0).epsilon(kTol));
    CHECK(curve.per_node.at("B") == doctest::Approx(5.0 / 3.0).epsilon(kTol));
    CHECK(curve.per_node.at("C") == doctest::Approx(5.0 / 2.0).epsilon(kTol));
    CHECK(curve.per_node.at("D") == doctest::Approx(5.0 / 2.0).epsilon(kTol));
    REQUIRE(curve.per_degree.size() == 3);
    CHECK(curve.per_degree.at(1) == doctest::Approx(3.0).epsilon(kTol));
    CHECK(curve.per_degree.at(2) == doctest::Approx(2.5).epsilon(kTol));
    CHECK(curve.per_degree.at(3) == doctest::Approx(5.0 / 3.0).epsilon(kTol));
    REQUIRE(curve.slope.has_value());
    CHECK(*curve.slope < 0.0);
    CHECK(curve.trend == MixingTrend::disassortative);
}

TEST_CASE("knn curve edge cases") {
    auto reg = knn_curve(cycle(5));
    CHECK(reg.per_degree.size() == 1);
    CHECK_FALSE(reg.slope.has_value());
    CHECK(reg.trend == MixingTrend::neutral_or_undefined);

    Network with_isolate = kite();
    with_isolate.add_node("Z");
    auto curve = knn_curve(with_isolate);
    CHECK(curve.per_node.count("Z") == 0);  // isolated nodes skipped

    auto st = knn_curve(star(6));
    CHECK(st.trend == MixingTrend::disassortative);
}

TEST_CASE("rich club on the kite and against the oracle") {
    auto curve = rich_club(kite());
    // max degree 3 -> k in {0, 1, 2}
    REQUIRE(curve.per_k.size() == 3);
    REQUIRE(curve.per_k.at(0).has_value());
    CHECK(*curve.per_k.at(0) == doctest::Approx(2.0 / 3.0).epsilon(kTol));
    REQUIRE(curve.per_k.at(1).has_value());
    CHECK(*curve.per_k.at(1) == doctest::Approx(1.0).epsilon(kTol));
    CHECK_FALSE(curve.per_k.at(2).has_value());  // only B has degree > 2

    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        Network net = oracle::random_graph(rng);
        auto g = oracle::from_network(net);
        auto rc = rich_club(net);
        for (const auto& [k, phi] : rc.per_k) {
            auto expect = oracle::rich_club_phi(g, k);
            REQUIRE(phi.has_value() == expect.has_value());
            if (expect) CHECK(*phi == doctest::Approx(*expect).epsilon(kTol));
        }
    }
}

TEST_CASE("local degree difference") {
    Network net = kite();
    net.add_node("Z");
    auto b = local_degree_difference(net, "B");
    REQUIRE(b.has_value());
    CHECK(*b == doctest::Approx(4.0 / 3.0).epsilon(kTol));
    auto a = local_degree_difference(net, "A");
    REQUIRE(a.has_value());
    CHECK(*a == doctest::Approx(2.0).epsilon(kTol));
    CHECK_FALSE(local_degree_difference(net, "Z").has_value());
    CHECK_THROWS_AS(local_degree_difference(net, "nope"), data_error);
}

TEST_CASE("method name round trips") {
    CHECK(to_string(AssortMethod::newman) == "newman");
    CHECK(to_string(AssortMethod::spearman) == "spearman");
    CHECK(assort_method_from_string("newman") == AssortMethod::newman);
    CHECK(assort_method_from_string("spearman") == AssortMethod::spearman);
    CHECK_THROWS_AS(assort_method_from_string("pearson"), data_error);
}
