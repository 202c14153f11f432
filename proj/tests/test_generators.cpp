#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "egonet/ego_records.hpp"
#include "egonet/generators.hpp"
#include "egonet/percolation.hpp"
#include "egonet/solvers.hpp"

using namespace egonet;
using Catch::Approx;

namespace {

double mean_degree(const Graph& g) {
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

}  // namespace

TEST_CASE("clique tiling") {
    auto g = gen_clique_tiling(600, 5.0).graph;
    CHECK(g.edge_count() == 1500);  // 100 cliques, 15 edges each
    for (NodeId u = 0; u < 600; ++u) CHECK(g.degree(u) == 5);
    CHECK(component_sizes(g).front() == 6);

    auto tiny = gen_clique_tiling(4, 1.0).graph;
    CHECK(tiny.edge_count() == 2);
    CHECK(component_sizes(tiny) == std::vector<std::size_t>{2, 2});

    auto mixed = gen_clique_tiling(1000, 2.5).graph;
    CHECK(mean_degree(mixed) == Approx(2.5).margin(0.01));
    CHECK(component_sizes(mixed).front() <= 4);

    CHECK_THROWS_AS(gen_clique_tiling(10, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(gen_clique_tiling(10, 20.0), std::invalid_argument);
}

TEST_CASE("line construction from a mean degree") {
    auto g = gen_line_construction(1000, 1.5).graph;
    CHECK(component_sizes(g).front() == 750);
    CHECK(mean_degree(g) == Approx(1.5).margin(2.0 / 1000.0));

    auto dense = gen_line_construction(1000, 3.0).graph;
    CHECK(component_sizes(dense).front() == 1000);
    CHECK(mean_degree(dense) == Approx(3.0).margin(0.01));
}

TEST_CASE("line construction from a degree distribution") {
    auto path = gen_line_construction(1000, DegreeDistribution::point_mass(2)).graph;
    CHECK(component_sizes(path).front() == 1000);
    CHECK(path.edge_count() == 999);  // a pure path, no chords

    auto d = DegreeDistribution::from_map({{1, 0.2}, {3, 0.8}});
    auto g = gen_line_construction(10'000, d).graph;
    double giant = giant_fraction(g);
    CHECK(giant >= 0.8);
    // degree-1 nodes are pendant: ids [8000, 10000) each with one neighbor
    // inside the path prefix
    for (NodeId u = 8000; u < 10'000; ++u) {
        REQUIRE(g.degree(u) == 1);
        CHECK(g.neighbors(u)[0] < 8000);
    }

    // all mass on degrees <= 1: only isolated pairs, no giant
    auto pairs = gen_line_construction(100, DegreeDistribution::point_mass(1)).graph;
    CHECK(component_sizes(pairs).front() == 2);
}

TEST_CASE("starlike construction") {
    auto g = gen_starlike(10'000, 4.0).graph;
    CHECK(g.degree(0) == 9999);
    CHECK(g.degree(1) == 9999);
    CHECK(g.degree(5000) == 2);
    CHECK(mean_degree(g) == Approx(4.0).margin(0.01));

    auto star = gen_starlike(1000, 1.0).graph;  // no full hub, alpha = 1/2
    auto sizes = component_sizes(star);
    CHECK(sizes.front() == 501);
    CHECK(giant_fraction(star) == Approx(0.5).margin(0.01));

    auto hub = gen_starlike(100, 2.0).graph;
    CHECK(hub.degree(0) == 99);
    CHECK(giant_fraction(hub) == 1.0);
}

TEST_CASE("triangle-cycle tiling realizes degree pair (2,1)") {
    auto g = gen_triangle_cycle_tiling(9).graph;
    CHECK(component_sizes(g) == std::vector<std::size_t>{9});
    for (NodeId u = 0; u < 9; ++u) CHECK(g.degree(u) == 4);

    auto tiled = gen_triangle_cycle_tiling(90).graph;
    auto sizes = component_sizes(tiled);
    CHECK(sizes.size() == 10);
    for (auto s : sizes) CHECK(s == 9);

    CHECK_THROWS_AS(gen_triangle_cycle_tiling(10), std::invalid_argument);
}

TEST_CASE("G(n,m) sampler") {
    CHECK(gen_er_gnm(50, 0, 1).graph.edge_count() == 0);
    auto g = gen_er_gnm(2000, 3000, 17).graph;
    CHECK(g.edge_count() == 3000);
    CHECK_THROWS_AS(gen_er_gnm(10, 100, 1), std::invalid_argument);

    auto sub = gen_er_gnm(100'000, 40'000, 3).graph;  // mu = 0.8, subcritical
    CHECK(giant_fraction(sub) < 0.01);
}

TEST_CASE("configuration model basics") {
    auto matching = gen_configuration(5000, DegreeDistribution::point_mass(1), 5).graph;
    auto sizes = component_sizes(matching);
    CHECK(sizes.front() == 2);
    CHECK(sizes.size() >= 2498);  // a couple of stubs may be lost to erasure

    auto d = DegreeDistribution::from_map({{2, 0.6}, {3, 0.4}});
    auto gen = gen_configuration(100'000, d, 11);
    CHECK(giant_fraction(gen.graph) == Approx(solve_config_giant(d)).margin(0.01));
    CHECK(static_cast<double>(gen.report.erased_edges) /
              static_cast<double>(gen.graph.edge_count() + gen.report.erased_edges) <
          0.005);

    auto pois = gen_configuration(100'000, poisson_distribution(2.0), 12);
    CHECK(giant_fraction(pois.graph) == Approx(solve_er_giant(2.0)).margin(0.01));
}

TEST_CASE("configuration model degree audit") {
    auto d = DegreeDistribution::from_map({{0, 0.1}, {1, 0.2}, {2, 0.3}, {5, 0.4}});
    double tv = 0.0;
    for (std::uint64_t seed : {21u, 22u, 23u})
        tv += degree_tv_distance(gen_configuration(100'000, d, seed).graph, d);
    CHECK(tv / 3.0 < 0.01);
}

TEST_CASE("random generators are deterministic in the seed") {
    auto d = DegreeDistribution::from_map({{1, 0.3}, {2, 0.3}, {4, 0.4}});
    CHECK(gen_configuration(2000, d, 77).graph.edges() ==
          gen_configuration(2000, d, 77).graph.edges());
    CHECK(gen_er_gnm(2000, 2500, 77).graph.edges() == gen_er_gnm(2000, 2500, 77).graph.edges());
    CHECK(gen_two_class_correlated(2000, 0.6, 0.4, 0.3, 77).graph.edges() ==
          gen_two_class_correlated(2000, 0.6, 0.4, 0.3, 77).graph.edges());
    auto j = JointDegreeDistribution::from_map({{{0, 1}, 0.5}, {{2, 1}, 0.5}});
    CHECK(gen_clustered(2000, j, false, 77).graph.edges() ==
          gen_clustered(2000, j, false, 77).graph.edges());
    CHECK(gen_configuration(2000, d, 77).graph.edges() !=
          gen_configuration(2000, d, 78).graph.edges());
}

TEST_CASE("two-class stub matching respects the assortativity parameter") {
    // r = 1: the two degree classes stay disconnected
    auto assort = gen_two_class_correlated(60'000, 0.6, 0.4, 1.0, 41).graph;
    const NodeId split = 36'000;  // ids below this have degree 2
    assort.for_each_edge([&](NodeId u, NodeId v) {
        CHECK((u < split) == (v < split));
    });

    // r = 0: almost no same-class edges (pool imbalance leaves a few)
    auto disassort = gen_two_class_correlated(100'000, 0.6, 0.4, 0.0, 42).graph;
    std::size_t same = 0, total = 0;
    const NodeId split2 = 60'000;
    disassort.for_each_edge([&](NodeId u, NodeId v) {
        ++total;
        if ((u < split2) == (v < split2)) ++same;
    });
    CHECK(static_cast<double>(same) / static_cast<double>(total) < 0.01);

    // percolation-free cross-check at r = 1/2
    auto g = gen_two_class_correlated(100'000, 0.6, 0.4, 0.5, 43).graph;
    CHECK(giant_fraction(g) == Approx(outbreak_size_two_class(0.5, 1.0)).margin(0.01));
}

TEST_CASE("clustered generator: isolated triangles") {
    auto j = JointDegreeDistribution::from_map({{{0, 1}, 1.0}});
    auto g = gen_clustered(999, j, false, 7).graph;
    for (auto s : component_sizes(g)) CHECK(s <= 3);
    CHECK(component_sizes(g).front() == 3);
}

TEST_CASE("clustered generator joint-degree audit") {
    auto j = JointDegreeDistribution::from_map(
        {{{0, 1}, 0.3}, {{2, 1}, 0.4}, {{1, 0}, 0.1}, {{3, 2}, 0.2}});
    auto gen = gen_clustered(100'000, j, false, 808);
    CHECK(static_cast<double>(gen.report.erased_edges) /
              static_cast<double>(gen.graph.edge_count() + gen.report.erased_edges) <
          0.005);
    auto records = ego_records_from_graph(gen.graph, true);
    auto res = ingest_alter_connections(records, true);
    // triangle erasures and overlaps cause a small deficit only
    CHECK(res.skipped < 100);
    double tv = 0.0;
    auto emp = res.distribution;
    std::set<std::pair<int, int>> keys;
    for (const auto& e : emp.entries()) keys.insert({e.k1, e.kdelta});
    for (const auto& e : j.entries()) keys.insert({e.k1, e.kdelta});
    auto mass = [](const JointDegreeDistribution& dist, int k1, int kd) {
        for (const auto& e : dist.entries())
            if (e.k1 == k1 && e.kdelta == kd) return e.p;
        return 0.0;
    };
    for (auto [k1, kd] : keys) tv += std::abs(mass(emp, k1, kd) - mass(j, k1, kd));
    CHECK(tv / 2.0 < 0.02);
}

TEST_CASE("clustered generator: uniform class realizes its degree pair") {
    auto j = JointDegreeDistribution::from_map({{{2, 1}, 1.0}});
    auto gen = gen_clustered(9000, j, false, 31);
    std::size_t with_target_degree = 0;
    for (NodeId u = 0; u < 9000; ++u)
        if (gen.graph.degree(u) == 4) ++with_target_degree;
    CHECK(static_cast<double>(with_target_degree) / 9000.0 > 0.995);
}

TEST_CASE("clustered generator assortative mode") {
    auto j = JointDegreeDistribution::from_map({{{0, 1}, 0.5}, {{2, 1}, 0.5}});
    auto gen = gen_clustered(30'000, j, true, 99);
    // (0,1) nodes only ever sit in triangles of (0,1) nodes: their
    // components are exactly triangles
    std::size_t singles = 0;
    for (NodeId u = 0; u < gen.graph.node_count(); ++u)
        if (gen.graph.degree(u) == 2) ++singles;
    CHECK(singles > 13'000);  // about half the population

    // a class with triangle stubs but fewer than 3 members cannot form a triple
    auto lone = JointDegreeDistribution::from_map({{{0, 1}, 1.0}});
    CHECK_THROWS_AS(gen_clustered(2, lone, true, 1), std::invalid_argument);
}

TEST_CASE("generated graphs are simple and symmetric") {
    auto d = DegreeDistribution::from_map({{2, 0.5}, {3, 0.5}});
    auto g = gen_configuration(3000, d, 4).graph;
    g.for_each_edge([&](NodeId u, NodeId v) {
        CHECK(u != v);
        CHECK(g.has_edge(v, u));
    });
    // neighbor lists deduplicated
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto nb = g.neighbors(u);
        for (std::size_t i = 1; i < nb.size(); ++i) CHECK(nb[i - 1] < nb[i]);
    }
}
