#include <doctest.h>

#include "advgap/analysis.hpp"
#include "advgap/constructions.hpp"
#include "advgap/errors.hpp"
#include "oracles.hpp"

using namespace advgap;

namespace {

const NormSpec kL2 = NormSpec::p_norm(Rational(2));
const NormSpec kLinf = NormSpec::infinity();

Graph complement_c7() {
    Graph c7(7);
    for (int v = 0; v < 7; ++v) c7.add_edge(v, (v + 1) % 7);
    return c7.complement();
}

/// Is `cycle` an induced chordless cycle of g (in the listed order)?
bool is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool ring = (j - i == 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != ring) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("five-cycle hole is found verbatim") {
    const auto hole = find_odd_hole(named_graph("c5"), 5);
    REQUIRE(hole.has_value());
    CHECK(*hole == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("bipartite graphs have no odd holes at all") {
    CHECK_FALSE(find_odd_hole(named_graph("path6"), 13).has_value());
    CHECK_FALSE(find_odd_hole(named_graph("c6"), 13).has_value());
    Graph k33(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
    CHECK_FALSE(find_odd_hole(k33, 13).has_value());
}

TEST_CASE("the complement of the 7-cycle has no odd hole itself") {
    CHECK_FALSE(find_odd_hole(complement_c7(), 7).has_value());
    CHECK_FALSE(oracle::has_odd_hole_brute(complement_c7()));
}

TEST_CASE("hole search matches brute force on random graphs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = random_graph(8, 0.25 + 0.05 * (seed % 7), seed);
        const auto hole = find_odd_hole(g, 7);  // 8 vertices: odd lengths 5, 7
        CHECK(hole.has_value() == oracle::has_odd_hole_brute(g));
        if (hole) CHECK(is_induced_cycle(g, *hole));
    }
}

TEST_CASE("perfectness: triangle plus pendant is certified perfect") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    const auto rep = check_perfect(g, 5);
    CHECK(rep.status == PerfectStatus::Perfect);
}

TEST_CASE("perfectness: the 5-cycle is the minimal odd hole") {
    const auto rep = check_perfect(named_graph("c5"), 5);
    REQUIRE(rep.status == PerfectStatus::NotPerfect);
    REQUIRE(rep.witness.has_value());
    CHECK_FALSE(rep.witness->anti);
    CHECK(rep.witness->cycle == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("perfectness: complement of the 7-cycle via an anti-hole") {
    const auto rep = check_perfect(complement_c7(), 7);
    REQUIRE(rep.status == PerfectStatus::NotPerfect);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->anti);
    CHECK(rep.witness->cycle.size() == 7);
    // the witness is an induced odd cycle of the complement
    CHECK(is_induced_cycle(complement_c7().complement(), rep.witness->cycle));
}

TEST_CASE("short caps yield Inconclusive, exhaustive settles it") {
    const Graph c11 = named_graph("c11");
    const auto capped = check_perfect(c11, 9);
    CHECK(capped.status == PerfectStatus::Inconclusive);
    const auto full = check_perfect(c11, 11);
    REQUIRE(full.status == PerfectStatus::NotPerfect);
    CHECK(full.witness->cycle.size() == 11);
}

TEST_CASE("concurrent hole searches agree with the sequential path") {
    setenv("ADVGAP_THREADS", "2", 1);
    const auto par = check_perfect(complement_c7(), 7);
    unsetenv("ADVGAP_THREADS");
    const auto seq = check_perfect(complement_c7(), 7);
    CHECK(par.status == seq.status);
    REQUIRE((par.witness && seq.witness));
    CHECK(par.witness->anti == seq.witness->anti);
    CHECK(par.witness->cycle == seq.witness->cycle);
}

TEST_CASE("conformality: canonical basis misses its top clique") {
    const auto dist = canonical_basis_distribution(3);
    const Rational eps = canonical_basis_default_eps();
    const auto h = build_conflict_hypergraph(dist, eps, kL2);
    const auto c = build_clique_hypergraph(build_conflict_graph(dist, eps, kL2));
    const auto rep = check_conformal(h, c);
    CHECK_FALSE(rep.conformal);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("conformality holds for max-norm data and triangle-free data") {
    for (std::uint64_t seed = 5; seed < 11; ++seed) {
        const auto ds =
            oracle::random_point_dataset(seed, 7, 2, 3, kLinf, Rational(3, 4));
        const auto h = build_conflict_hypergraph(ds.dist, ds.epsilon, ds.norm);
        const auto c = build_clique_hypergraph(
            build_conflict_graph(ds.dist, ds.epsilon, ds.norm));
        CHECK(check_conformal(h, c).conformal);
    }
    const Graph g = random_graph(10, 0.3, 77, /*triangle_free=*/true);
    const Dataset ds = graph_to_distribution(g, Rational(1, 2), kL2);
    const auto h = build_conflict_hypergraph(ds.dist, ds.epsilon, ds.norm);
    const auto c = build_clique_hypergraph(
        build_conflict_graph(ds.dist, ds.epsilon, ds.norm));
    CHECK(check_conformal(h, c).conformal);
}

TEST_CASE("gap decomposition on the basis: all gap from non-conformality") {
    const auto rep = decompose_gap(canonical_basis_distribution(3),
                                   canonical_basis_default_eps(), kL2);
    CHECK(rep.gap == Rational(1, 6));
    CHECK(rep.term_conformal == Rational(1, 6));
    CHECK(rep.term_perfect == 0);
    CHECK_FALSE(rep.conformal.conformal);
    CHECK(rep.perfect.status == PerfectStatus::Perfect);
    CHECK(rep.fp_hypergraph == Rational(1, 2));
    CHECK(rep.fp_cliques == Rational(1, 3));
    CHECK(rep.ip == Rational(1, 3));
}

TEST_CASE("gap decomposition on the pentagon: all gap from imperfection") {
    const Dataset ds = example_dataset("pentagon");
    const auto rep = decompose_gap(ds.dist, ds.epsilon, ds.norm);
    CHECK(rep.gap == Rational(1, 10));
    CHECK(rep.term_conformal == 0);
    CHECK(rep.term_perfect == Rational(1, 10));
    CHECK(rep.conformal.conformal);
    CHECK(rep.perfect.status == PerfectStatus::NotPerfect);
}

TEST_CASE("conflict-free data: the all-zero report") {
    std::vector<LabeledPoint> pts(2);
    pts[0].coords = {Rational(0)};
    pts[1].coords = {Rational(100)};
    pts[0].label = 1;
    pts[1].label = 2;
    const auto rep = decompose_gap(DiscreteDistribution::uniform(std::move(pts)),
                                   Rational(1), kL2);
    CHECK(rep.gap == 0);
    CHECK(rep.term_conformal == 0);
    CHECK(rep.term_perfect == 0);
    CHECK(rep.fp_hypergraph == 1);
    CHECK(rep.ip == 1);
    CHECK(rep.conformal.conformal);
    CHECK(rep.perfect.status == PerfectStatus::Perfect);
}

TEST_CASE("contrapositive: conformal and perfect forces zero gap") {
    for (std::uint64_t seed = 100; seed < 124; ++seed) {
        const auto ds = oracle::random_point_dataset(
            seed, 7, 2, 3, seed % 2 ? kL2 : kLinf, Rational(1, 2));
        AnalysisOptions opts;
        opts.exhaustive = true;
        const auto rep = decompose_gap(ds.dist, ds.epsilon, ds.norm, opts);
        CHECK(rep.gap == rep.term_conformal + rep.term_perfect);
        CHECK(rep.term_conformal >= 0);
        CHECK(rep.term_perfect >= 0);
        if (rep.conformal.conformal && rep.perfect.status == PerfectStatus::Perfect)
            CHECK(rep.gap == 0);
        if (rep.gap > 0)
            CHECK((!rep.conformal.conformal ||
                   rep.perfect.status == PerfectStatus::NotPerfect));
    }
}

}  // TEST_SUITE
