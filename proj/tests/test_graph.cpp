#include <gtest/gtest.h>

#include <random>

#include "bglink/bglink.hpp"
#include "oracles.hpp"

using namespace bglink;

namespace {

BipartiteGraph subgraph(int p, int q, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int k = 0; k < p * q; ++k)
        if (mask >> k & 1)
            edges.push_back({k % p, k / p});
    return {p, q, edges};
}

BipartiteGraph random_subgraph(int p, int q, std::mt19937& rng, double keep = 0.6) {
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> edges;
    for (int l = 0; l < q; ++l)
        for (int u = 0; u < p; ++u)
            if (coin(rng))
                edges.push_back({u, l});
    return {p, q, edges};
}

}  // namespace

TEST(Graph, ConstructorSortsLowerMajor) {
    BipartiteGraph g(2, 2, {{1, 1}, {0, 1}, {1, 0}});
    ASSERT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.edges()[0], (Edge{1, 0}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[2], (Edge{1, 1}));
}

TEST(Graph, ConstructorRejectsBadEdges) {
    EXPECT_THROW(BipartiteGraph(2, 2, {{0, 0}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(BipartiteGraph(2, 2, {{2, 0}}), std::invalid_argument);
    EXPECT_THROW(BipartiteGraph(2, 2, {{0, -1}}), std::invalid_argument);
    EXPECT_THROW(BipartiteGraph(0, 2, {}), std::invalid_argument);
    EXPECT_NO_THROW(BipartiteGraph(0, 0, {}));
}

TEST(Graph, CompleteGraph) {
    const BipartiteGraph g = complete_graph(3, 4);
    EXPECT_EQ(g.edge_count(), 12);
    EXPECT_EQ(euler_characteristic(g), -5);
    EXPECT_EQ(complete_graph(1, 1).edge_count(), 1);
    EXPECT_EQ(complete_graph(2, 3).edge_count(), 6);
    EXPECT_TRUE(is_reduced(g));
    EXPECT_THROW(complete_graph(0, 3), std::invalid_argument);
}

TEST(Graph, ForksOfCompleteGraph) {
    const auto forks = forks_of(complete_graph(3, 4), Side::lower);
    ASSERT_EQ(forks.size(), 4u);
    for (int l = 0; l < 4; ++l) {
        EXPECT_EQ(forks[static_cast<std::size_t>(l)].apex, l);
        EXPECT_EQ(forks[static_cast<std::size_t>(l)].teeth, (std::vector<int>{0, 1, 2}));
    }
    EXPECT_EQ(forks_of(complete_graph(3, 4), Side::upper).size(), 3u);
}

TEST(Graph, ForksOfTwistedTorusGraph) {
    const auto forks = forks_of(twisted_torus_graph(Partition({4, 4, 3, 2, 2})), Side::lower);
    std::vector<std::size_t> sizes;
    for (const Fork& f : forks)
        sizes.push_back(f.teeth.size());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{4, 4, 3, 2, 2}));
}

TEST(Graph, ForksOfSingleEdge) {
    const auto forks = forks_of(complete_graph(1, 1), Side::lower);
    ASSERT_EQ(forks.size(), 1u);
    EXPECT_EQ(forks[0].teeth, (std::vector<int>{0}));
}

TEST(Graph, TwistedTorusGraph) {
    const BipartiteGraph g = twisted_torus_graph(Partition({4, 4, 3, 2, 2}));
    EXPECT_EQ(g.p(), 4);
    EXPECT_EQ(g.q(), 5);
    EXPECT_EQ(g.edge_count(), 15);
    EXPECT_EQ(twisted_torus_graph(Partition({3, 3, 3, 3})), complete_graph(3, 4));
    const BipartiteGraph fork = twisted_torus_graph(Partition({3}));
    EXPECT_EQ(euler_characteristic(fork), 1);
    EXPECT_EQ(fingerprint(fork), unknot_fingerprint());
}

TEST(Graph, PartitionValidation) {
    EXPECT_THROW(Partition({}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(Partition({4, 4, 3, 2, 2}).cells(), 15);
}

TEST(Graph, DualPartitionExamples) {
    EXPECT_EQ(dual_partition(Partition({4, 4, 3, 2, 2})).parts(), (std::vector<int>{5, 5, 3, 2}));
    EXPECT_EQ(dual_partition(Partition({6})).parts(), (std::vector<int>(6, 1)));
    const Partition a({5, 3, 3, 1});
    EXPECT_EQ(dual_partition(dual_partition(a)), a);
}

TEST(Graph, DualPartitionIsAnInvolutionExhaustively) {
    // every weakly decreasing sequence with parts <= 12 and length <= 12
    std::size_t checked = 0;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int max_part) {
        if (!cur.empty()) {
            const Partition a(cur);
            const Partition d = dual_partition(a);
            ASSERT_EQ(d.parts(), oracle::conjugate(cur));
            ASSERT_EQ(dual_partition(d), a);
            ++checked;
        }
        if (cur.size() == 12)
            return;
        for (int x = 1; x <= max_part; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(12);
    EXPECT_EQ(checked, 2704155u);  // C(24,12) - 1 nonempty diagrams in a 12 x 12 box
}

TEST(Graph, TransposeAndReverse) {
    EXPECT_EQ(transpose_graph(complete_graph(3, 4)), complete_graph(4, 3));
    const BipartiteGraph g(3, 2, {{0, 0}, {2, 1}});
    EXPECT_EQ(reverse_lines(g), BipartiteGraph(3, 2, {{2, 1}, {0, 0}}));
    EXPECT_EQ(transpose_graph(transpose_graph(g)), g);
    EXPECT_EQ(reverse_lines(reverse_lines(g)), g);
}

TEST(Graph, TransposeOfTwistedTorusGraphIsTheDualGraph) {
    const Partition a({4, 4, 3, 2, 2});
    const BipartiteGraph t = transpose_graph(twisted_torus_graph(a));
    std::vector<std::size_t> sizes;
    for (const Fork& f : forks_of(t, Side::lower))
        sizes.push_back(f.teeth.size());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{5, 5, 3, 2}));
    EXPECT_EQ(t, twisted_torus_graph(dual_partition(a)));
}

TEST(Graph, CanonicalCode) {
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        const BipartiteGraph g = random_subgraph(4, 5, rng);
        const std::string c = canonical_code(g);
        EXPECT_EQ(c, canonical_code(transpose_graph(g)));
        EXPECT_EQ(c, canonical_code(reverse_lines(g)));
        EXPECT_EQ(c, canonical_code(transpose_graph(reverse_lines(g))));
    }
    const BipartiteGraph t = complete_graph(2, 3);
    EXPECT_NE(canonical_code(t), canonical_code(cut_edge(t, 0, 0)));
}

TEST(Graph, Reduce) {
    std::vector<Edge> edges = complete_graph(3, 4).edges();
    edges.push_back({0, 4});
    const ReduceResult r = reduce(BipartiteGraph(3, 5, edges));
    EXPECT_EQ(r.graph, complete_graph(3, 4));
    EXPECT_EQ(r.unknots, 0);

    const ReduceResult one = reduce(complete_graph(1, 1));
    EXPECT_TRUE(one.graph.empty());
    EXPECT_EQ(one.unknots, 1);

    const ReduceResult two = reduce(BipartiteGraph(2, 2, {{0, 0}, {1, 1}}));
    EXPECT_TRUE(two.graph.empty());
    EXPECT_EQ(two.unknots, 2);

    // a tree collapses to one disk
    const ReduceResult tree = reduce(BipartiteGraph(2, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}}));
    EXPECT_TRUE(tree.graph.empty());
    EXPECT_EQ(tree.unknots, 1);
}

TEST(Graph, ReduceKeepsEulerCharacteristic) {
    std::mt19937 rng(11);
    for (int k = 0; k < 300; ++k) {
        const BipartiteGraph g = random_subgraph(4, 4, rng, 0.45);
        if (g.empty())
            continue;
        const ReduceResult r = reduce(g);
        const int rest = r.graph.empty() ? 0 : euler_characteristic(r.graph);
        EXPECT_EQ(euler_characteristic(g), rest + r.unknots);
        EXPECT_TRUE(r.graph.empty() || is_reduced(r.graph));
    }
}

TEST(Graph, EulerCharacteristic) {
    EXPECT_EQ(euler_characteristic(complete_graph(3, 4)), -5);
    EXPECT_EQ(euler_characteristic(complete_graph(4, 5)), -11);
    EXPECT_EQ((1 - euler_characteristic(complete_graph(4, 5))) / 2, 6);
    EXPECT_EQ(euler_characteristic(complete_graph(1, 1)), 1);
    EXPECT_THROW(euler_characteristic(BipartiteGraph()), std::invalid_argument);
}

TEST(Graph, Density) {
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q)
            EXPECT_EQ(density(complete_graph(p, q)), Rational(1));
    EXPECT_EQ(density(twisted_torus_graph(Partition({4, 4, 3, 2, 2}))), Rational(3, 4));
    const BipartiteGraph g(3, 4, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(density(g), Rational(2, 3));
    EXPECT_THROW(density(BipartiteGraph()), std::invalid_argument);
}

TEST(Graph, DensityUpperBound) {
    EXPECT_EQ(density_upper_bound(2, -1), Rational(5, 4));
    EXPECT_EQ(density_upper_bound(3, -1), Rational(7, 9));
    EXPECT_EQ(density_upper_bound(1, 1), Rational(1));
    EXPECT_THROW(density_upper_bound(0, 1), std::invalid_argument);
    for (int p = 2; p <= 6; ++p)
        for (int q = p; q <= 6; ++q) {
            const Rational bound = density_upper_bound(p, p + q - p * q);
            EXPECT_LE(density(complete_graph(p, q)), bound);
            EXPECT_EQ(bound == Rational(1), p == q);
        }
}

TEST(Graph, PositiveComplete) {
    EXPECT_TRUE(is_positive_complete(complete_graph(3, 4)));
    for (const auto& parts : std::vector<std::vector<int>>{{4, 4, 3, 2, 2}, {5, 5, 3, 2}, {3, 1}, {6, 2, 2, 1}})
        EXPECT_TRUE(is_positive_complete(twisted_torus_graph(Partition(parts))));
    EXPECT_FALSE(is_positive_complete(cut_edge(complete_graph(3, 1), 1, 0)));
}

TEST(Graph, CompleteSubgraphExamples) {
    const BipartiteGraph t36 = complete_graph(3, 6);
    EXPECT_TRUE(contains_complete_subgraph(t36, 3, 6));
    EXPECT_FALSE(contains_complete_subgraph(complete_graph(3, 4), 3, 6));
    const BipartiteGraph minus = cut_edge(t36, 1, 2);
    EXPECT_FALSE(contains_complete_subgraph(minus, 3, 6));
    const auto w = find_complete_subgraph(minus, 3, 5);
    ASSERT_TRUE(w.has_value());
    for (int u : w->upper)
        for (int l : w->lower)
            EXPECT_TRUE(minus.has_edge(u, l));
    EXPECT_EQ(w->lower.size(), 5u);
}

TEST(Graph, CompleteSubgraphMatchesBruteForceOnTheta34) {
    for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
        const BipartiteGraph g = subgraph(3, 4, mask);
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 4; ++b)
                ASSERT_EQ(contains_complete_subgraph(g, a, b), oracle::has_biclique(g, a, b))
                    << "mask " << mask << " a " << a << " b " << b;
    }
}

TEST(Graph, DeleteEdge) {
    const ReduceResult r = delete_edge(complete_graph(1, 1), 0, 0);
    EXPECT_TRUE(r.graph.empty());
    EXPECT_EQ(r.unknots, 0);
    EXPECT_THROW(cut_edge(complete_graph(2, 2), 0, 5), std::invalid_argument);
    EXPECT_THROW(delete_edge(cut_edge(complete_graph(2, 2), 0, 0), 0, 0), std::invalid_argument);
}

TEST(Graph, EveryCutAndSplitRaisesChiByOne) {
    std::mt19937 rng(3);
    for (int k = 0; k < 60; ++k) {
        const BipartiteGraph g = reduce(random_subgraph(3 + k % 3, 3 + k % 4, rng, 0.7)).graph;
        if (g.empty())
            continue;
        const int chi = euler_characteristic(g);
        for (const Edge& e : g.edges()) {
            // g is reduced, so both ends keep another edge
            EXPECT_EQ(euler_characteristic(cut_edge(g, e.u, e.l)), chi + 1);
        }
        for (const SplitMove& m : splitting_moves(g)) {
            const BipartiteGraph s = split_fork(g, m);
            EXPECT_EQ(euler_characteristic(s), chi + 1);
            EXPECT_EQ(s.edge_count(), g.edge_count());
        }
    }
}

TEST(Graph, SplitFork) {
    const BipartiteGraph g = complete_graph(2, 2);
    const BipartiteGraph s = split_fork(g, {Side::lower, 0, 1, ChildOrder::before});
    EXPECT_EQ(s, BipartiteGraph(2, 3, {{0, 0}, {1, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(euler_characteristic(s), euler_characteristic(g) + 1);
    const BipartiteGraph t = split_fork(g, {Side::lower, 0, 1, ChildOrder::after});
    EXPECT_EQ(t, BipartiteGraph(2, 3, {{1, 0}, {0, 1}, {0, 2}, {1, 2}}));
    // θ_{2,2} is the Hopf link; one split leaves a twisted band, an unknot
    EXPECT_EQ(fingerprint(s), unknot_fingerprint());
    EXPECT_EQ(fingerprint(t), unknot_fingerprint());

    const BipartiteGraph u = split_fork(complete_graph(3, 4), {Side::upper, 1, 2, ChildOrder::before});
    EXPECT_EQ(u.p(), 4);
    EXPECT_EQ(u, transpose_graph(split_fork(complete_graph(4, 3), {Side::lower, 1, 2, ChildOrder::before})));

    EXPECT_THROW(split_fork(g, {Side::lower, 0, 2, ChildOrder::before}), std::invalid_argument);
    EXPECT_THROW(split_fork(g, {Side::lower, 5, 1, ChildOrder::before}), std::invalid_argument);
    EXPECT_THROW(split_fork(complete_graph(1, 2), {Side::lower, 0, 1, ChildOrder::before}), std::invalid_argument);
}

TEST(Graph, ConnectedComponents) {
    EXPECT_EQ(connected_components(complete_graph(3, 4)).size(), 1u);
    EXPECT_TRUE(connected_components(BipartiteGraph()).empty());

    std::vector<Edge> edges;
    for (int u = 0; u < 2; ++u)
        for (int l = 0; l < 3; ++l) {
            edges.push_back({u, l});
            edges.push_back({u + 2, l + 3});
        }
    const BipartiteGraph two(4, 6, edges);
    const auto parts = connected_components(two);
    ASSERT_EQ(parts.size(), 2u);
    const Fingerprint trefoil = fingerprint(complete_graph(2, 3));
    for (const BipartiteGraph& c : parts) {
        EXPECT_EQ(c, complete_graph(2, 3));
        EXPECT_EQ(fingerprint(c), trefoil);
    }
}

TEST(Graph, LineCutsAndSplitPieces) {
    std::vector<Edge> edges;
    for (int u = 0; u < 2; ++u)
        for (int l = 0; l < 3; ++l) {
            edges.push_back({u, l});
            edges.push_back({u + 2, l + 3});
        }
    const BipartiteGraph two(4, 6, edges);
    EXPECT_EQ(line_cuts(two, Side::upper), (std::vector<int>{2}));
    EXPECT_EQ(line_cuts(two, Side::lower), (std::vector<int>{3}));
    EXPECT_EQ(split_pieces(two).size(), 2u);

    // two Hopf bands whose vertices interleave on both lines: no cut
    const BipartiteGraph woven(4, 4, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}, {3, 1}, {1, 3}, {3, 3}});
    EXPECT_EQ(connected_components(woven).size(), 2u);
    EXPECT_TRUE(line_cuts(woven, Side::upper).empty());
    EXPECT_TRUE(line_cuts(woven, Side::lower).empty());
    EXPECT_EQ(split_pieces(woven).size(), 1u);
}
