#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lapcomp;

namespace {

Graph star(std::size_t leaves) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_pairs(leaves + 1, e);
}

// Center 0, legs 0-1-2, 0-3-4, 0-5-6.
Graph spider() { return Graph::from_pairs(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

}  // namespace

TEST(TreeInverse, PathFromLeaf) {
    const auto inv = tree_inverse_combinatorial(path_graph(3), 0);
    EXPECT_EQ(inv.matrix, (IntegerMatrix{{1, 1}, {1, 2}}));
    EXPECT_EQ(inv.labels, (std::vector<std::size_t>{1, 2}));
}

TEST(TreeInverse, StarAtLeaf) {
    const auto inv = tree_inverse_combinatorial(star(4), 1);
    // labels 0 (center), 2, 3, 4
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(inv.matrix(i, j), i == j && i > 0 ? 2 : 1);
}

TEST(TreeInverse, RejectsBadInput) {
    EXPECT_THROW(tree_inverse_combinatorial(path_graph(3), 1), ParameterError);
    EXPECT_THROW(tree_inverse_combinatorial(cycle_graph(4), 0), ParameterError);
}

TEST(TreeInverse, RandomTreesMatchAlgebraAndDistances) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> size(2, 12);
    for (int trial = 0; trial < 80; ++trial) {
        const auto t = random_tree(size(rng), rng);
        for (std::size_t v = 0; v < t.vertex_count(); ++v) {
            if (t.degree(v) != 1) continue;
            const auto inv = tree_inverse_combinatorial(t, v);
            ASSERT_EQ(inv.matrix.cast<Rational>(), oracle::gauss_inverse(laplacian_minor(t, v).matrix));
            ASSERT_EQ(inv.matrix, oracle::tree_inverse_by_distances(t, v));
            const auto dist = oracle::distances(t, v);
            for (std::size_t i = 0; i < inv.labels.size(); ++i) ASSERT_EQ(inv.matrix(i, i), dist[inv.labels[i]]);
        }
    }
}

TEST(IncidenceInverse, PathAndEdge) {
    const auto g = incidence_inverse(path_graph(3), 0);
    EXPECT_EQ(g * incidence_subminor(path_graph(3), 0), IntegerMatrix::identity(2));
    const auto e = incidence_inverse(path_graph(2), 1);
    EXPECT_EQ(e.rows(), 1u);
    EXPECT_EQ(abs(e(0, 0)), 1);
    EXPECT_EQ(e * incidence_subminor(path_graph(2), 1), IntegerMatrix::identity(1));
}

TEST(IncidenceInverse, RandomTreesAnyOrientation) {
    std::mt19937_64 rng(77);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = random_tree(10, rng).reoriented([&](const Edge&) { return coin(rng); });
        for (std::size_t v = 0; v < t.vertex_count(); ++v) {
            if (t.degree(v) != 1) continue;
            const auto g = incidence_inverse(t, v);
            for (std::size_t i = 0; i < g.rows(); ++i)
                for (std::size_t j = 0; j < g.cols(); ++j) ASSERT_LE(abs(g(i, j)), 1);
            ASSERT_EQ(g * incidence_subminor(t, v), IntegerMatrix::identity(t.edge_count()));
            ASSERT_EQ(g.transpose() * g, tree_inverse_combinatorial(t, v).matrix);
        }
    }
}

TEST(BlockReduction, PathMiddle) {
    const auto blocks = block_reduction(path_graph(3), 1);
    ASSERT_EQ(blocks.size(), 2u);
    for (const auto& b : blocks) EXPECT_EQ(b.subtree.vertex_count(), 2u);
    EXPECT_EQ(assemble_block_inverse(path_graph(3), 1), IntegerMatrix::identity(2));
}

TEST(BlockReduction, StarCenter) {
    const auto blocks = block_reduction(star(5), 0);
    EXPECT_EQ(blocks.size(), 5u);
    EXPECT_EQ(assemble_block_inverse(star(5), 0), IntegerMatrix::identity(5));
}

TEST(BlockReduction, SpiderHasIdenticalBlocks) {
    const auto t = spider();
    const auto blocks = block_reduction(t, 0);
    ASSERT_EQ(blocks.size(), 3u);
    std::vector<IntegerMatrix> inverses;
    for (const auto& b : blocks) inverses.push_back(tree_inverse_combinatorial(b.subtree, b.leaf).matrix);
    EXPECT_EQ(inverses[0], (IntegerMatrix{{1, 1}, {1, 2}}));
    EXPECT_EQ(inverses[0], inverses[1]);
    EXPECT_EQ(inverses[1], inverses[2]);
    EXPECT_EQ(assemble_block_inverse(t, 0).cast<Rational>(), oracle::gauss_inverse(laplacian_minor(t, 0).matrix));
}

TEST(BlockReduction, LeafRejected) { EXPECT_THROW(block_reduction(path_graph(3), 0), ParameterError); }

TEST(BlockReduction, RandomInternalVertices) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = random_tree(12, rng);
        for (std::size_t v = 0; v < 12; ++v) {
            if (t.degree(v) < 2) continue;
            ASSERT_EQ(assemble_block_inverse(t, v).cast<Rational>(), oracle::gauss_inverse(laplacian_minor(t, v).matrix));
        }
    }
}

TEST(TreeGf, Examples) {
    EXPECT_EQ(tree_gf_exponents(path_graph(3), 0).values, (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(tree_gf(path_graph(3), 0).str(), "1/((1 - q^2)(1 - q^3))");
    EXPECT_EQ(tree_gf_exponents(path_graph(2), 0).values, (std::vector<std::int64_t>{1}));
    EXPECT_EQ(tree_gf(path_graph(2), 0).str(), "1/(1 - q)");
    auto binary = tree_gf_exponents(kary_tree(2, 2), 0).values;
    std::sort(binary.begin(), binary.end());
    EXPECT_EQ(binary, (std::vector<std::int64_t>{3, 4, 4}));
}

TEST(TreeGf, SeriesCountsCompositions) {
    // Coefficient m counts lambda >= 0 with L lambda >= 0 and total m.
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const auto t = random_tree(6, rng);
        std::size_t leaf = 0;
        while (t.degree(leaf) != 1) ++leaf;
        const auto series = series_expand(tree_gf(t, leaf), 12);
        const auto brute = brute_force_histogram(laplacian_minor(t, leaf).matrix, Statistic::total, 12);
        for (std::size_t m = 0; m <= 12; ++m) ASSERT_EQ(series[m], Int(brute[m]));
    }
}

TEST(Kary, Exponents) {
    EXPECT_EQ(kary_exponent(2, 2, 1), 3);
    EXPECT_EQ(kary_exponent(2, 2, 2), 4);
    EXPECT_EQ(kary_exponent(2, 1, 1), 1);
    EXPECT_EQ(kary_gf(2, 1).str(), "1/(1 - q)");
    EXPECT_EQ(kary_gf(2, 2).str(), "1/((1 - q^3)(1 - q^4)^2)");
    EXPECT_THROW(kary_exponent(2, 3, 4), ParameterError);
    EXPECT_THROW(kary_exponent(2, 3, 0), ParameterError);
    EXPECT_EQ(q_integer(4, Int(3)), 40);
}

TEST(Kary, BinaryClosedFormMatchesSummation) {
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t j = 1; j <= n; ++j) ASSERT_EQ(binary_exponent(n, j), kary_exponent(2, n, j)) << n << "," << j;
}

TEST(Kary, ClosedFormMatchesTreePipeline) {
    for (std::int64_t k = 1; k <= 3; ++k)
        for (std::int64_t n = 1; n <= 3; ++n)
            EXPECT_EQ(kary_gf(k, n), tree_gf(kary_tree(static_cast<std::size_t>(k), static_cast<std::size_t>(n)), 0))
                << k << "," << n;
}

TEST(TreeSuite, RandomTreesPassEveryIdentity) {
    const auto r = check_random_trees(2024, 100, 12);
    EXPECT_EQ(r.trees, 100u);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_TRUE(r.aggregate.all());
}
