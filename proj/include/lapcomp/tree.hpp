#pragma once

// Inverses of tree Laplacian minors read off from path geometry, the incidence-matrix
// inverse, block reduction at internal vertices, and the k-ary closed forms.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace lapcomp {

/// Tree rooted at a vertex: parent pointers and depths.
struct RootedTree {
    std::vector<std::size_t> parent;  // parent[root] == root
    std::vector<std::size_t> depth;

    RootedTree(const Graph& t, std::size_t root) : parent(t.vertex_count()), depth(t.vertex_count(), 0) {
        const auto adj = t.adjacency();
        std::vector<bool> seen(t.vertex_count(), false);
        std::vector<std::size_t> queue{root};
        seen[root] = true;
        parent[root] = root;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto v = queue[head];
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
        }
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
        while (depth[a] > depth[b]) a = parent[a];
        while (depth[b] > depth[a]) b = parent[b];
        while (a != b) {
            a = parent[a];
            b = parent[b];
        }
        return a;
    }

    bool is_ancestor_or_self(std::size_t anc, std::size_t v) const {
        while (depth[v] > depth[anc]) v = parent[v];
        return v == anc;
    }
};

inline void require_tree_leaf(const Graph& t, std::size_t leaf) {
    if (!t.is_tree()) throw ParameterError("graph is not a tree");
    t.require_vertex(leaf);
    if (t.degree(leaf) != 1) throw ParameterError("vertex " + std::to_string(leaf) + " is not a leaf");
}

struct TreeInverse {
    IntegerMatrix matrix;
    Graph tree;
    std::size_t leaf;
    std::vector<std::size_t> labels;
};

/// Entry (i,j) is the length of the common part of the paths leaf->i and leaf->j.
inline TreeInverse tree_inverse_combinatorial(const Graph& t, std::size_t leaf) {
    require_tree_leaf(t, leaf);
    const RootedTree rooted(t, leaf);
    auto labels = labels_without(t.vertex_count(), leaf);
    IntegerMatrix m(labels.size(), labels.size());
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a; b < labels.size(); ++b)
            m(a, b) = m(b, a) = rooted.depth[rooted.meet(labels[a], labels[b])];
    return {std::move(m), t, leaf, std::move(labels)};
}

/// Inverse of the incidence subminor: rows are edges, columns the non-leaf vertices.
/// Entry (e,j) is +1 / -1 when e lies on the path from j to the leaf and points away from /
/// toward the leaf, and 0 otherwise.
inline IntegerMatrix incidence_inverse(const Graph& t, std::size_t leaf) {
    require_tree_leaf(t, leaf);
    const RootedTree rooted(t, leaf);
    const auto labels = labels_without(t.vertex_count(), leaf);
    IntegerMatrix g(t.edge_count(), labels.size());
    for (std::size_t e = 0; e < t.edge_count(); ++e) {
        const auto& edge = t.edges()[e];
        const bool away = rooted.depth[edge.head] > rooted.depth[edge.tail];
        const auto lower = away ? edge.head : edge.tail;
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (rooted.is_ancestor_or_self(lower, labels[j])) g(e, j) = away ? 1 : -1;
    }
    return g;
}

/// One component left after deleting an internal vertex, with that vertex re-attached as a leaf.
struct BlockProblem {
    Graph subtree;
    std::size_t leaf;                           // local label of the deleted vertex
    std::vector<std::size_t> original_labels;  // local -> original label
};

inline std::vector<BlockProblem> block_reduction(const Graph& t, std::size_t v) {
    if (!t.is_tree()) throw ParameterError("graph is not a tree");
    t.require_vertex(v);
    if (t.degree(v) < 2) throw ParameterError("vertex " + std::to_string(v) + " is a leaf; no reduction needed");
    const auto adj = t.adjacency();
    const auto n = t.vertex_count();
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (auto start : adj[v]) {
        if (comp[start] != -1) continue;
        std::vector<std::size_t> stack{start};
        comp[start] = comps;
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (y != v && comp[y] == -1) {
                    comp[y] = comps;
                    stack.push_back(y);
                }
        }
        ++comps;
    }
    std::vector<BlockProblem> out;
    for (int c = 0; c < comps; ++c) {
        std::vector<std::size_t> local(n, n), members;
        for (std::size_t x = 0; x < n; ++x)
            if (comp[x] == c) {
                local[x] = members.size();
                members.push_back(x);
            }
        local[v] = members.size();
        members.push_back(v);
        std::vector<Edge> edges;
        for (const auto& e : t.edges())
            if (local[e.tail] != n && local[e.head] != n) edges.push_back({local[e.tail], local[e.head]});
        out.push_back({Graph(members.size(), std::move(edges)), local[v], std::move(members)});
    }
    return out;
}

/// Inverse of the minor at internal vertex v, assembled from the block subproblems.
inline IntegerMatrix assemble_block_inverse(const Graph& t, std::size_t v) {
    const auto labels = labels_without(t.vertex_count(), v);
    std::vector<std::size_t> position(t.vertex_count(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) position[labels[i]] = i;
    IntegerMatrix out(labels.size(), labels.size());
    for (const auto& block : block_reduction(t, v)) {
        const auto inv = tree_inverse_combinatorial(block.subtree, block.leaf);
        for (std::size_t a = 0; a < inv.labels.size(); ++a)
            for (std::size_t b = 0; b < inv.labels.size(); ++b)
                out(position[block.original_labels[inv.labels[a]]],
                    position[block.original_labels[inv.labels[b]]]) = inv.matrix(a, b);
    }
    return out;
}

struct ExponentMultiset {
    std::vector<std::int64_t> values;  // one exponent per non-leaf vertex, in label order
};

inline ExponentMultiset tree_gf_exponents(const Graph& t, std::size_t leaf) {
    const auto inv = tree_inverse_combinatorial(t, leaf);
    ExponentMultiset out;
    for (std::size_t j = 0; j < inv.matrix.cols(); ++j) {
        Int sum = 0;
        for (std::size_t i = 0; i < inv.matrix.rows(); ++i) sum += inv.matrix(i, j);
        out.values.push_back(to_small(sum));
    }
    return out;
}

/// Total-degree generating function 1 / prod (1 - q^{b_i}).
inline UnivariateRationalGF tree_gf(const Graph& t, std::size_t leaf) {
    std::vector<UnivariateRationalGF::Factor> den;
    for (auto b : tree_gf_exponents(t, leaf).values) den.emplace_back(b, 1);
    return UnivariateRationalGF(Polynomial({1}), den);
}

/// [n]_k = 1 + k + ... + k^{n-1}.
inline Int q_integer(std::int64_t n, const Int& k) {
    Int sum = 0, power = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        sum += power;
        power *= k;
    }
    return sum;
}

/// Column sum shared by every vertex on level j of a k-ary tree with n levels.
inline Int kary_exponent(std::int64_t k, std::int64_t n, std::int64_t j) {
    if (k < 1 || n < 1) throw ParameterError("k-ary exponent needs k >= 1 and n >= 1");
    if (j < 1 || j > n) throw ParameterError("level j must lie in 1..n");
    Int e = j * q_integer(n - j + 1, k);
    for (std::int64_t i = 1; i <= j - 1; ++i) e += (j - i) * ipow(Int(k), static_cast<std::uint64_t>(n - (j - i)));
    return e;
}

/// 2^{n-j+1} (2^j - 1) - j.
inline Int binary_exponent(std::int64_t n, std::int64_t j) {
    if (j < 1 || j > n) throw ParameterError("level j must lie in 1..n");
    return ipow(Int(2), static_cast<std::uint64_t>(n - j + 1)) * (ipow(Int(2), static_cast<std::uint64_t>(j)) - 1) - j;
}

inline UnivariateRationalGF kary_gf(std::int64_t k, std::int64_t n) {
    std::vector<UnivariateRationalGF::Factor> den;
    for (std::int64_t j = 1; j <= n; ++j)
        den.emplace_back(to_small(kary_exponent(k, n, j)), to_small(ipow(Int(k), static_cast<std::uint64_t>(j - 1))));
    return UnivariateRationalGF(Polynomial({1}), den);
}

// ---------------------------------------------------------------------------
// Verification of the tree identities on a single tree.

struct TreeCheck {
    bool combinatorial_inverse = true;  // matches the algebraic inverse at every leaf
    bool incidence_inverse = true;      // G * boundary = I and G^T G = inverse at every leaf
    bool block_reduction = true;        // assembly matches the inverse at every internal vertex
    bool unimodular_minors = true;      // det(L_i) = 1 for every i

    bool all() const { return combinatorial_inverse && incidence_inverse && block_reduction && unimodular_minors; }
};

inline TreeCheck verify_tree(const Graph& t) {
    if (!t.is_tree()) throw ParameterError("graph is not a tree");
    TreeCheck check;
    const auto lap = laplacian(t);
    for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        const auto minor = lap.minor(v, v);
        if (determinant(minor) != 1) {
            check.unimodular_minors = false;
            continue;
        }
        const auto algebraic = adjugate_pair(minor).R;
        if (t.degree(v) == 1) {
            if (tree_inverse_combinatorial(t, v).matrix != algebraic) check.combinatorial_inverse = false;
            const auto g = incidence_inverse(t, v);
            if (g * incidence_subminor(t, v) != IntegerMatrix::identity(t.edge_count()) ||
                g.transpose() * g != algebraic)
                check.incidence_inverse = false;
        } else if (assemble_block_inverse(t, v) != algebraic) {
            check.block_reduction = false;
        }
    }
    return check;
}

struct TreeSuiteResult {
    std::size_t trees = 0;
    std::size_t failures = 0;
    TreeCheck aggregate;
};

/// Random trees with 2..max_vertices vertices from a seeded Pruefer generator.
inline TreeSuiteResult check_random_trees(std::uint64_t seed, std::size_t count, std::size_t max_vertices = 12) {
    if (max_vertices < 2) throw ParameterError("trees need at least two vertices");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(2, max_vertices);
    TreeSuiteResult result;
    for (std::size_t i = 0; i < count; ++i) {
        const auto t = random_tree(size(rng), rng);
        const auto c = verify_tree(t);
        ++result.trees;
        if (!c.all()) ++result.failures;
        result.aggregate.combinatorial_inverse &= c.combinatorial_inverse;
        result.aggregate.incidence_inverse &= c.incidence_inverse;
        result.aggregate.block_reduction &= c.block_reduction;
        result.aggregate.unimodular_minors &= c.unimodular_minors;
    }
    return result;
}

}  // namespace lapcomp
