#pragma once

// Simple labeled graphs, the built-in families, and their Laplacian matrices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace lapcomp {

inline constexpr std::size_t kMaxVertices = 64;

/// An oriented edge; the undirected graph ignores orientation except in incidence matrices.
struct Edge {
    std::size_t tail;
    std::size_t head;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1 with a fixed edge orientation.
class Graph {
public:
    Graph() = default;

    /// Validates labels, loops and duplicates. Orientation defaults to smaller -> larger.
    Graph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
        if (n_ == 0) throw ParameterError("graph must have at least one vertex");
        if (n_ > kMaxVertices)
            throw ParameterError("graph has " + std::to_string(n_) + " vertices; cap is " +
                                 std::to_string(kMaxVertices));
        std::vector<std::vector<bool>> seen(n_, std::vector<bool>(n_, false));
        for (const auto& e : edges_) {
            if (e.tail >= n_ || e.head >= n_)
                throw ParameterError("edge " + std::to_string(e.tail) + "-" + std::to_string(e.head) +
                                     " references a vertex outside 0.." + std::to_string(n_ - 1));
            if (e.tail == e.head) throw ParameterError("loop at vertex " + std::to_string(e.tail));
            if (seen[e.tail][e.head])
                throw ParameterError("duplicate edge " + std::to_string(e.tail) + "-" +
                                     std::to_string(e.head));
            seen[e.tail][e.head] = seen[e.head][e.tail] = true;
        }
    }

    static Graph from_pairs(std::size_t vertex_count,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [u, v] : pairs) edges.push_back({std::min(u, v), std::max(u, v)});
        return Graph(vertex_count, std::move(edges));
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Same graph with every edge oriented as given by `orient(edge) -> bool flip`.
    template <class Flip>
    Graph reoriented(Flip&& flip) const {
        Graph g = *this;
        for (auto& e : g.edges_)
            if (flip(e)) std::swap(e.tail, e.head);
        return g;
    }

    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.tail].push_back(e.head);
            adj[e.head].push_back(e.tail);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }

    std::size_t degree(std::size_t v) const {
        return static_cast<std::size_t>(std::count_if(
            edges_.begin(), edges_.end(), [v](const Edge& e) { return e.tail == v || e.head == v; }));
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
            return (e.tail == u && e.head == v) || (e.tail == v && e.head == u);
        });
    }

    bool connected() const {
        const auto adj = adjacency();
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n_;
    }

    bool is_tree() const { return edges_.size() + 1 == n_ && connected(); }

    void require_connected() const {
        if (!connected()) throw ParameterError("graph is disconnected");
    }

    void require_vertex(std::size_t v) const {
        if (v >= n_)
            throw ParameterError("vertex " + std::to_string(v) + " out of range 0.." +
                                 std::to_string(n_ - 1));
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Families

enum class FamilyKind { path, cycle, leafed_cycle, kary, complete };

struct FamilySpec {
    FamilyKind kind;
    std::size_t n = 0;       // path/cycle/leafed_cycle/complete size; k-ary branching k
    std::size_t levels = 0;  // k-ary only
};

inline Graph path_graph(std::size_t n) {
    if (n < 2) throw ParameterError("path needs n >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_pairs(n, e);
}

/// Cycle on 0..n-1. Internal label v corresponds to the label v+1 of the 1..n convention,
/// so minoring at n-1 reproduces the tridiagonal cycle minor.
inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("cycle needs n >= 3");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_pairs(n, e);
}

/// Cycle 0..n-1 plus the leaf n attached to vertex 0.
inline Graph leafed_cycle_graph(std::size_t n) {
    if (n < 3) throw ParameterError("leafed cycle needs n >= 3");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    e.emplace_back(0, n);
    return Graph::from_pairs(n + 1, e);
}

/// k-ary tree with `levels` levels and an extra leaf 0 attached to the root (vertex 1).
/// Vertices are numbered breadth-first, so every edge points away from vertex 0.
inline Graph kary_tree(std::size_t k, std::size_t levels) {
    if (k < 1 || levels < 1) throw ParameterError("k-ary tree needs k >= 1 and levels >= 1");
    std::size_t count = 1, width = 1;
    for (std::size_t j = 1; j <= levels; ++j) {
        count += width;
        if (count > kMaxVertices) throw ParameterError("k-ary tree exceeds the vertex cap");
        width *= k;
    }
    std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}};
    std::size_t next = 2, level_start = 1, level_width = 1;
    for (std::size_t j = 1; j < levels; ++j) {
        for (std::size_t v = level_start; v < level_start + level_width; ++v)
            for (std::size_t c = 0; c < k; ++c) e.emplace_back(v, next++);
        level_start += level_width;
        level_width *= k;
    }
    return Graph::from_pairs(count, e);
}

inline Graph complete_graph(std::size_t n) {
    if (n < 2) throw ParameterError("complete graph needs n >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_pairs(n, e);
}

inline Graph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::path: return path_graph(spec.n);
        case FamilyKind::cycle: return cycle_graph(spec.n);
        case FamilyKind::leafed_cycle: return leafed_cycle_graph(spec.n);
        case FamilyKind::kary: return kary_tree(spec.n, spec.levels);
        case FamilyKind::complete: return complete_graph(spec.n);
    }
    throw ParameterError("unknown family");
}

/// The minored vertex each family is conventionally studied at.
inline std::size_t default_minor(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::cycle: return spec.n - 1;
        case FamilyKind::leafed_cycle: return spec.n;
        default: return 0;
    }
}

/// Parses "leafed_cycle:5", "path:4", "kary:2:3" (k, levels), "complete:4".
inline FamilySpec parse_family(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    auto number = [&](std::size_t i) -> std::size_t {
        if (i >= parts.size()) throw ParseError("family '" + text + "' is missing a parameter");
        const auto& s = parts[i];
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("family parameter '" + s + "' is not a nonnegative integer");
        return std::stoul(s);
    };
    if (parts.empty()) throw ParseError("empty family spec");
    const auto& name = parts[0];
    FamilySpec spec{};
    std::size_t expected = 2;
    if (name == "path") spec.kind = FamilyKind::path;
    else if (name == "cycle") spec.kind = FamilyKind::cycle;
    else if (name == "leafed_cycle") spec.kind = FamilyKind::leafed_cycle;
    else if (name == "complete") spec.kind = FamilyKind::complete;
    else if (name == "kary") { spec.kind = FamilyKind::kary; expected = 3; }
    else throw ParseError("unknown family '" + name + "'");
    if (parts.size() != expected) throw ParseError("family '" + text + "' has the wrong number of parameters");
    spec.n = number(1);
    if (spec.kind == FamilyKind::kary) spec.levels = number(2);
    return spec;
}

// ---------------------------------------------------------------------------
// Matrices

/// L = D - A.
inline IntegerMatrix laplacian(const Graph& g) {
    const auto n = g.vertex_count();
    IntegerMatrix l(n, n);
    for (const auto& e : g.edges()) {
        l(e.tail, e.tail) += 1;
        l(e.head, e.head) += 1;
        l(e.tail, e.head) -= 1;
        l(e.head, e.tail) -= 1;
    }
    return l;
}

struct LaplacianMinor {
    IntegerMatrix matrix;
    Graph source_graph;
    std::size_t minored_vertex;
    /// Original vertex label of each row/column, in increasing order.
    std::vector<std::size_t> labels;
};

inline std::vector<std::size_t> labels_without(std::size_t n, std::size_t skip) {
    std::vector<std::size_t> labels;
    for (std::size_t v = 0; v < n; ++v)
        if (v != skip) labels.push_back(v);
    return labels;
}

inline LaplacianMinor laplacian_minor(const Graph& g, std::size_t i) {
    g.require_vertex(i);
    return {laplacian(g).minor(i, i), g, i, labels_without(g.vertex_count(), i)};
}

/// Signed vertex-edge incidence matrix: +1 at the head of an edge, -1 at its tail.
inline IntegerMatrix incidence_matrix(const Graph& g) {
    IntegerMatrix d(g.vertex_count(), g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        d(g.edges()[j].head, j) = 1;
        d(g.edges()[j].tail, j) = -1;
    }
    return d;
}

/// Incidence matrix with row i deleted.
inline IntegerMatrix incidence_subminor(const Graph& g, std::size_t i) {
    g.require_vertex(i);
    const auto full = incidence_matrix(g);
    IntegerMatrix d(full.rows() - 1, full.cols());
    for (std::size_t r = 0, out = 0; r < full.rows(); ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < full.cols(); ++c) d(out, c) = full(r, c);
        ++out;
    }
    return d;
}

/// Kirchhoff: det of any Laplacian minor.
inline Int spanning_tree_count(const Graph& g) {
    g.require_connected();
    return determinant(laplacian(g).minor(0, 0));
}

// ---------------------------------------------------------------------------
// Parsing

/// Edge-list format: first line vertex count, then "u v" per line; '#' starts a comment.
inline Graph parse_graph(const std::string& text, bool require_connected = true) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::size_t vertex_count = 0;
    bool have_count = false;
    std::vector<Edge> edges;
    auto parse_label = [&](const std::string& tok) -> std::size_t {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("expected a nonnegative integer, got '" + tok + "'", lineno);
        if (tok.size() > 6) throw ParseError("label '" + tok + "' is too large", lineno);
        return std::stoul(tok);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!have_count) {
            if (tok.size() != 1) throw ParseError("first line must hold the vertex count", lineno);
            vertex_count = parse_label(tok[0]);
            if (vertex_count == 0) throw ParseError("vertex count must be positive", lineno);
            have_count = true;
            continue;
        }
        if (tok.size() != 2) throw ParseError("expected 'u v'", lineno);
        const auto u = parse_label(tok[0]);
        const auto v = parse_label(tok[1]);
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
        if (u >= vertex_count || v >= vertex_count)
            throw ParseError("vertex label out of range", lineno);
        const Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw ParseError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v), lineno);
        edges.push_back(e);
    }
    if (!have_count) throw ParseError("missing vertex count");
    if (vertex_count > kMaxVertices) throw ParseError("graph exceeds the vertex cap");
    Graph g(vertex_count, std::move(edges));
    if (require_connected && !g.connected()) throw ParseError("graph is disconnected");
    return g;
}

/// Uniform labeled tree from a random Pruefer sequence.
template <class Rng>
Graph random_tree(std::size_t n, Rng& rng) {
    if (n < 2) throw ParameterError("random tree needs n >= 2");
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> code(n - 2);
    for (auto& c : code) c = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (auto c : code) {
        for (std::size_t leaf = 0; leaf < n; ++leaf)
            if (degree[leaf] == 1) {
                e.emplace_back(leaf, c);
                --degree[leaf];
                --degree[c];
                break;
            }
    }
    std::size_t u = n, v = n;
    for (std::size_t x = 0; x < n; ++x)
        if (degree[x] == 1) (u == n ? u : v) = x;
    e.emplace_back(u, v);
    return Graph::from_pairs(n, e);
}

}  // namespace lapcomp
