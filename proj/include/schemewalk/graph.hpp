#pragma once

#include "schemewalk/core.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace schemewalk {

/// Simple undirected graph with sorted adjacency lists.
class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count) : adj_(check_count(vertex_count)) {}

    static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    {
        Graph g(vertex_count);
        for (auto [u, v] : edges) {
            g.add_edge(u, v);
        }
        return g;
    }

    /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
    static Graph from_adjacency(const IntMatrix& a)
    {
        if (a.rows() != a.cols()) {
            throw InputError("adjacency matrix is not square");
        }
        Graph g(static_cast<int>(a.rows()));
        for (Eigen::Index x = 0; x < a.rows(); ++x) {
            if (a(x, x) != 0) {
                throw InputError("adjacency matrix has a nonzero diagonal entry at " + std::to_string(x));
            }
            for (Eigen::Index y = x + 1; y < a.cols(); ++y) {
                if (a(x, y) != a(y, x) || (a(x, y) != 0 && a(x, y) != 1)) {
                    throw InputError("adjacency matrix is not a symmetric 0/1 matrix");
                }
                if (a(x, y) == 1) {
                    g.add_edge(static_cast<int>(x), static_cast<int>(y));
                }
            }
        }
        return g;
    }

    void add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) {
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u));
        }
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (const auto& n : adj_) {
            twice += n.size();
        }
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u) {
            for (int v : adj_[u]) {
                if (u < v) {
                    out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    IntMatrix adjacency() const
    {
        IntMatrix a = IntMatrix::Zero(vertex_count(), vertex_count());
        for (int u = 0; u < vertex_count(); ++u) {
            for (int v : adj_[u]) {
                a(u, v) = 1;
            }
        }
        return a;
    }

    /// BFS distances from `source`; -1 marks unreachable vertices.
    std::vector<int> distances_from(int source) const
    {
        std::vector<int> dist(adj_.size(), -1);
        std::deque<int> queue{source};
        dist.at(source) = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        return dist;
    }

private:
    static std::size_t check_count(int n)
    {
        if (n <= 0) {
            throw InputError("graph needs a positive vertex count");
        }
        return static_cast<std::size_t>(n);
    }

    static void insert_sorted(std::vector<int>& list, int v)
    {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it == list.end() || *it != v) {
            list.insert(it, v);
        }
    }

    std::vector<std::vector<int>> adj_;
};

/// Rooted tree where the root has `degree` children and every other internal
/// vertex has `degree - 1`, i.e. the ball of radius `depth` in the
/// `degree`-regular tree. Vertices are numbered in BFS order (root = 0).
struct RootedTree {
    Graph graph;
    std::vector<int> depth;   // per vertex
    std::vector<int> parent;  // -1 for the root
    std::vector<int> branch;  // index of the root child above the vertex, -1 for the root
};

inline RootedTree make_regular_tree(int degree, int depth, std::size_t vertex_cap = default_vertex_cap)
{
    if (degree < 1 || depth < 0) {
        throw InputError("tree needs degree >= 1 and depth >= 0");
    }
    // 1 + degree * sum_{t<depth} (degree-1)^t
    std::size_t count = 1;
    std::size_t layer = static_cast<std::size_t>(degree);
    for (int t = 0; t < depth; ++t) {
        count += layer;
        if (count > vertex_cap) {
            throw InputError("tree of degree " + std::to_string(degree) + " and depth " + std::to_string(depth) +
                             " exceeds the vertex cap of " + std::to_string(vertex_cap));
        }
        layer *= static_cast<std::size_t>(degree - 1);
        if (layer == 0) {
            break;
        }
    }
    RootedTree t;
    t.graph = Graph(static_cast<int>(count));
    t.depth.assign(count, 0);
    t.parent.assign(count, -1);
    t.branch.assign(count, -1);
    std::vector<int> frontier{0};
    int next = 1;
    for (int level = 0; level < depth; ++level) {
        std::vector<int> grown;
        for (int u : frontier) {
            const int children = (u == 0) ? degree : degree - 1;
            for (int c = 0; c < children; ++c) {
                const int v = next++;
                t.graph.add_edge(u, v);
                t.depth[v] = level + 1;
                t.parent[v] = u;
                t.branch[v] = (u == 0) ? c : t.branch[u];
                grown.push_back(v);
            }
        }
        frontier = std::move(grown);
    }
    return t;
}

inline Graph make_cycle(int n)
{
    if (n < 3) {
        throw InputError("cycle needs at least 3 vertices");
    }
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

inline Graph make_path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1);
    }
    return g;
}

inline Graph make_complete(int n)
{
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

} // namespace schemewalk
