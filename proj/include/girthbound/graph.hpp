#pragma once

// Bipartite graphs with two index-disjoint vertex classes V and W, plus the
// uncoloured graphs they expand from and contract to.

#include "numeric.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace girthbound {

enum class Side { V, W };

/// A vertex named by its colour class and its index within that class.
struct Vertex {
    Side side;
    int index;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// An edge joins class-V vertex `v` to class-W vertex `w`.
struct Edge {
    int v;
    int w;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class BipartiteGraph {
public:
    /// Edgeless graph with the given class sizes.
    explicit BipartiteGraph(int v = 0, int w = 0) : v_adj_(check_size(v)), w_adj_(check_size(w)) {}

    /// Validates indices and rejects duplicates; the diagnostic names the offending pair.
    static BipartiteGraph from_edges(int v, int w, std::span<const Edge> pairs)
    {
        BipartiteGraph g(v, w);
        g.edges_.assign(pairs.begin(), pairs.end());
        for (const Edge& e : g.edges_) {
            if (e.v < 0 || e.v >= v || e.w < 0 || e.w >= w)
                throw std::invalid_argument("edge " + describe(e) + " out of range for v=" +
                                            std::to_string(v) + ", w=" + std::to_string(w));
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
        if (dup != g.edges_.end()) throw std::invalid_argument("duplicate edge " + describe(*dup));
        for (const Edge& e : g.edges_) {
            g.v_adj_[e.v].push_back(e.w);
            g.w_adj_[e.w].push_back(e.v);
        }
        for (auto& adj : g.w_adj_) std::sort(adj.begin(), adj.end());
        return g;
    }

    static BipartiteGraph from_edges(int v, int w, std::initializer_list<Edge> pairs)
    {
        return from_edges(v, w, std::span<const Edge>(pairs.begin(), pairs.size()));
    }

    int v_count() const { return static_cast<int>(v_adj_.size()); }
    int w_count() const { return static_cast<int>(w_adj_.size()); }
    int vertex_count() const { return v_count() + w_count(); }
    Count size() const { return static_cast<Count>(edges_.size()); }

    /// Edges in lexicographic (v, w) order.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> v_neighbors(int i) const { return v_adj_.at(i); }
    std::span<const int> w_neighbors(int j) const { return w_adj_.at(j); }
    std::span<const int> neighbors(Vertex x) const
    {
        return x.side == Side::V ? v_neighbors(x.index) : w_neighbors(x.index);
    }

    int v_degree(int i) const { return static_cast<int>(v_adj_.at(i).size()); }
    int w_degree(int j) const { return static_cast<int>(w_adj_.at(j).size()); }
    int degree(Vertex x) const { return static_cast<int>(neighbors(x).size()); }

    bool has_edge(int i, int j) const
    {
        const auto& adj = v_adj_.at(i);
        return std::binary_search(adj.begin(), adj.end(), j);
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b)
    {
        return a.v_count() == b.v_count() && a.w_count() == b.w_count() && a.edges_ == b.edges_;
    }

    static std::string describe(const Edge& e)
    {
        return "(" + std::to_string(e.v) + ", " + std::to_string(e.w) + ")";
    }

private:
    static std::size_t check_size(int n)
    {
        if (n < 0) throw std::invalid_argument("negative class size " + std::to_string(n));
        return static_cast<std::size_t>(n);
    }

    std::vector<std::vector<int>> v_adj_;
    std::vector<std::vector<int>> w_adj_;
    std::vector<Edge> edges_;
};

/// Simple uncoloured graph; edges are stored as sorted pairs (a < b).
class SimpleGraph {
public:
    using Pair = std::pair<int, int>;

    explicit SimpleGraph(int n = 0) : adj_(static_cast<std::size_t>(std::max(n, 0)))
    {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    static SimpleGraph from_edges(int n, std::span<const Pair> pairs)
    {
        SimpleGraph g(n);
        for (auto [a, b] : pairs) {
            std::string name = "{" + std::to_string(a) + ", " + std::to_string(b) + "}";
            if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("edge " + name + " out of range");
            if (a == b) throw std::invalid_argument("loop " + name);
            g.edges_.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
        if (dup != g.edges_.end())
            throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + ", " +
                                        std::to_string(dup->second) + "}");
        for (auto [a, b] : g.edges_) {
            g.adj_[a].push_back(b);
            g.adj_[b].push_back(a);
        }
        for (auto& adj : g.adj_) std::sort(adj.begin(), adj.end());
        return g;
    }

    static SimpleGraph from_edges(int n, std::initializer_list<Pair> pairs)
    {
        return from_edges(n, std::span<const Pair>(pairs.begin(), pairs.size()));
    }

    static SimpleGraph complete(int n)
    {
        std::vector<Pair> pairs;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        return from_edges(n, pairs);
    }

    /// Complete bipartite graph with parts {0..a-1} and {a..a+b-1}.
    static SimpleGraph complete_bipartite(int a, int b)
    {
        std::vector<Pair> pairs;
        for (int x = 0; x < a; ++x)
            for (int y = 0; y < b; ++y) pairs.emplace_back(x, a + y);
        return from_edges(a + b, pairs);
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    Count size() const { return static_cast<Count>(edges_.size()); }
    const std::vector<Pair>& edges() const { return edges_; }
    std::span<const int> neighbors(int x) const { return adj_.at(x); }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b)
    {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<Pair> edges_;
};

/// Exact girth of an uncoloured graph (nullopt when acyclic).
inline std::optional<int> simple_girth(const SimpleGraph& g)
{
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

struct GirthReport {
    std::optional<int> girth; ///< nullopt when the graph is a forest
    bool has_c4 = false;
    bool has_c6 = false;

    bool acyclic() const { return !girth.has_value(); }
    /// True when every cycle has length at least `g` (forests qualify).
    bool at_least(int g) const { return !girth || *girth >= g; }
};

namespace detail {

inline int dense_id(const BipartiteGraph& g, Vertex x) { return x.side == Side::V ? x.index : g.v_count() + x.index; }

inline Vertex from_dense(const BipartiteGraph& g, int id)
{
    return id < g.v_count() ? Vertex{Side::V, id} : Vertex{Side::W, id - g.v_count()};
}

inline Side other(Side s) { return s == Side::V ? Side::W : Side::V; }

inline std::vector<int> intersect(std::span<const int> a, std::span<const int> b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Whether some 6-cycle exists: three V-vertices pairwise joined through three distinct W-vertices.
inline bool contains_c6(const BipartiteGraph& g)
{
    const int v = g.v_count();
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b) {
            auto ab = intersect(g.v_neighbors(a), g.v_neighbors(b));
            if (ab.empty()) continue;
            for (int c = b + 1; c < v; ++c) {
                auto bc = intersect(g.v_neighbors(b), g.v_neighbors(c));
                if (bc.empty()) continue;
                auto ca = intersect(g.v_neighbors(c), g.v_neighbors(a));
                for (int x : ab)
                    for (int y : bc) {
                        if (y == x) continue;
                        for (int z : ca)
                            if (z != x && z != y) return true;
                    }
            }
        }
    return false;
}

} // namespace detail

/// Shortest cycle through BFS from every vertex; O(V*E).
inline GirthReport girth(const BipartiteGraph& g)
{
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> queue;
        queue.push(s);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            Vertex vx = detail::from_dense(g, x);
            if (best && 2 * dist[x] >= *best) break;
            for (int nb : g.neighbors(vx)) {
                int y = detail::dense_id(g, {detail::other(vx.side), nb});
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    GirthReport report;
    report.girth = best;
    report.has_c4 = best && *best == 4;
    report.has_c6 = best && *best <= 6 && (*best == 6 || detail::contains_c6(g));
    return report;
}

/// Paths with three edges, each undirected path counted once: the sum over
/// edges {y, z} of (d(y) - 1)(d(z) - 1).
inline Count count_paths3(const BipartiteGraph& g)
{
    Count total = 0;
    for (const Edge& e : g.edges()) total += Count(g.v_degree(e.v) - 1) * Count(g.w_degree(e.w) - 1);
    return total;
}

/// Same quantity by walking every vertex sequence (x, y, z, t). Small graphs only.
inline Count count_paths3_enumerate(const BipartiteGraph& g)
{
    const int n = g.vertex_count();
    auto nbrs = [&](int id) {
        Vertex x = detail::from_dense(g, id);
        std::vector<int> out;
        for (int nb : g.neighbors(x)) out.push_back(detail::dense_id(g, {detail::other(x.side), nb}));
        return out;
    };
    std::vector<std::vector<int>> adj(n);
    for (int id = 0; id < n; ++id) adj[id] = nbrs(id);

    Count sequences = 0;
    for (int x = 0; x < n; ++x)
        for (int y : adj[x])
            for (int z : adj[y]) {
                if (z == x) continue;
                for (int t : adj[z])
                    if (t != y && t != x) ++sequences;
            }
    // every path is seen once from each end
    return sequences / 2;
}

struct PruneResult {
    BipartiteGraph graph;
    Count removed_edges = 0;
    std::vector<int> kept_v; ///< original index of each surviving V-vertex
    std::vector<int> kept_w;
};

/// Repeatedly deletes vertices of degree < k (lowest index first, V before W)
/// and renumbers the survivors in their original order.
inline PruneResult prune_min_degree(const BipartiteGraph& g, int k)
{
    if (k < 1) throw std::invalid_argument("prune_min_degree needs k >= 1");
    const int v = g.v_count(), w = g.w_count();
    std::vector<int> vdeg(v), wdeg(w);
    std::vector<char> v_alive(v, 1), w_alive(w, 1);
    for (int i = 0; i < v; ++i) vdeg[i] = g.v_degree(i);
    for (int j = 0; j < w; ++j) wdeg[j] = g.w_degree(j);

    PruneResult result;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < v; ++i) {
            if (!v_alive[i] || vdeg[i] >= k) continue;
            v_alive[i] = 0;
            changed = true;
            for (int j : g.v_neighbors(i))
                if (w_alive[j]) {
                    --wdeg[j];
                    ++result.removed_edges;
                }
        }
        for (int j = 0; j < w; ++j) {
            if (!w_alive[j] || wdeg[j] >= k) continue;
            w_alive[j] = 0;
            changed = true;
            for (int i : g.w_neighbors(j))
                if (v_alive[i]) {
                    --vdeg[i];
                    ++result.removed_edges;
                }
        }
    }

    std::vector<int> v_new(v, -1), w_new(w, -1);
    for (int i = 0; i < v; ++i)
        if (v_alive[i]) {
            v_new[i] = static_cast<int>(result.kept_v.size());
            result.kept_v.push_back(i);
        }
    for (int j = 0; j < w; ++j)
        if (w_alive[j]) {
            w_new[j] = static_cast<int>(result.kept_w.size());
            result.kept_w.push_back(j);
        }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (v_alive[e.v] && w_alive[e.w]) kept.push_back({v_new[e.v], w_new[e.w]});
    result.graph = BipartiteGraph::from_edges(static_cast<int>(result.kept_v.size()),
                                              static_cast<int>(result.kept_w.size()), kept);
    return result;
}

/// Uncoloured graph on class V; x ~ z iff they share a W-neighbour.
inline SimpleGraph contract(const BipartiteGraph& g)
{
    std::vector<SimpleGraph::Pair> pairs;
    for (int j = 0; j < g.w_count(); ++j) {
        auto nb = g.w_neighbors(j);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) pairs.emplace_back(nb[a], nb[b]);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return SimpleGraph::from_edges(g.v_count(), pairs);
}

/// Number of length-3 paths from V-vertex i to every W-vertex.
inline std::vector<int> paths3_from(const BipartiteGraph& g, int i)
{
    std::vector<int> count(g.w_count(), 0);
    for (int j1 : g.v_neighbors(i))
        for (int i1 : g.w_neighbors(j1)) {
            if (i1 == i) continue;
            for (int j : g.v_neighbors(i1))
                if (j != j1) ++count[j];
        }
    return count;
}

/// Girth >= 8, minimum degree >= 2 on both sides, and exactly one path of
/// length 3 between every non-adjacent pair of opposite colours.
inline bool verify_weak_gq(const BipartiteGraph& g)
{
    if (g.v_count() == 0 || g.w_count() == 0) return false;
    for (int i = 0; i < g.v_count(); ++i)
        if (g.v_degree(i) < 2) return false;
    for (int j = 0; j < g.w_count(); ++j)
        if (g.w_degree(j) < 2) return false;
    if (!girth(g).at_least(8)) return false;
    for (int i = 0; i < g.v_count(); ++i) {
        auto count = paths3_from(g, i);
        for (int j = 0; j < g.w_count(); ++j)
            if (!g.has_edge(i, j) && count[j] != 1) return false;
    }
    return true;
}

struct DegreeSummary {
    int v_min = 0, v_max = 0, w_min = 0, w_max = 0;
    bool biregular() const { return v_min == v_max && w_min == w_max; }
};

inline DegreeSummary degree_summary(const BipartiteGraph& g)
{
    DegreeSummary s;
    auto fold = [](int n, auto deg, int& lo, int& hi) {
        for (int x = 0; x < n; ++x) {
            int d = deg(x);
            if (x == 0 || d < lo) lo = d;
            if (x == 0 || d > hi) hi = d;
        }
    };
    fold(g.v_count(), [&](int i) { return g.v_degree(i); }, s.v_min, s.v_max);
    fold(g.w_count(), [&](int j) { return g.w_degree(j); }, s.w_min, s.w_max);
    return s;
}

} // namespace girthbound
