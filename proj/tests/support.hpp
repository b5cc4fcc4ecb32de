#pragma once

// Generators and brute-force oracles shared by the unit and acceptance suites.
// The oracles deliberately take different routes from the library code.

#include <girthbound/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <vector>

namespace girthbound::testing {

/// Random bipartite graph; each pair is an edge with probability p.
inline BipartiteGraph random_bipartite(std::mt19937_64& rng, int v, int w, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < w; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return BipartiteGraph::from_edges(v, w, edges);
}

/// Random bipartite graph of girth >= g grown by inserting shuffled pairs and
/// keeping those that close no short cycle (checked by full recomputation).
inline BipartiteGraph random_high_girth(std::mt19937_64& rng, int v, int w, int g, double keep = 1.0)
{
    std::vector<Edge> order;
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < w; ++j) order.push_back({i, j});
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> edges;
    for (const Edge& e : order) {
        if (!coin(rng)) continue;
        edges.push_back(e);
        if (!girth(BipartiteGraph::from_edges(v, w, edges)).at_least(g)) edges.pop_back();
    }
    return BipartiteGraph::from_edges(v, w, edges);
}

/// Dense adjacency over all v + w vertices (V first).
inline std::vector<std::vector<int>> dense_adjacency(const BipartiteGraph& g)
{
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        adj[e.v].push_back(g.v_count() + e.w);
        adj[g.v_count() + e.w].push_back(e.v);
    }
    return adj;
}

/// Girth as 1 + min over edges {a, b} of dist(a, b) with that edge deleted.
inline std::optional<int> girth_by_edge_deletion(const BipartiteGraph& g)
{
    auto adj = dense_adjacency(g);
    const int n = g.vertex_count();
    std::optional<int> best;
    for (const Edge& e : g.edges()) {
        const int a = e.v, b = g.v_count() + e.w;
        std::vector<int> dist(n, -1);
        std::queue<int> queue;
        dist[a] = 0;
        queue.push(a);
        while (!queue.empty() && dist[b] < 0) {
            int x = queue.front();
            queue.pop();
            for (int y : adj[x]) {
                if ((x == a && y == b) || dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                queue.push(y);
            }
        }
        if (dist[b] >= 0 && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
    }
    return best;
}

/// Maximum size with girth >= g by trying every edge subset (v * w <= 20).
inline Count brute_force_max_size(int v, int w, int g)
{
    const int cells = v * w;
    Count best = 0;
    for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
        Count size = std::popcount(mask);
        if (size <= best) continue;
        std::vector<Edge> edges;
        for (int c = 0; c < cells; ++c)
            if ((mask >> c) & 1U) edges.push_back({c / w, c % w});
        auto gg = girth_by_edge_deletion(BipartiteGraph::from_edges(v, w, edges));
        if (!gg || *gg >= g) best = size;
    }
    return best;
}

inline BipartiteGraph cycle8()
{
    return BipartiteGraph::from_edges(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

} // namespace girthbound::testing
