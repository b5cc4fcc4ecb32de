#pragma once

// Generators for the extremal families: subdivisions (expansions), grids,
// complete bipartite graphs, the unbalanced optimal families, projective
// planes PG(2, q) and symplectic quadrangles W(q) over prime fields.

#include "geometry.hpp"
#include "graph.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace girthbound {

/// Class V = vertices of g, class W = edges of g (in g's edge order); every
/// W-vertex joins the two endpoints of its edge.
inline BipartiteGraph expand(const SimpleGraph& g)
{
    std::vector<Edge> edges;
    int j = 0;
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, j});
        edges.push_back({b, j});
        ++j;
    }
    return BipartiteGraph::from_edges(g.vertex_count(), static_cast<int>(g.size()), edges);
}

inline BipartiteGraph complete_bipartite(int a, int b)
{
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, j});
    return BipartiteGraph::from_edges(a, b, edges);
}

/// Point/line incidence of the (t+1) x (t+1) grid. Point (r, c) is V-vertex
/// r(t+1) + c; horizontal line r is W-vertex r, vertical line c is W-vertex t+1+c.
inline BipartiteGraph grid_incidence(int t)
{
    if (t < 0) throw std::invalid_argument("grid_incidence needs t >= 0");
    const int side = t + 1;
    std::vector<Edge> edges;
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            edges.push_back({r * side + c, r});
            edges.push_back({r * side + c, side + c});
        }
    return BipartiteGraph::from_edges(side * side, 2 * side, edges);
}

inline constexpr int pg2_max_order = 13;
inline constexpr int wq_max_order = 7;

/// Incidence graph of the projective plane PG(2, q): points and lines are
/// both normalized 3-vectors, incident when their dot product vanishes.
inline BipartiteGraph pg2_incidence(int q)
{
    PrimeField f(q);
    if (q > pg2_max_order)
        throw std::invalid_argument("pg2_incidence supports primes q <= " + std::to_string(pg2_max_order));
    auto points = projective_points<3>(f);
    const auto& lines = points;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < lines.size(); ++j)
            if (dot(f, points[i].coords, lines[j].coords) == 0)
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return BipartiteGraph::from_edges(static_cast<int>(points.size()), static_cast<int>(lines.size()), edges);
}

/// Totally isotropic lines of PG(3, q) under the symplectic form, sorted by basis.
inline std::vector<CanonicalLine<4>> isotropic_lines(const PrimeField& f)
{
    auto points = projective_points<4>(f);
    std::set<CanonicalLine<4>> lines;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            // B(x, x) = 0 always, so one basis pair decides isotropy
            if (symplectic_form(f, points[a].coords, points[b].coords) != 0) continue;
            lines.insert(CanonicalLine<4>::through(f, points[a], points[b]));
        }
    return {lines.begin(), lines.end()};
}

/// Incidence graph of the symplectic generalized quadrangle W(q): all points
/// of PG(3, q) against the totally isotropic lines.
inline BipartiteGraph wq_incidence(int q)
{
    PrimeField f(q);
    if (q > wq_max_order)
        throw std::invalid_argument("wq_incidence supports primes q <= " + std::to_string(wq_max_order));
    auto points = projective_points<4>(f);
    std::map<ProjectivePoint<4>, int> index;
    for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);

    auto lines = isotropic_lines(f);
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < lines.size(); ++j)
        for (const auto& p : lines[j].points(f)) edges.push_back({index.at(p), static_cast<int>(j)});
    return BipartiteGraph::from_edges(static_cast<int>(points.size()), static_cast<int>(lines.size()), edges);
}

namespace detail {
/// Appends `count` new W-vertices, each a pendant on V-vertex 0.
inline BipartiteGraph with_pendants(const BipartiteGraph& g, int count)
{
    std::vector<Edge> edges = g.edges();
    for (int k = 0; k < count; ++k) edges.push_back({0, g.w_count() + k});
    return BipartiteGraph::from_edges(g.v_count(), g.w_count() + count, edges);
}
} // namespace detail

/// Expansion of K_v plus w - v(v-1)/2 pendants: girth >= 6 with
/// v(v-1)/2 + w edges.
inline BipartiteGraph unbalanced6(int v, int w)
{
    if (v < 1) throw std::invalid_argument("unbalanced6 needs v >= 1");
    const int pairs = v * (v - 1) / 2;
    if (w < pairs)
        throw std::invalid_argument("unbalanced6 needs w >= v(v-1)/2 = " + std::to_string(pairs) + ", got w = " +
                                    std::to_string(w));
    return detail::with_pendants(expand(SimpleGraph::complete(v)), w - pairs);
}

/// Expansion of K_{ceil(v/2), floor(v/2)} (lower indices form the first part)
/// plus w - floor(v^2/4) pendants: girth >= 8 with floor(v^2/4) + w edges.
inline BipartiteGraph unbalanced8(int v, int w)
{
    if (v < 2) throw std::invalid_argument("unbalanced8 needs v >= 2");
    const int quarter = v * v / 4;
    if (w < quarter)
        throw std::invalid_argument("unbalanced8 needs w >= floor(v^2/4) = " + std::to_string(quarter) +
                                    ", got w = " + std::to_string(w));
    const int first = (v + 1) / 2;
    return detail::with_pendants(expand(SimpleGraph::complete_bipartite(first, v - first)), w - quarter);
}

} // namespace girthbound
