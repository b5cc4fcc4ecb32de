#pragma once

// Exhaustive branch-and-bound for the maximum size of a bipartite graph on
// (v, w) vertices with girth >= 6 or >= 8.
//
// The search fills the biadjacency matrix cell by cell in row-major order,
// trying 1 before 0. Three devices keep it small:
//   * cycle check: an edge (i, j) is added only if i and j are farther apart
//     than min_girth - 2 in the current graph (bitmask BFS);
//   * symmetry breaking: rows and columns are both kept in non-increasing
//     lexicographic order. Every 0/1 matrix has such a doubly lexical
//     ordering, so no isomorphism class is lost;
//   * size bound: rows i..R-1 carry at most f(R-i) edges, where f(k) is the
//     exact optimum on k rows computed first by the same search.
// None of the closed-form bounds are used for pruning, so a certificate can be
// compared against them without circularity.

#include "bounds.hpp"
#include "graph.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace girthbound {

struct SearchLimits {
    /// Node budget for each independent subtree (and each sub-search).
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::milliseconds timeout{60'000};
    int threads = 1;
};

struct SearchCertificate {
    int v = 0, w = 0;
    int min_girth = 8;
    Count e_max = 0;
    BipartiteGraph witness;
    bool exhaustive = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

namespace detail {

using Mask = std::uint64_t;

inline constexpr int max_search_side = 64;

template <typename F>
void for_each_bit(Mask m, F f)
{
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

/// Search state over an R x C biadjacency matrix (rows are one class).
class MatrixSearch {
public:
    using Clock = std::chrono::steady_clock;

    MatrixSearch(int rows, int cols, int min_girth, const std::vector<Count>& row_optimum, std::uint64_t max_nodes,
                 Clock::time_point deadline)
        : rows_(rows), cols_(cols), girth_(min_girth), optimum_(row_optimum), max_nodes_(max_nodes),
          deadline_(deadline), row_mask_(rows, 0), col_mask_(cols, 0), col_tied_(rows + 1, std::vector<char>(cols, 1))
    {
    }

    /// Restores a partial assignment of the first `fixed_rows` rows.
    void load_prefix(const std::vector<Mask>& prefix)
    {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            for_each_bit(prefix[i], [&](int j) { set(static_cast<int>(i), j); });
            advance_ties(static_cast<int>(i));
        }
        fixed_rows_ = static_cast<int>(prefix.size());
    }

    /// Explores the subtree below the loaded prefix, looking for graphs with
    /// more than `floor_size` edges.
    void run(Count floor_size, bool stop_at_first_leaf = false)
    {
        best_ = floor_size;
        stop_at_first_leaf_ = stop_at_first_leaf;
        if (fixed_rows_ == rows_) {
            leaf();
            return;
        }
        dfs(fixed_rows_, 0, 0, fixed_rows_ > 0);
    }

    /// Enumerates every admissible row-0 assignment, in search order.
    std::vector<Mask> first_rows()
    {
        frontier_mode_ = true;
        dfs(0, 0, 0, false);
        frontier_mode_ = false;
        return frontier_;
    }

    Count best() const { return best_; }
    const std::vector<Mask>& best_rows() const { return best_rows_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool bit(int i, int j) const { return (row_mask_[i] >> j) & 1U; }

    void set(int i, int j)
    {
        row_mask_[i] |= Mask{1} << j;
        col_mask_[j] |= Mask{1} << i;
        ++edges_;
    }

    void unset(int i, int j)
    {
        row_mask_[i] &= ~(Mask{1} << j);
        col_mask_[j] &= ~(Mask{1} << i);
        --edges_;
    }

    /// Column ties after row i is complete.
    void advance_ties(int i)
    {
        for (int j = 0; j + 1 < cols_; ++j)
            col_tied_[i + 1][j] = col_tied_[i][j] && bit(i, j) == bit(i, j + 1);
    }

    /// Rows within distance <= 2 of row i, including i itself.
    Mask rows_near_row(int i) const
    {
        Mask out = Mask{1} << i;
        for_each_bit(row_mask_[i], [&](int j) { out |= col_mask_[j]; });
        return out;
    }

    /// Rows at distance 1 or 3 from column j.
    Mask rows_near_col(int j) const
    {
        Mask out = 0;
        for_each_bit(col_mask_[j], [&](int i) {
            for_each_bit(row_mask_[i], [&](int jj) { out |= col_mask_[jj]; });
        });
        return out;
    }

    /// Adding (i, j) closes a cycle of length dist(i, j) + 1.
    bool edge_allowed(int i, int j) const
    {
        Mask near_col = rows_near_col(j);
        if (girth_ <= 6) return !((near_col >> i) & 1U);
        return (near_col & rows_near_row(i)) == 0;
    }

    bool over_budget()
    {
        ++nodes_;
        if (nodes_ > max_nodes_) aborted_ = true;
        else if ((nodes_ & 0xFFF) == 0 && Clock::now() > deadline_) aborted_ = true;
        return aborted_;
    }

    void leaf()
    {
        if (edges_ > best_) {
            best_ = edges_;
            best_rows_ = row_mask_;
        }
        if (stop_at_first_leaf_) done_ = true;
    }

    void dfs(int i, int j, Count row_edges, bool row_tied)
    {
        if (done_ || aborted_ || over_budget()) return;
        if (j == cols_) {
            if (frontier_mode_) {
                frontier_.push_back(row_mask_[0]);
                return;
            }
            advance_ties(i);
            if (i + 1 == rows_) leaf();
            else dfs(i + 1, 0, 0, true);
            return;
        }
        if (!frontier_mode_) {
            const Count remaining_rows = rows_ - i - 1;
            const Count completed = edges_ - row_edges;
            Count tail = row_edges + (cols_ - j) + optimum_[remaining_rows];
            if (static_cast<std::size_t>(rows_ - i) < optimum_.size()) tail = std::min(tail, optimum_[rows_ - i]);
            if (completed + tail <= best_) return;
        }

        bool one_ok = true;
        if (row_tied && !bit(i - 1, j)) one_ok = false;                        // row i <= row i-1
        if (j > 0 && col_tied_[i][j - 1] && !bit(i, j - 1)) one_ok = false; // column j <= column j-1
        if (one_ok && edge_allowed(i, j)) {
            set(i, j);
            dfs(i, j + 1, row_edges + 1, row_tied);
            unset(i, j);
        }
        dfs(i, j + 1, row_edges, row_tied && !bit(i - 1, j));
    }

    int rows_, cols_, girth_;
    std::vector<Count> optimum_; ///< optimum_[k] = exact maximum on k rows (k < rows_)
    std::uint64_t max_nodes_;
    Clock::time_point deadline_;

    std::vector<Mask> row_mask_, col_mask_;
    std::vector<std::vector<char>> col_tied_; ///< col_tied_[i][j]: columns j, j+1 agree on rows < i
    Count edges_ = 0;
    int fixed_rows_ = 0;

    Count best_ = -1;
    std::vector<Mask> best_rows_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool done_ = false;
    bool stop_at_first_leaf_ = false;
    bool frontier_mode_ = false;
    std::vector<Mask> frontier_;
};

struct MatrixResult {
    Count best = 0;
    std::vector<Mask> rows;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
};

/// Maximum on an R x C matrix given the optima for fewer rows. Subtrees below
/// each admissible first row are explored independently (each starting from
/// the greedy floor), so the outcome does not depend on the worker count.
inline MatrixResult solve_matrix(int rows, int cols, int min_girth, const std::vector<Count>& optimum,
                                 const SearchLimits& limits, MatrixSearch::Clock::time_point deadline)
{
    MatrixResult result;

    // The greedy dive never backtracks, so it is exempt from the budgets and
    // always leaves a witness behind.
    MatrixSearch greedy(rows, cols, min_girth, optimum, std::numeric_limits<std::uint64_t>::max(),
                        MatrixSearch::Clock::time_point::max());
    greedy.run(-1, /*stop_at_first_leaf=*/true);
    result.nodes += greedy.nodes();
    result.best = greedy.best();
    result.rows = greedy.best_rows();

    MatrixSearch splitter(rows, cols, min_girth, optimum, limits.max_nodes, deadline);
    std::vector<Mask> frontier = splitter.first_rows();
    result.nodes += splitter.nodes();

    struct Outcome {
        Count best = -1;
        std::vector<Mask> rows;
        bool aborted = false;
        std::uint64_t nodes = 0;
    };
    std::vector<Outcome> outcomes(frontier.size());
    auto explore = [&](std::size_t k) {
        MatrixSearch s(rows, cols, min_girth, optimum, limits.max_nodes, deadline);
        s.load_prefix({frontier[k]});
        s.run(result.best);
        outcomes[k] = {s.best(), s.best_rows(), s.aborted(), s.nodes()};
    };

    const int workers = std::max(1, std::min<int>(limits.threads, static_cast<int>(frontier.size())));
    if (workers == 1) {
        for (std::size_t k = 0; k < frontier.size(); ++k) explore(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < frontier.size(); k = next++) explore(k);
            });
    }

    for (const Outcome& o : outcomes) {
        result.nodes += o.nodes;
        if (o.aborted) result.exhaustive = false;
        if (!o.rows.empty() && o.best > result.best) {
            result.best = o.best;
            result.rows = o.rows;
        }
    }
    if (splitter.aborted()) result.exhaustive = false;
    return result;
}

} // namespace detail

/// Maximum number of edges of a bipartite graph on v + w vertices whose
/// cycles all have length >= min_girth (6 or 8), with a witness.
///
/// Guaranteed exhaustive within the default budgets for v * w <= 36. The
/// larger class is laid out as matrix rows; the witness is reported in the
/// caller's orientation.
inline SearchCertificate max_size(int v, int w, int min_girth, const SearchLimits& limits = {})
{
    if (v < 1 || w < 1) throw std::invalid_argument("max_size needs v, w >= 1");
    if (v > detail::max_search_side || w > detail::max_search_side)
        throw std::invalid_argument("max_size supports class sizes up to 64");
    if (min_girth != 6 && min_girth != 8) throw std::invalid_argument("min_girth must be 6 or 8");
    if (limits.threads < 1) throw std::invalid_argument("threads must be >= 1");

    const auto start = detail::MatrixSearch::Clock::now();
    const auto deadline = start + limits.timeout;
    const bool transpose = w > v;
    const int rows = transpose ? w : v, cols = transpose ? v : w;

    SearchCertificate cert;
    cert.v = v;
    cert.w = w;
    cert.min_girth = min_girth;
    cert.exhaustive = true;

    std::vector<Count> optimum{0};
    detail::MatrixResult last;
    for (int k = 1; k <= rows; ++k) {
        last = detail::solve_matrix(k, cols, min_girth, optimum, limits, deadline);
        cert.nodes_explored += last.nodes;
        cert.exhaustive = cert.exhaustive && last.exhaustive;
        // an unfinished sub-search only yields the trivial bound
        optimum.push_back(last.exhaustive ? last.best : optimum.back() + cols);
    }

    std::vector<Edge> edges;
    for (int i = 0; i < rows; ++i)
        detail::for_each_bit(last.rows[i], [&](int j) { edges.push_back(transpose ? Edge{j, i} : Edge{i, j}); });
    cert.witness = BipartiteGraph::from_edges(v, w, edges);
    cert.e_max = cert.witness.size();
    cert.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(detail::MatrixSearch::Clock::now() - start);
    return cert;
}

/// The closed-form bound a search result is measured against: Reiman for girth 6,
/// the cubic bound (and the unbalanced cap when defined) for girth 8.
inline Count closed_form_bound(int v, int w, int min_girth)
{
    if (min_girth == 6) return reiman_max_e(v, w);
    Count bound = cubic_max_e(v, w);
    if (auto cap = unbalanced_cap(v, w)) bound = std::min(bound, *cap);
    return bound;
}

/// True iff the exhaustive maximum respects the closed-form bound; nullopt when
/// the search ran out of budget.
inline std::optional<bool> certify_bound(int v, int w, int min_girth, const SearchLimits& limits = {})
{
    SearchCertificate cert = max_size(v, w, min_girth, limits);
    if (!cert.exhaustive) return std::nullopt;
    return cert.e_max <= closed_form_bound(v, w, min_girth);
}

} // namespace girthbound
