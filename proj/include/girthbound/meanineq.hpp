#pragma once

// The generalized Atkinson-Watterson-Moran inequality over nonnegative
// rational matrices, evaluated exactly.

#include "graph.hpp"
#include "numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace girthbound {

/// Rectangular matrix of nonnegative rationals with cached margins.
class NonnegMatrix {
public:
    explicit NonnegMatrix(std::vector<std::vector<Rational>> rows) : entries_(std::move(rows))
    {
        if (entries_.empty() || entries_.front().empty()) throw std::invalid_argument("matrix must be nonempty");
        const std::size_t w = entries_.front().size();
        row_sums_.assign(entries_.size(), Rational(0));
        col_sums_.assign(w, Rational(0));
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].size() != w)
                throw std::invalid_argument("row " + std::to_string(i) + " has " + std::to_string(entries_[i].size()) +
                                            " entries, expected " + std::to_string(w));
            for (std::size_t j = 0; j < w; ++j) {
                const Rational& a = entries_[i][j];
                if (a < 0)
                    throw std::invalid_argument("negative entry " + to_string(a) + " at (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ")");
                row_sums_[i] += a;
                col_sums_[j] += a;
                total_ += a;
            }
        }
    }

    static NonnegMatrix from_ints(const std::vector<std::vector<long long>>& rows)
    {
        std::vector<std::vector<Rational>> r;
        for (const auto& row : rows) {
            r.emplace_back();
            for (long long x : row) r.back().emplace_back(x);
        }
        return NonnegMatrix(std::move(r));
    }

    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return entries_.front().size(); }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    const std::vector<std::vector<Rational>>& entries() const { return entries_; }
    const std::vector<Rational>& row_sums() const { return row_sums_; }
    const std::vector<Rational>& col_sums() const { return col_sums_; }
    const Rational& total() const { return total_; }

    Rational min_row_sum() const { return *std::min_element(row_sums_.begin(), row_sums_.end()); }
    Rational min_col_sum() const { return *std::min_element(col_sums_.begin(), col_sums_.end()); }

    bool constant_margins() const
    {
        auto constant = [](const std::vector<Rational>& xs) {
            return std::all_of(xs.begin(), xs.end(), [&](const Rational& x) { return x == xs.front(); });
        };
        return constant(row_sums_) && constant(col_sums_);
    }

private:
    std::vector<std::vector<Rational>> entries_;
    std::vector<Rational> row_sums_;
    std::vector<Rational> col_sums_;
    Rational total_ = 0;
};

/// Sum of a_ij (a_i* - rho)(a_*j - gamma).
inline Rational phi(const NonnegMatrix& m, const Rational& rho, const Rational& gamma)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) acc += m.at(i, j) * (m.row_sums()[i] - rho) * (m.col_sums()[j] - gamma);
    return acc;
}

/// Sum of a_ij a_i* a_*j.
inline Rational psi(const NonnegMatrix& m)
{
    return phi(m, Rational(0), Rational(0));
}

/// e (e/v - rho)(e/w - gamma).
inline Rational awm_rhs(const NonnegMatrix& m, const Rational& rho, const Rational& gamma)
{
    const Rational& e = m.total();
    Rational v = static_cast<long long>(m.rows()), w = static_cast<long long>(m.cols());
    return e * (e / v - rho) * (e / w - gamma);
}

/// e^3 / (v w), the lower bound on psi.
inline Rational psi_lower_bound(const NonnegMatrix& m)
{
    const Rational& e = m.total();
    return e * e * e / Rational(static_cast<long long>(m.rows() * m.cols()));
}

/// -gamma sum a_i*^2 - rho sum a_*j^2 + rho gamma e, which equals phi - psi.
inline Rational phi_minus_psi(const NonnegMatrix& m, const Rational& rho, const Rational& gamma)
{
    Rational rows = 0, cols = 0;
    for (const auto& r : m.row_sums()) rows += r * r;
    for (const auto& c : m.col_sums()) cols += c * c;
    return -gamma * rows - rho * cols + rho * gamma * m.total();
}

struct IneqVerdict {
    Rational phi;
    Rational rhs;
    bool hypotheses_hold = false; ///< every a_i* >= 2 rho and a_*j >= 2 gamma
    bool satisfied = false;       ///< phi >= rhs
    bool equality = false;        ///< phi == rhs
};

inline bool hypotheses_hold(const NonnegMatrix& m, const Rational& rho, const Rational& gamma)
{
    return m.min_row_sum() >= 2 * rho && m.min_col_sum() >= 2 * gamma;
}

/// Weakened regime a_i* >= rho, a_*j >= gamma, where the conclusion can fail.
inline bool weak_hypotheses_hold(const NonnegMatrix& m, const Rational& rho, const Rational& gamma)
{
    return m.min_row_sum() >= rho && m.min_col_sum() >= gamma;
}

inline IneqVerdict check(const NonnegMatrix& m, const Rational& rho, const Rational& gamma)
{
    if (rho < 0 || gamma < 0) throw std::invalid_argument("rho and gamma must be nonnegative");
    IneqVerdict v;
    v.phi = phi(m, rho, gamma);
    v.rhs = awm_rhs(m, rho, gamma);
    v.hypotheses_hold = hypotheses_hold(m, rho, gamma);
    v.satisfied = v.phi >= v.rhs;
    v.equality = v.phi == v.rhs;
    return v;
}

/// 0/1 reduced incidence matrix of a bipartite graph (rows = class V).
inline NonnegMatrix incidence_matrix(const BipartiteGraph& g)
{
    if (g.v_count() == 0 || g.w_count() == 0) throw std::invalid_argument("incidence matrix of an empty class");
    std::vector<std::vector<Rational>> rows(g.v_count(), std::vector<Rational>(g.w_count(), Rational(0)));
    for (const Edge& e : g.edges()) rows[e.v][e.w] = 1;
    return NonnegMatrix(std::move(rows));
}

/// Scans rho = a/den, gamma = b/den over the weakened regime and returns the
/// first pair (row-major in a, b) at which phi < rhs.
inline std::optional<std::pair<Rational, Rational>> find_weakened_counterexample(const NonnegMatrix& m, int den = 4)
{
    const Rational rmax = m.min_row_sum(), cmax = m.min_col_sum();
    for (long long a = 0; Rational(a, den) <= rmax; ++a)
        for (long long b = 0; Rational(b, den) <= cmax; ++b) {
            Rational rho(a, den), gamma(b, den);
            if (phi(m, rho, gamma) < awm_rhs(m, rho, gamma)) return std::make_pair(rho, gamma);
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reproducible random instances for property checks

struct AwmInstance {
    NonnegMatrix matrix;
    Rational rho;
    Rational gamma;
};

/// Random rational in [0, num_max] with denominator <= 64.
inline Rational random_rational(std::mt19937_64& rng, int num_max = 64)
{
    std::uniform_int_distribution<int> num(0, num_max), den(1, 64);
    return Rational(num(rng), den(rng));
}

/// Random rows x cols matrix with entries p/q (q <= 64); any zero row or
/// column gets one entry bumped so every margin is positive.
inline NonnegMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    std::bernoulli_distribution sparse(0.3);
    for (auto& row : a)
        for (auto& x : row) x = sparse(rng) ? Rational(0) : random_rational(rng);
    for (std::size_t i = 0; i < rows; ++i)
        if (std::all_of(a[i].begin(), a[i].end(), [](const Rational& x) { return x == 0; }))
            a[i][i % cols] = Rational(1, 64);
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rows; ++i) zero = zero && a[i][j] == 0;
        if (zero) a[j % rows][j] = Rational(1, 64);
    }
    return NonnegMatrix(std::move(a));
}

/// Random instance with every a_i* >= 2 rho and a_*j >= 2 gamma: rho, gamma drawn in
/// [0, min margin / 2] as k/64 fractions of that range.
inline AwmInstance random_awm_instance(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    NonnegMatrix m = random_matrix(rng, rows, cols);
    std::uniform_int_distribution<int> frac(0, 64);
    Rational rho = m.min_row_sum() / 2 * Rational(frac(rng), 64);
    Rational gamma = m.min_col_sum() / 2 * Rational(frac(rng), 64);
    return {std::move(m), rho, gamma};
}

/// Random matrix whose rows all sum to r and columns all sum to c (r*rows == c*cols):
/// a sum of scaled permutation-like 0/1 patterns on a circulant support.
inline NonnegMatrix random_constant_margin_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols)
{
    // superpose shifted "diagonals" of an lcm(rows, cols) circulant; each
    // diagonal contributes equally to every row and every column
    std::size_t l = std::lcm(rows, cols);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
    std::uniform_int_distribution<std::size_t> shifts(1, cols);
    std::size_t layers = shifts(rng);
    for (std::size_t layer = 0; layer < layers; ++layer) {
        Rational weight = random_rational(rng) + Rational(1, 64);
        std::size_t shift = std::uniform_int_distribution<std::size_t>(0, l - 1)(rng);
        for (std::size_t k = 0; k < l; ++k) a[k % rows][(k + shift) % cols] += weight;
    }
    return NonnegMatrix(std::move(a));
}

} // namespace girthbound
