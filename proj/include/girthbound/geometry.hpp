#pragma once

// Prime fields and the projective spaces PG(n-1, q) over them.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace girthbound {

inline bool is_prime(int n)
{
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Integers modulo a prime q. Elements are plain ints in [0, q).
class PrimeField {
public:
    explicit PrimeField(int q) : q_(q)
    {
        if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
    }

    int order() const { return q_; }

    int reduce(long long x) const
    {
        long long r = x % q_;
        return static_cast<int>(r < 0 ? r + q_ : r);
    }

    int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
    int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
    int neg(int a) const { return reduce(-static_cast<long long>(a)); }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    int inv(int a) const
    {
        a = reduce(a);
        if (a == 0) throw std::domain_error("zero has no inverse");
        int t = 0, new_t = 1, r = q_, new_r = a;
        while (new_r != 0) {
            int quot = r / new_r;
            t = std::exchange(new_t, t - quot * new_t);
            r = std::exchange(new_r, r - quot * new_r);
        }
        return reduce(t);
    }

private:
    int q_;
};

/// A projective point: a nonzero N-vector scaled so its first nonzero coordinate is 1.
template <std::size_t N>
struct ProjectivePoint {
    std::array<int, N> coords{};

    static ProjectivePoint normalized(const PrimeField& f, std::array<int, N> raw)
    {
        auto lead = std::find_if(raw.begin(), raw.end(), [&](int c) { return f.reduce(c) != 0; });
        if (lead == raw.end()) throw std::invalid_argument("the zero vector is not a projective point");
        int scale = f.inv(*lead);
        ProjectivePoint p;
        for (std::size_t k = 0; k < N; ++k) p.coords[k] = f.mul(raw[k], scale);
        return p;
    }

    friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// All points of PG(N-1, q), in lexicographic coordinate order.
template <std::size_t N>
std::vector<ProjectivePoint<N>> projective_points(const PrimeField& f)
{
    const int q = f.order();
    std::vector<ProjectivePoint<N>> points;
    std::array<int, N> raw{};
    // odometer over all q^N vectors; keep the normalized ones
    while (true) {
        auto lead = std::find_if(raw.begin(), raw.end(), [](int c) { return c != 0; });
        if (lead != raw.end() && *lead == 1) points.push_back(ProjectivePoint<N>{raw});
        std::size_t k = N;
        while (k > 0 && raw[k - 1] == q - 1) raw[--k] = 0;
        if (k == 0) break;
        ++raw[k - 1];
    }
    std::sort(points.begin(), points.end());
    return points;
}

/// A projective line as the 2 x N reduced row-echelon basis of its 2-subspace.
/// The RREF is unique, so equal lines have identical bases.
template <std::size_t N>
struct CanonicalLine {
    std::array<std::array<int, N>, 2> basis{};

    /// Line through two distinct points.
    static CanonicalLine through(const PrimeField& f, const ProjectivePoint<N>& a, const ProjectivePoint<N>& b)
    {
        std::array<std::array<int, N>, 2> m{a.coords, b.coords};
        std::size_t row = 0;
        for (std::size_t col = 0; col < N && row < 2; ++col) {
            std::size_t pivot = row;
            while (pivot < 2 && m[pivot][col] == 0) ++pivot;
            if (pivot == 2) continue;
            std::swap(m[row], m[pivot]);
            int scale = f.inv(m[row][col]);
            for (auto& x : m[row]) x = f.mul(x, scale);
            for (std::size_t other = 0; other < 2; ++other) {
                if (other == row || m[other][col] == 0) continue;
                int factor = m[other][col];
                for (std::size_t k = 0; k < N; ++k) m[other][k] = f.sub(m[other][k], f.mul(factor, m[row][k]));
            }
            ++row;
        }
        if (row != 2) throw std::invalid_argument("points do not span a line");
        return CanonicalLine{m};
    }

    /// The q + 1 points on the line, normalized.
    std::vector<ProjectivePoint<N>> points(const PrimeField& f) const
    {
        std::vector<ProjectivePoint<N>> out;
        auto combo = [&](int s, int t) {
            std::array<int, N> raw{};
            for (std::size_t k = 0; k < N; ++k) raw[k] = f.add(f.mul(s, basis[0][k]), f.mul(t, basis[1][k]));
            return ProjectivePoint<N>::normalized(f, raw);
        };
        out.push_back(combo(0, 1));
        for (int t = 0; t < f.order(); ++t) out.push_back(combo(1, t));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend auto operator<=>(const CanonicalLine&, const CanonicalLine&) = default;
};

template <std::size_t N>
int dot(const PrimeField& f, const std::array<int, N>& x, const std::array<int, N>& y)
{
    long long acc = 0;
    for (std::size_t k = 0; k < N; ++k) acc += static_cast<long long>(x[k]) * y[k];
    return f.reduce(acc);
}

/// The alternating form x1 y2 - x2 y1 + x3 y4 - x4 y3 on the 4-space.
inline int symplectic_form(const PrimeField& f, const std::array<int, 4>& x, const std::array<int, 4>& y)
{
    long long value = static_cast<long long>(x[0]) * y[1] - static_cast<long long>(x[1]) * y[0] +
                      static_cast<long long>(x[2]) * y[3] - static_cast<long long>(x[3]) * y[2];
    return f.reduce(value);
}

} // namespace girthbound
