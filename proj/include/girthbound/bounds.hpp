#pragma once

// Size bounds for bipartite graphs of girth >= 6 and girth >= 8.
//
// Every polynomial is evaluated in arbitrary-precision integers. Asymmetric
// bounds normalize their arguments to (min, max) so callers never need to
// know which class plays the role of V.

#include "numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace girthbound {

namespace detail {
inline void require_positive(Count v, Count w, const char* what)
{
    if (v < 1 || w < 1)
        throw std::invalid_argument(std::string(what) + " needs v, w >= 1 (got " + std::to_string(v) + ", " +
                                    std::to_string(w) + ")");
}

/// Largest e in [0, hi] with f(e) <= 0, given f(0) <= 0 and a single sign change.
template <typename F>
Count last_nonpositive(Count hi, F f)
{
    if (f(hi) <= 0) return hi;
    Count lo = 0;
    while (hi - lo > 1) {
        Count mid = lo + (hi - lo) / 2;
        if (f(mid) <= 0) lo = mid;
        else hi = mid;
    }
    return lo;
}
} // namespace detail

/// O(v, w, e) = e^2 - w e - v w (v - 1). Nonpositive for girth >= 6 when v <= w.
inline BigInt eval_reiman(Count v, Count w, Count e)
{
    BigInt V = v, W = w, E = e;
    return E * E - W * E - V * W * (V - 1);
}

/// Largest e satisfying the girth-6 quadratic in both orientations.
inline Count reiman_max_e(Count v, Count w)
{
    detail::require_positive(v, w, "reiman_max_e");
    Count a = std::min(v, w), b = std::max(v, w);
    Count limit = a * b;
    Count narrow = detail::last_nonpositive(limit, [&](Count e) { return eval_reiman(a, b, e); });
    Count wide = detail::last_nonpositive(limit, [&](Count e) { return eval_reiman(b, a, e); });
    return std::min(narrow, wide);
}

/// P(v, w, e) = e^3 - (v + w) e^2 + 2 v w e - v^2 w^2.
inline BigInt eval_cubic(Count v, Count w, Count e)
{
    BigInt V = v, W = w, E = e;
    return E * E * E - (V + W) * E * E + 2 * V * W * E - V * V * W * W;
}

/// P evaluated at a rational size.
inline Rational eval_cubic(const Rational& v, const Rational& w, const Rational& e)
{
    return e * e * e - (v + w) * e * e + 2 * v * w * e - v * v * w * w;
}

/// 50-digit binary float, for evaluating P at irrational sizes.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real eval_cubic_real(const Real& v, const Real& w, const Real& e)
{
    return e * e * e - (v + w) * e * e + 2 * v * w * e - v * v * w * w;
}

/// Largest integer e >= 0 with P(v, w, e) <= 0. Bisection on [0, vw] is valid
/// because P has exactly one positive real root.
inline Count cubic_max_e(Count v, Count w)
{
    detail::require_positive(v, w, "cubic_max_e");
    return detail::last_nonpositive(v * w, [&](Count e) { return eval_cubic(v, w, e); });
}

/// e <= max + floor(min^2 / 4) when max >= floor(min^2 / 4); nullopt otherwise.
inline std::optional<Count> unbalanced_cap(Count v, Count w)
{
    Count a = std::max(v, w), b = std::min(v, w);
    Count quarter = b * b / 4;
    if (a < quarter) return std::nullopt;
    return a + quarter;
}

/// Coarse girth-6 bound: floor(sqrt(2 x y (x - 1))) if y <= x(x-1)/2, else
/// x(x-1)/2 + y, minimized over both role assignments (x, y).
inline Count girth6_coarse_bound(Count v, Count w)
{
    detail::require_positive(v, w, "girth6_coarse_bound");
    auto oriented = [](Count x, Count y) -> Count {
        Count pairs = x * (x - 1) / 2;
        if (y <= pairs) return static_cast<Count>(isqrt(2 * big(x) * y * (x - 1)));
        return pairs + y;
    };
    return std::min(oriented(v, w), oriented(w, v));
}

/// Pairs where P(v, w, 2^{1/3}(vw)^{2/3}) changes sign against the general rule.
inline bool girth8_exceptional_pair(Count v, Count w)
{
    auto a = std::min(v, w), b = std::max(v, w);
    return (a == 1 && b <= 2) || (a == 2 && b == 2) || (a == 3 && b == 3);
}

/// Coarse girth-8 bound: floor(2^{1/3} (vw)^{2/3}) if max <= floor(min^2/4),
/// else floor(min^2/4) + max. The exceptional small pairs use the second form.
inline Count girth8_coarse_bound(Count v, Count w)
{
    detail::require_positive(v, w, "girth8_coarse_bound");
    Count a = std::min(v, w), b = std::max(v, w);
    Count quarter = a * a / 4;
    if (girth8_exceptional_pair(v, w) || b > quarter) return quarter + b;
    BigInt p = big(v) * w;
    return static_cast<Count>(icbrt(2 * p * p));
}

/// v^{4/3} + 2v/3 - 2v^{2/3}/9 - 20 v^{1/3}/81, an upper estimate of the real
/// root of P(v, v, .). Relative error of the double evaluation is below 1e-12.
inline double balanced_approx(Count v)
{
    if (v < 1) throw std::invalid_argument("balanced_approx needs v >= 1");
    const double c = std::cbrt(static_cast<double>(v));
    const double x = static_cast<double>(v);
    return x * c + 2.0 * x / 3.0 - 2.0 * c * c / 9.0 - 20.0 * c / 81.0;
}

/// Exact value of the approximation when v = k^3.
inline Rational balanced_approx_cube(Count k)
{
    Rational K = k;
    return K * K * K * K + Rational(2, 3) * K * K * K - Rational(2, 9) * K * K - Rational(20, 81) * K;
}

struct CubicDiagnostics {
    BigInt s; ///< v + w
    BigInt p; ///< v w
    BigInt D; ///< the discriminant of P in e equals -v^2 w^2 D
};

/// D = 27p^2 + 4s^3 - 36sp - 4s^2 + 32p with s = v + w, p = v w.
inline BigInt discriminant_sp(const BigInt& s, const BigInt& p)
{
    return 27 * p * p + 4 * s * s * s - 36 * s * p - 4 * s * s + 32 * p;
}

inline CubicDiagnostics cubic_discriminant(Count v, Count w)
{
    detail::require_positive(v, w, "cubic_discriminant");
    CubicDiagnostics d;
    d.s = big(v) + w;
    d.p = big(v) * w;
    d.D = discriminant_sp(d.s, d.p);
    return d;
}

/// Closed form of P(v+1, w, e+1) - P(v, w, e).
inline BigInt growth_delta(Count v, Count w, Count e)
{
    BigInt V = v, W = w, E = e;
    return 2 * E * E + (1 - 2 * V) * E + (W - W * W) * (2 * V + 1) - V;
}

// ---------------------------------------------------------------------------
// Aggregated report

enum class BoundMethod { reiman, cubic, cap, coarse };

inline const char* method_name(BoundMethod m)
{
    switch (m) {
    case BoundMethod::reiman: return "reiman";
    case BoundMethod::cubic: return "cubic";
    case BoundMethod::cap: return "cap";
    case BoundMethod::coarse: return "coarse";
    }
    return "?";
}

inline std::optional<BoundMethod> parse_method(const std::string& name)
{
    for (auto m : {BoundMethod::reiman, BoundMethod::cubic, BoundMethod::cap, BoundMethod::coarse})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

struct BoundReport {
    Count v = 0, w = 0;
    int girth_target = 8;
    /// Keyed in tie-break order reiman < cubic < cap < coarse.
    std::map<BoundMethod, Count> values;
    BoundMethod binding = BoundMethod::reiman;

    Count binding_value() const { return values.at(binding); }
    std::optional<Count> value(BoundMethod m) const
    {
        auto it = values.find(m);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
};

/// All bounds valid for bipartite graphs on (v, w) with girth >= girth_target.
/// Girth 6 carries reiman and the girth-6 coarse bound; girth 8 adds the cubic
/// bound, the unbalanced cap and swaps in the girth-8 coarse bound.
inline BoundReport bound_report(Count v, Count w, int girth_target)
{
    detail::require_positive(v, w, "bound_report");
    if (girth_target != 6 && girth_target != 8)
        throw std::invalid_argument("girth target must be 6 or 8, got " + std::to_string(girth_target));
    BoundReport r;
    r.v = v;
    r.w = w;
    r.girth_target = girth_target;
    r.values[BoundMethod::reiman] = reiman_max_e(v, w);
    if (girth_target == 8) {
        r.values[BoundMethod::cubic] = cubic_max_e(v, w);
        if (auto cap = unbalanced_cap(v, w)) r.values[BoundMethod::cap] = *cap;
        r.values[BoundMethod::coarse] = girth8_coarse_bound(v, w);
    } else {
        r.values[BoundMethod::coarse] = girth6_coarse_bound(v, w);
    }
    // std::map iterates in tie-break order, so the first minimum wins
    auto best = std::min_element(r.values.begin(), r.values.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    r.binding = best->first;
    return r;
}

} // namespace girthbound
