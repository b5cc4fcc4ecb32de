#include <girthbound/bounds.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace girthbound;

namespace {

// Oracles: plain linear scans over 0..vw.
Count scan_cubic_max(Count v, Count w)
{
    Count best = 0;
    for (Count e = 0; e <= v * w; ++e)
        if (eval_cubic(v, w, e) <= 0) best = e;
    return best;
}

Count scan_reiman_max(Count a, Count b)
{
    Count best = 0;
    for (Count e = 0; e <= a * b; ++e)
        if (eval_reiman(a, b, e) <= 0) best = e;
    return best;
}

} // namespace

TEST(Reiman, Evaluation)
{
    EXPECT_EQ(eval_reiman(7, 7, 21), 0);
    EXPECT_EQ(eval_reiman(1, 1, 1), 0);
    EXPECT_EQ(eval_reiman(4, 6, 9), -45);
    EXPECT_EQ(eval_reiman(13, 13, 52), 0);
}

TEST(Reiman, MaxSize)
{
    EXPECT_EQ(reiman_max_e(7, 7), 21);
    EXPECT_EQ(reiman_max_e(3, 3), 6);
    EXPECT_EQ(reiman_max_e(4, 4), 9);
    for (Count w = 1; w <= 30; ++w) {
        EXPECT_EQ(reiman_max_e(1, w), w);
        EXPECT_EQ(reiman_max_e(w, 1), w);
    }
    EXPECT_THROW(reiman_max_e(0, 3), std::invalid_argument);
}

TEST(Reiman, AgreesWithScanInBothOrientations)
{
    for (Count v = 1; v <= 25; ++v)
        for (Count w = 1; w <= 25; ++w) {
            Count a = std::min(v, w), b = std::max(v, w);
            EXPECT_EQ(reiman_max_e(v, w), std::min(scan_reiman_max(a, b), scan_reiman_max(b, a)));
        }
}

TEST(Reiman, NarrowOrientationBinds)
{
    for (Count v = 1; v <= 50; ++v)
        for (Count w = v; w <= 50; ++w) EXPECT_LE(scan_reiman_max(v, w), scan_reiman_max(w, v)) << v << "," << w;
}

TEST(Cubic, Evaluation)
{
    EXPECT_EQ(eval_cubic(15, 15, 45), 0);
    EXPECT_EQ(eval_cubic(1, 3, 3), 0);
    EXPECT_EQ(eval_cubic(15, 15, 46), 3931);
    EXPECT_EQ(eval_cubic(40, 40, 160), 0);
    EXPECT_EQ(eval_cubic(5, 5, 10), -125);
    EXPECT_EQ(eval_cubic(5, 5, 11), 46);
    EXPECT_EQ(eval_cubic(8, 8, 19), -581);
    EXPECT_EQ(eval_cubic(8, 8, 20), 64);
    // v = 1 factorization (e - w)(e^2 - e + w)
    for (Count w = 1; w <= 10; ++w)
        for (Count e = 0; e <= 3 * w; ++e) EXPECT_EQ(eval_cubic(1, w, e), BigInt(e - w) * (e * e - e + w));
}

TEST(Cubic, MaxSize)
{
    EXPECT_EQ(cubic_max_e(15, 15), 45);
    EXPECT_EQ(cubic_max_e(5, 5), 10);
    EXPECT_EQ(cubic_max_e(8, 8), 19);
    EXPECT_EQ(cubic_max_e(10, 4), 15);
    for (Count w = 1; w <= 30; ++w) EXPECT_EQ(cubic_max_e(1, w), w);
    EXPECT_THROW(cubic_max_e(3, 0), std::invalid_argument);
}

TEST(Cubic, BisectionAgreesWithScan)
{
    for (Count v = 1; v <= 30; ++v)
        for (Count w = 1; w <= 30; ++w) EXPECT_EQ(cubic_max_e(v, w), scan_cubic_max(v, w)) << v << "," << w;
}

TEST(Cubic, Symmetric)
{
    for (Count v = 1; v <= 50; ++v)
        for (Count w = 1; w <= 50; ++w) EXPECT_EQ(cubic_max_e(v, w), cubic_max_e(w, v));
}

TEST(Cubic, SignChangesAtMostOnce)
{
    for (Count v = 1; v <= 30; ++v)
        for (Count w = 1; w <= 30; ++w) {
            int changes = 0;
            bool positive = false;
            for (Count e = 0; e <= v * w; ++e) {
                bool now = eval_cubic(v, w, e) > 0;
                if (now != positive) ++changes;
                positive = now;
            }
            EXPECT_LE(changes, 1);
        }
}

TEST(Cubic, TopOfBracketIsNonnegative)
{
    // P(v, w, vw) = v^2 w^2 (v - 1)(w - 1)
    for (Count v = 1; v <= 20; ++v)
        for (Count w = 1; w <= 20; ++w) EXPECT_EQ(eval_cubic(v, w, v * w), BigInt(v * v * w * w) * (v - 1) * (w - 1));
}

TEST(Cap, Examples)
{
    EXPECT_EQ(unbalanced_cap(10, 4), 14);
    EXPECT_EQ(unbalanced_cap(4, 10), 14);
    EXPECT_FALSE(unbalanced_cap(15, 15).has_value());
    EXPECT_EQ(unbalanced_cap(4, 4), 8);
}

TEST(Coarse, GirthSix)
{
    EXPECT_EQ(girth6_coarse_bound(7, 7), 24);
    EXPECT_EQ(girth6_coarse_bound(4, 10), 16);
    EXPECT_EQ(girth6_coarse_bound(10, 4), 16);
    EXPECT_EQ(girth6_coarse_bound(1, 1), 1);
}

TEST(Coarse, GirthEight)
{
    EXPECT_EQ(girth8_coarse_bound(15, 15), 46);
    EXPECT_EQ(girth8_coarse_bound(4, 10), 14);
    EXPECT_EQ(girth8_coarse_bound(2, 2), 3);
    EXPECT_EQ(girth8_coarse_bound(3, 3), 5);
    EXPECT_EQ(girth8_coarse_bound(1, 1), 1);
    EXPECT_EQ(girth8_coarse_bound(4, 4), 8);
}

TEST(Coarse, CubeRootBranchIsExactFloor)
{
    for (Count v = 4; v <= 40; ++v)
        for (Count w = 4; w <= 40; ++w) {
            if (std::max(v, w) > std::min(v, w) * std::min(v, w) / 4) continue;
            BigInt m = girth8_coarse_bound(v, w);
            BigInt target = 2 * BigInt(v * w) * (v * w);
            EXPECT_LE(m * m * m, target);
            EXPECT_GT((m + 1) * (m + 1) * (m + 1), target);
        }
}

TEST(Coarse, CubicBoundIsSharperInCubeRootRegime)
{
    for (Count v = 1; v <= 40; ++v)
        for (Count w = 1; w <= 40; ++w) {
            Count a = std::min(v, w), b = std::max(v, w);
            if (a >= 4 && b <= a * a / 4) { EXPECT_LE(cubic_max_e(v, w), girth8_coarse_bound(v, w)) << v << "," << w; }
        }
}

// The square-root alternative is a relaxation of the quadratic; the linear
// alternative is attained by a construction and so can beat the quadratic.
TEST(Coarse, GirthSixAlternativesAgainstQuadratic)
{
    for (Count v = 1; v <= 40; ++v)
        for (Count w = 1; w <= 40; ++w) {
            Count sharp = reiman_max_e(v, w);
            for (auto [x, y] : {std::pair{v, w}, std::pair{w, v}}) {
                Count pairs = x * (x - 1) / 2;
                if (y <= pairs) {
                    Count root = static_cast<Count>(isqrt(2 * big(x) * y * (x - 1)));
                    EXPECT_LE(sharp, root) << v << "," << w;
                } else {
                    EXPECT_LE(pairs + y, sharp) << v << "," << w;
                }
            }
        }
}

TEST(BalancedApprox, Values)
{
    EXPECT_NEAR(balanced_approx(1), 97.0 / 81.0, 1e-14);
    EXPECT_NEAR(balanced_approx(8), 16.0 + 16.0 / 3.0 - 8.0 / 9.0 - 40.0 / 81.0, 1e-12);
    EXPECT_NEAR(balanced_approx(8), 19.9506, 1e-4);
    EXPECT_LT(static_cast<double>(cubic_max_e(8, 8)), balanced_approx(8));
    EXPECT_EQ(balanced_approx_cube(1), Rational(97, 81));
    EXPECT_EQ(balanced_approx_cube(2), Rational(16) + Rational(16, 3) - Rational(8, 9) - Rational(40, 81));
    for (Count k = 1; k <= 100; ++k) {
        double exact = static_cast<double>(balanced_approx_cube(k));
        EXPECT_NEAR(balanced_approx(k * k * k), exact, 1e-12 * exact);
    }
}

TEST(BalancedApprox, ClosedFormsAtCubes)
{
    // P(v, v, e) and P(v, v, e - 16/81) expanded as polynomials in k = v^{1/3}
    for (Count k = 1; k <= 100; ++k) {
        Rational K = k, v = K * K * K, e = balanced_approx_cube(k);
        auto pw = [&](int n) {
            Rational r = 1;
            for (int i = 0; i < n; ++i) r *= K;
            return r;
        };
        Rational upper = Rational(40, 243) * pw(7) + Rational(376, 2187) * pw(6) - Rational(80, 2187) * pw(5) -
                         Rational(800, 19683) * pw(4) - Rational(8000, 531441) * pw(3);
        EXPECT_EQ(eval_cubic(v, v, e), upper);
        EXPECT_GE(upper, Rational(129808, 531441));
        Rational lower = -Rational(8, 531441) * (K - 1) *
                         (39366 * pw(7) + 28431 * pw(6) + 8262 * pw(5) - 8748 * pw(4) - 11880 * pw(3) -
                          6560 * pw(2) - 2432 * K - 512);
        EXPECT_EQ(eval_cubic(v, v, e - Rational(16, 81)), lower);
        EXPECT_LE(lower, 0);
    }
}

TEST(BalancedApprox, SandwichAtSampledSizes)
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> exponent(0.0, 6.0);
    for (int trial = 0; trial < 50; ++trial) {
        Count v = std::max<Count>(1, static_cast<Count>(std::pow(10.0, exponent(rng))));
        Real e = balanced_approx(v);
        Real tol = 1e-9 * std::max(1.0, std::pow(static_cast<double>(v), 7.0 / 3.0));
        EXPECT_GE(eval_cubic_real(v, v, e), -tol) << v;
        EXPECT_LE(eval_cubic_real(v, v, e - Real(16) / 81), tol) << v;
    }
}

TEST(Discriminant, Examples)
{
    auto d11 = cubic_discriminant(1, 1);
    EXPECT_EQ(d11.s, 2);
    EXPECT_EQ(d11.p, 1);
    EXPECT_EQ(d11.D, 3);
    auto d21 = cubic_discriminant(2, 1);
    EXPECT_EQ(d21.D, 28);
    EXPECT_EQ(d21.D, (4 * d21.s - 5) * (d21.s - 1) * (d21.s - 1));
    EXPECT_EQ(cubic_discriminant(2, 2).D, 176);
}

TEST(Discriminant, PositiveOnAdmissibleRegion)
{
    for (BigInt s = 2; s <= 100; ++s) {
        // boundary p = s - 1 gives (4s - 5)(s - 1)^2
        EXPECT_EQ(discriminant_sp(s, s - 1), (4 * s - 5) * (s - 1) * (s - 1));
        for (BigInt p = s - 1; p <= s * s / 4; ++p) EXPECT_GE(discriminant_sp(s, p), 3);
    }
}

TEST(Growth, Examples)
{
    EXPECT_EQ(growth_delta(1, 1, 1), 0);
    EXPECT_EQ(eval_cubic(2, 1, 2) - eval_cubic(1, 1, 1), 0);
    EXPECT_EQ(growth_delta(3, 2, 4), -5);
    EXPECT_EQ(eval_cubic(4, 2, 5) - eval_cubic(3, 2, 4), -5);
    EXPECT_EQ(growth_delta(1, 2, 2), -1);
    EXPECT_EQ(eval_cubic(2, 2, 3), -1);
    EXPECT_EQ(eval_cubic(1, 2, 2), 0);
}

TEST(Growth, IdentityAndImplication)
{
    for (Count v = 1; v <= 60; ++v)
        for (Count w = 1; w <= 60; ++w)
            for (Count e = 0; e <= v * w; ++e) {
                BigInt before = eval_cubic(v, w, e), after = eval_cubic(v + 1, w, e + 1);
                ASSERT_EQ(growth_delta(v, w, e), after - before) << v << "," << w << "," << e;
                if (v <= 40 && w <= 40 && before <= 0) { ASSERT_LE(after, 0) << v << "," << w << "," << e; }
            }
}

TEST(Report, BalancedGirthEight)
{
    auto r = bound_report(15, 15, 8);
    EXPECT_EQ(r.binding, BoundMethod::cubic);
    EXPECT_EQ(r.binding_value(), 45);
    EXPECT_EQ(r.value(BoundMethod::coarse), 46);
    EXPECT_EQ(r.value(BoundMethod::reiman), 64);
    EXPECT_FALSE(r.value(BoundMethod::cap));
}

TEST(Report, CapBindsWhenUnbalanced)
{
    auto r = bound_report(10, 4, 8);
    EXPECT_EQ(r.binding, BoundMethod::cap);
    EXPECT_EQ(r.binding_value(), 14);
    EXPECT_EQ(r.value(BoundMethod::coarse), 14); // tie resolved by method order
    EXPECT_EQ(r.value(BoundMethod::cubic), 15);
}

TEST(Report, GirthSixCarriesOnlyItsBounds)
{
    auto r = bound_report(7, 7, 6);
    EXPECT_EQ(r.values.size(), 2U);
    EXPECT_EQ(r.binding, BoundMethod::reiman);
    EXPECT_EQ(r.binding_value(), 21);
    EXPECT_EQ(r.value(BoundMethod::coarse), 24);
    EXPECT_THROW(bound_report(7, 7, 7), std::invalid_argument);
    EXPECT_THROW(bound_report(0, 7, 6), std::invalid_argument);
}

TEST(Report, BindingIsMinimum)
{
    for (Count v = 1; v <= 20; ++v)
        for (Count w = 1; w <= 20; ++w)
            for (int g : {6, 8}) {
                auto r = bound_report(v, w, g);
                for (const auto& [m, x] : r.values) {
                    EXPECT_GE(x, 0);
                    EXPECT_LE(r.binding_value(), x);
                }
            }
}

TEST(Numeric, IntegerRoots)
{
    for (int x = 0; x <= 2000; ++x) {
        BigInt s = isqrt(x), c = icbrt(x);
        EXPECT_TRUE(s * s <= x && (s + 1) * (s + 1) > x);
        EXPECT_TRUE(c * c * c <= x && (c + 1) * (c + 1) * (c + 1) > x);
    }
    EXPECT_EQ(icbrt(101250), 46);
}

TEST(Numeric, ParseRational)
{
    EXPECT_EQ(parse_rational("33/4"), Rational(33, 4));
    EXPECT_EQ(parse_rational("5"), Rational(5));
    EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
    EXPECT_EQ(to_string(Rational(33, 4)), "33/4");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}
