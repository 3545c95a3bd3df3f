#include <gtest/gtest.h>

#include <array>
#include <random>

#include "selmer/parse.hpp"
#include "selmer/periodic.hpp"

using namespace selmer;

namespace {

IntPoly poly(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

IntPoly product(const std::vector<IntPoly>& fs) {
    IntPoly p = IntPoly::constant(Integer(1));
    for (const auto& f : fs) p = p * f;
    return p;
}

// smallest e with M^e > 0, by integer powers
std::size_t brute_force_exponent(const IntMatrix& m, std::size_t limit) {
    IntMatrix p = m;
    for (std::size_t e = 1; e <= limit; ++e, p = p * m)
        if (p.all_positive()) return e;
    return 0;
}

PointB golden_point() { return parse_point("(a-1)/2,(3-a)/2", parse_field("x^2-5:(2,3)")); }

}  // namespace

TEST(Period, SsaCubeRootExample) {
    PointB x = parse_point("a^2-1,a-1", parse_field("x^3-2:(1,2)"));
    auto d = detect_period(x, Algorithm::ssa);
    ASSERT_EQ(d.status, PeriodStatus::found);
    EXPECT_EQ(d.preperiod, 1u);
    EXPECT_EQ(d.period, 30u);
    EXPECT_EQ(d.trace.states[31], d.trace.states[1]);
    for (std::size_t s = 2; s < 31; ++s) EXPECT_NE(d.trace.states[s], d.trace.states[1]);
}

TEST(Period, GoldenMsaFixedPoint) {
    auto d = detect_period(golden_point(), Algorithm::msa);
    ASSERT_EQ(d.status, PeriodStatus::found);
    EXPECT_EQ(d.preperiod, 0u);
    EXPECT_EQ(d.period, 1u);
    EXPECT_EQ(d.cycle_digits(), std::vector<Integer>{Integer(2)});
}

TEST(Period, NotFoundAndTerminated) {
    PointB x = parse_point("a^2-1,a-1", parse_field("x^3-2:(1,2)"));
    auto d = detect_period(x, Algorithm::msa, 40);
    EXPECT_EQ(d.status, PeriodStatus::not_found);
    EXPECT_EQ(d.trace.digits.size(), 40u);
    auto r = detect_period(PointB::from_rationals({Rational(2, 3), Rational(1, 2)}), Algorithm::msa);
    EXPECT_EQ(r.status, PeriodStatus::terminated);
    EXPECT_TRUE(r.trace.terminated);
}

TEST(Period, RationalSsaOrbitsArePeriodic) {
    // SSA never stops on rationals with x_1 > 0; the orbit visits finitely many points
    auto d = detect_period(PointB::from_rationals({Rational(5, 7), Rational(2, 7)}), Algorithm::ssa);
    EXPECT_EQ(d.status, PeriodStatus::found);
    EXPECT_GE(d.period, 1u);
}

TEST(Period, GoldenPeriodicityMatrix) {
    IntMatrix m = periodicity_matrix({Integer(2)}, 2);
    EXPECT_EQ(char_poly(m), poly({-1, -2, 0, 1}));
    EXPECT_EQ(char_poly(m), product({poly({1, 1}), poly({-1, -1, 1})}));
}

TEST(Period, PowerSumsMatchTraces) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> kd(1, 5), ld(1, 5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 3;
        std::vector<Integer> cycle;
        for (long i = 0, l = ld(rng); i < l; ++i) cycle.emplace_back(kd(rng));
        IntMatrix m = periodicity_matrix(cycle, n);
        auto sums = root_power_sums(char_poly(m), 8);
        IntMatrix p = m;
        for (std::size_t k = 0; k < 8; ++k, p = p * m) EXPECT_EQ(sums[k], p.trace());
    }
}

TEST(Dominance, GoldenCharpoly) {
    auto d = dominant_eigenvalue(poly({-1, -2, 0, 1}));
    EXPECT_EQ(d.min_poly.poly, poly({-1, -1, 1}));
    EXPECT_TRUE(d.min_poly.certified);
    Interval iv = refine_root(to_rational(d.min_poly.poly), d.interval, Rational(1, 1000));
    EXPECT_GT(iv.lo, Rational(161, 100));
    EXPECT_LT(iv.hi, Rational(162, 100));
    EXPECT_TRUE(d.subdominant_certified);
    EXPECT_NEAR(d.subdominant, 1.0, 1e-12);
}

TEST(Dominance, ComplexPairsBelowRho0) {
    // t^3 - t - 1: real root 1.3247, complex pair of modulus 0.8688
    auto d = dominant_eigenvalue(poly({-1, -1, 0, 1}));
    EXPECT_NEAR(d.interval.midpoint().get_d(), 1.324718, 1e-6);
    EXPECT_FALSE(d.subdominant_certified);
    EXPECT_NEAR(d.subdominant, 0.868837, 1e-5);
    EXPECT_EQ(d.min_poly.poly, poly({-1, -1, 0, 1}));
}

TEST(Dominance, RejectsNonDominantSpectra) {
    EXPECT_THROW(dominant_eigenvalue(poly({-4, 0, 1})), DominanceError);                           // +-2
    EXPECT_THROW(dominant_eigenvalue(product({poly({-2, 1}), poly({9, 0, 1})})), DominanceError);  // 2, +-3i
    EXPECT_THROW(dominant_eigenvalue(product({poly({-2, 1}), poly({4, 0, 1})})), DominanceError);  // 2, +-2i
    EXPECT_THROW(dominant_eigenvalue(product({poly({-2, 1}), poly({-2, 1}), poly({1, 1})})), DominanceError);
    EXPECT_THROW(dominant_eigenvalue(product({poly({-1, 1}), poly({1, 0, 1})})), DominanceError);  // rho0 = 1
    EXPECT_THROW(dominant_eigenvalue(product({poly({-2, 1}), poly({3, 1})})), DominanceError);     // -3
    EXPECT_THROW(dominant_eigenvalue(poly({1, 0, 1})), DominanceError);                            // no real root
    EXPECT_NO_THROW(dominant_eigenvalue(product({poly({-3, 1}), poly({4, 0, 1})})));               // 3, +-2i
}

TEST(Positivity, ExponentMatchesIntegerPowers) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (long k = 1; k <= 4; ++k) {
            IntMatrix b = beta_matrix(Integer(k), n);
            const std::size_t e = positive_power_exponent(b);
            EXPECT_EQ(e, brute_force_exponent(b, 60));
            EXPECT_LE(e, n * n + 1);
        }
    EXPECT_EQ(positive_power_exponent(beta_matrix(Integer(1), 2)), 5u);
    EXPECT_FALSE(beta_matrix(Integer(1), 2).pow(4).all_positive());
    EXPECT_THROW(positive_power_exponent(IntMatrix::identity(3)), DomainError);
}

TEST(EigenPoint, GoldenExact) {
    IntMatrix m = periodicity_matrix({Integer(2)}, 2);
    auto dom = dominant_eigenvalue(char_poly(m));
    PointB e = eigen_point(m, dom);
    PointB x = golden_point();
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(same_real_number(e[i], x[i]));
    EXPECT_TRUE(verify_cycle(e, {Integer(2)}));
}

TEST(EigenPoint, ReducibleModulusIsSplit) {
    IntMatrix m = periodicity_matrix({Integer(2)}, 2);
    auto dom = dominant_eigenvalue(char_poly(m));
    dom.min_poly = {poly({-1, -2, 0, 1}), false};
    PointB e = eigen_point(m, dom);
    PointB x = golden_point();
    for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(same_real_number(e[i], x[i]));
}

TEST(EigenPoint, PeriodicCyclesAreReproduced) {
    struct Case {
        std::vector<long> cycle;
        std::size_t n;
    };
    const std::vector<Case> cases{{{1}, 2}, {{3}, 2}, {{1}, 3}, {{5}, 4}, {{1, 2}, 1}, {{2, 2, 3}, 2}, {{2, 3}, 3}, {{2, 2, 3}, 4}};
    for (const auto& [c, n] : cases) {
        std::vector<Integer> cycle(c.begin(), c.end());
        MsaAnalysis a = analyze_msa_cycle(cycle, n);
        ASSERT_TRUE(a.eigen_point.has_value()) << (a.diagnostics.empty() ? "" : a.diagnostics[0]);
        EXPECT_TRUE(a.cycle_verified) << "n=" << n << " cycle size " << c.size();
        auto d = detect_period(*a.eigen_point, Algorithm::msa);
        EXPECT_EQ(d.status, PeriodStatus::found);
        EXPECT_EQ(d.preperiod, 0u);
        EXPECT_EQ(c.size() % d.period, 0u);
    }
}

TEST(EigenPoint, InadmissibleCyclesAreDiagnosed) {
    // the Perron direction of these products projects outside the ordered cube
    const std::vector<std::pair<std::vector<long>, std::size_t>> cases{{{1, 2}, 2}, {{2, 1}, 3}, {{2, 1, 1}, 2}, {{3, 1, 2}, 4}};
    for (const auto& [c, n] : cases) {
        std::vector<Integer> cycle(c.begin(), c.end());
        MsaAnalysis a = analyze_msa_cycle(cycle, n);
        EXPECT_FALSE(a.cycle_verified);
        EXPECT_FALSE(a.diagnostics.empty());
    }
}

TEST(Report, GoldenMatchesOrbit) {
    PeriodReport r = make_report(detect_period(golden_point(), Algorithm::msa));
    ASSERT_TRUE(r.msa.has_value());
    EXPECT_TRUE(r.msa->matches_orbit);
    EXPECT_TRUE(r.msa->cycle_verified);
    EXPECT_EQ(r.msa->positivity_exponent, 5u);
    EXPECT_TRUE(r.msa->diagnostics.empty());
}

TEST(Convergence, GoldenErrorsAndRatio) {
    PointB x = golden_point();
    std::vector<Integer> digits(60, Integer(2));
    auto rep = convergence_report(x, digits, 40, 1, default_precision(), std::pair<std::size_t, std::size_t>{20, 40});
    EXPECT_FALSE(rep.rows[40].degenerate);
    EXPECT_LT(rep.rows[40].max_error.hi, Rational(1, 100000000));
    ASSERT_TRUE(rep.envelope_ratio.has_value());
    const double inv_phi = 2 / (1 + std::sqrt(5.0));
    EXPECT_NEAR(rep.envelope_ratio->lo.get_d(), inv_phi, 1e-3);
    EXPECT_NEAR(rep.envelope_ratio->hi.get_d(), inv_phi, 1e-3);
    EXPECT_TRUE(rep.envelope_decreasing);
    EXPECT_EQ(rep.rows[0].label, 0);
    EXPECT_TRUE(rep.rows[0].degenerate);
}

TEST(Convergence, NthRootEnclosure) {
    Interval r = nth_root_enclosure(Rational(2), 2);
    EXPECT_LE(r.lo * r.lo, 2);
    EXPECT_GE(r.hi * r.hi, 2);
    EXPECT_LT(r.width(), Rational(1, 1000000));
}

TEST(Approximation, GoldenBandReference) {
    // e_i(g) for x = (1/phi, 1/phi^2) computed in long double from the three term recursion
    PointB x = golden_point();
    auto rep = approximation_report(x, {Integer(2)}, 40, 1.0);
    const long double phi = (1 + std::sqrt(5.0L)) / 2, x1 = phi - 1, x2 = 2 - phi;
    // B^(t) = 2 B^(t-2) + B^(t-3) with B^(-2) = e_2, B^(-1) = e_0, B^(0) = e_1
    std::vector<std::array<long double, 3>> col{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    for (int t = 1; t <= 40; ++t) {
        std::array<long double, 3> nb{};
        for (int i = 0; i < 3; ++i) nb[i] = 2 * col[col.size() - 2][i] + col[col.size() - 3][i];
        col.push_back(nb);
    }
    for (const auto& row : rep.rows) {
        const auto& c = col[row.g + 2];
        long double e = std::fabs(c[0] * (row.i == 1 ? x1 : x2) - c[row.i]);
        EXPECT_NEAR(row.error.hi.get_d(), static_cast<double>(e), 1e-6 + 1e-9 * static_cast<double>(c[0]));
    }
    EXPECT_NEAR(rep.envelope_constant[0], static_cast<double>(phi), 1e-6);
    EXPECT_NEAR(rep.envelope_constant[1], static_cast<double>(phi - 1), 1e-6);
}
