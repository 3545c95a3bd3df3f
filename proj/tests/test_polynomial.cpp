#include <gtest/gtest.h>

#include <random>

#include "selmer/matrix.hpp"
#include "selmer/real_roots.hpp"

using namespace selmer;

namespace {

RatPoly from_roots(const std::vector<Rational>& roots) {
    RatPoly p = RatPoly::constant(Rational(1));
    for (const auto& r : roots) p = p * RatPoly::linear_root(r);
    return p;
}

// cofactor expansion along the first row
Integer laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Integer acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Integer term = m(0, j) * laplace_det(minor);
        acc += (j % 2 ? -term : term);
    }
    return acc;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST(Polynomial, NormalizesAndReportsDegree) {
    RatPoly zero({Rational(0), Rational(0)});
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), -1);
    RatPoly p({Rational(1), Rational(2), Rational(0)});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(p.to_string("x"), "2*x + 1");
}

TEST(Polynomial, ArithmeticAgreesWithEvaluation) {
    RatPoly a({Rational(-2), Rational(0), Rational(1)});
    RatPoly b({Rational(1, 3), Rational(-1)});
    for (int k = -5; k <= 5; ++k) {
        Rational x(k, 3);
        x.canonicalize();
        EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
        EXPECT_EQ((a + b).evaluate(x), a.evaluate(x) + b.evaluate(x));
        EXPECT_EQ((a - b).evaluate(x), a.evaluate(x) - b.evaluate(x));
        EXPECT_EQ(a.reflected().evaluate(x), a.evaluate(Rational(-x)));
        EXPECT_EQ(a.squared_argument().evaluate(x), a.evaluate(Rational(x * x)));
    }
}

TEST(Polynomial, DivisionWithRemainder) {
    RatPoly a = from_roots({Rational(1), Rational(2), Rational(-3)}) + RatPoly({Rational(5), Rational(1)});
    RatPoly b = from_roots({Rational(1, 2), Rational(7)});
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
    EXPECT_THROW(divmod(a, RatPoly()), ZeroDivisionError);
}

TEST(Polynomial, GcdAndSquarefree) {
    RatPoly p = from_roots({Rational(1), Rational(1), Rational(2), Rational(-1, 2)});
    RatPoly q = from_roots({Rational(1), Rational(-1, 2), Rational(5)});
    EXPECT_EQ(gcd(p, q), from_roots({Rational(1), Rational(-1, 2)}));
    EXPECT_EQ(squarefree_part(p), from_roots({Rational(1), Rational(2), Rational(-1, 2)}));
    auto [g, s, t] = extended_gcd(p, q);
    EXPECT_EQ(s * p + t * q, g);
}

TEST(Polynomial, IntegerConversions) {
    RatPoly p({Rational(1, 2), Rational(-3, 4), Rational(1, 6)});
    IntPoly pp = primitive_part(p);
    EXPECT_EQ(pp, IntPoly({Integer(6), Integer(-9), Integer(2)}));
    EXPECT_THROW(to_integer_exact(p), DomainError);
}

TEST(RealRoots, SturmCountsKnownRoots) {
    RatPoly p = from_roots({Rational(-3), Rational(1, 3), Rational(1, 2), Rational(4)});
    SturmChain chain(p);
    EXPECT_EQ(chain.count(Rational(-10), Rational(10)), 4);
    EXPECT_EQ(chain.count(Rational(0), Rational(1)), 2);
    EXPECT_EQ(chain.count(Rational(1, 3), Rational(1, 2)), 1);  // half-open (a, b]
}

TEST(RealRoots, IsolationSeparatesCloseRoots) {
    std::vector<Rational> roots{Rational(-7, 2), Rational(1, 1000), Rational(2, 1000), Rational(3), Rational(31, 10)};
    RatPoly p = from_roots(roots);
    auto ivs = isolate_real_roots(p);
    ASSERT_EQ(ivs.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        EXPECT_LT(ivs[i].lo, roots[i]);
        EXPECT_GT(ivs[i].hi, roots[i]);
        EXPECT_NE(p.sign_at(ivs[i].lo), 0);
        EXPECT_NE(p.sign_at(ivs[i].hi), 0);
    }
}

TEST(RealRoots, RootsAtBisectionPointsAreHandled) {
    RatPoly p = from_roots({Rational(0), Rational(1), Rational(-1), Rational(1, 2)});
    auto ivs = isolate_real_roots(p);
    ASSERT_EQ(ivs.size(), 4u);
    for (const auto& iv : ivs) EXPECT_EQ(count_roots_in(p, iv), 1);
}

TEST(RealRoots, RefineCubeRootOfTwo) {
    RatPoly p({Rational(-2), Rational(0), Rational(0), Rational(1)});
    auto ivs = isolate_real_roots(p);
    ASSERT_EQ(ivs.size(), 1u);
    Interval iv = refine_root(p, ivs[0], Rational(1, 1000000000));
    EXPECT_LE(iv.width(), Rational(1, 1000000000));
    EXPECT_NEAR(iv.midpoint().get_d(), std::cbrt(2.0), 1e-9);
    EXPECT_TRUE(isolate_real_roots(RatPoly({Rational(1), Rational(0), Rational(1)})).empty());
}

TEST(RealRoots, CauchyBoundEnclosesRoots) {
    RatPoly p = from_roots({Rational(-100), Rational(7), Rational(99, 2)});
    Rational b = cauchy_bound(p);
    EXPECT_GT(b, 100);
}

TEST(Matrix, BareissMatchesLaplace) {
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            IntMatrix m = random_matrix(rng, n, -9, 9);
            EXPECT_EQ(determinant(m), laplace_det(m));
        }
}

TEST(Matrix, CharpolyMatchesLaplaceAtIntegerPoints) {
    std::mt19937 rng(11);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            IntMatrix m = random_matrix(rng, n, -5, 5);
            IntPoly cp = characteristic_polynomial(m);
            ASSERT_EQ(cp.degree(), static_cast<int>(n));
            EXPECT_EQ(cp.leading(), 1);
            for (int x = -3; x <= 3; ++x) {
                IntMatrix a(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? Integer(x) : Integer(0)) - m(i, j);
                EXPECT_EQ(cp.evaluate(Integer(x)), laplace_det(a));
            }
        }
}

TEST(Matrix, PowerTraceEqualsProduct) {
    std::mt19937 rng(3);
    IntMatrix m = random_matrix(rng, 4, 0, 3);
    IntMatrix p = IntMatrix::identity(4);
    for (unsigned e = 0; e < 7; ++e) {
        EXPECT_EQ(m.pow(e), p);
        p = p * m;
    }
}

TEST(Matrix, CompanionAndExteriorSquare) {
    RatPoly p = from_roots({Rational(1), Rational(2), Rational(-3)});
    auto c = companion(p);
    EXPECT_EQ(characteristic_polynomial(c), p);
    // eigenvalues of the exterior square are the pairwise products 2, -3, -6
    auto e = exterior_square(c);
    EXPECT_EQ(characteristic_polynomial(e), from_roots({Rational(2), Rational(-3), Rational(-6)}));
}
