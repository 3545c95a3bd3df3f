#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "selmer/algebraic.hpp"
#include "selmer/numfield.hpp"

using namespace selmer;

namespace {

FieldPtr cbrt2() { return NumberField::create(IntPoly({Integer(-2), Integer(0), Integer(0), Integer(1)}), Interval(Rational(1), Rational(2))); }
FieldPtr sqrt5() { return NumberField::create(IntPoly({Integer(-5), Integer(0), Integer(1)}), Interval(Rational(2), Rational(3))); }

Element elem(const FieldPtr& f, std::vector<Rational> c) { return Element(f, std::move(c)); }

long double value(const Element& e, long double root) {
    long double acc = 0;
    const auto& c = e.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * root + static_cast<long double>(c[i].get_d());
    return acc;
}

}  // namespace

TEST(NumberField, RejectsBadIntervals) {
    IntPoly m({Integer(-2), Integer(0), Integer(1)});
    EXPECT_THROW(NumberField::create(m, Interval(Rational(-2), Rational(2))), DomainError);
    EXPECT_THROW(NumberField::create(m, Interval(Rational(2), Rational(3))), DomainError);
    EXPECT_THROW(NumberField::create(IntPoly({Integer(-1), Integer(0), Integer(1)}), Interval(Rational(1), Rational(2))),
                 DomainError);
    EXPECT_NO_THROW(NumberField::create(m, Interval(Rational(-2), Rational(0))));
}

TEST(NumberField, CanonicalReduction) {
    auto f = cbrt2();
    Element a = Element::generator(f);
    EXPECT_TRUE((a * a * a - 2).is_zero());
    EXPECT_EQ(a.pow(4), 2 * a);
    EXPECT_EQ(a.pow(5), 2 * a * a);
    EXPECT_EQ(elem(f, {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)}), 2 * a);
}

TEST(NumberField, InverseExamples) {
    auto f = cbrt2();
    Element a = Element::generator(f);
    // 1/(a - 1) = a^2 + a + 1
    EXPECT_EQ((a - 1).inverse(), a * a + a + 1);
    Element x = a * a - 1;
    EXPECT_EQ(x * x.inverse(), Element(f, Rational(1)));
    EXPECT_THROW(Element(f).inverse(), ZeroDivisionError);
    EXPECT_EQ(a.pow(-1), a * a / 2);
}

TEST(NumberField, ZeroDivisorOnReducibleModulus) {
    // x^3 - x = x (x - 1)(x + 1), root 1 isolated in (1/2, 3/2)
    auto f = NumberField::create(IntPoly({Integer(0), Integer(-1), Integer(0), Integer(1)}), Interval(Rational(1, 2), Rational(3, 2)));
    Element a = Element::generator(f);
    try {
        (a - 1).inverse();
        FAIL() << "expected a zero divisor";
    } catch (const ZeroDivisorError& e) {
        EXPECT_GE(e.factor.degree(), 1);
    }
}

TEST(NumberField, SignAndComparisonProperty) {
    auto f = cbrt2();
    const long double root = std::cbrt(2.0L);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 12);
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        Element x = elem(f, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        Element y = elem(f, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        long double vx = value(x, root), vy = value(y, root);
        if (std::fabs(vx) > 1e-9L) {
            EXPECT_EQ(x.sign(), vx > 0 ? 1 : -1);
            ++checked;
        }
        if (std::fabs(vx - vy) > 1e-9L) EXPECT_EQ(compare(x, y), vx > vy ? 1 : -1);
        EXPECT_EQ(compare(x, x), 0);
    }
    EXPECT_GT(checked, 9900);
}

TEST(NumberField, FloorProperty) {
    auto f = sqrt5();
    const long double root = std::sqrt(5.0L);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-400, 400), den(1, 9);
    for (int t = 0; t < 2000; ++t) {
        Element x = elem(f, {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
        long double v = value(x, root);
        if (std::fabs(v - std::round(v)) < 1e-9L) continue;
        EXPECT_EQ(x.floor(), Integer(static_cast<long>(std::floor(v))));
    }
    // exact integers and values just below them
    Element a = Element::generator(f);
    EXPECT_EQ(Element(f, Rational(7)).floor(), 7);
    EXPECT_EQ(Element(f, Rational(-7, 2)).floor(), -4);
    EXPECT_EQ(a.floor(), 2);
    EXPECT_EQ((a - 3).floor(), -1);
    EXPECT_EQ(((a + 1) / 2).inverse().floor(), 0);  // 1/phi
}

TEST(NumberField, EnclosuresShrink) {
    auto f = cbrt2();
    Element a = Element::generator(f);
    Interval iv = (a * a - 1).enclosure(Rational(1) / pow_int(Integer(10), 30));
    EXPECT_LE(iv.width(), Rational(1) / pow_int(Integer(10), 30));
    EXPECT_NEAR(iv.midpoint().get_d(), std::cbrt(4.0) - 1, 1e-15);
    EXPECT_EQ(certified_decimal(a, 20), "1.25992104989487316477");
    EXPECT_EQ(certified_decimal(Element(f, Rational(-1, 3)), 5), "-0.33333");
}

TEST(NumberField, TextForm) {
    auto f = cbrt2();
    Element a = Element::generator(f);
    EXPECT_EQ((a * a / 6 + a / 3 - Rational(1, 3)).to_text(), "-1/3 + 1/3*a + 1/6*a^2");
    EXPECT_EQ(Element(f).to_text(), "0");
    EXPECT_EQ((-a).to_text(), "-a");
}

TEST(NumberField, MixingFieldsThrows) {
    Element a = Element::generator(cbrt2());
    Element b = Element::generator(sqrt5());
    EXPECT_THROW(a + b, FieldMismatchError);
    // structurally equal fields interoperate
    Element c = Element::generator(cbrt2());
    EXPECT_NO_THROW(a + c);
    EXPECT_EQ(a, c);
}

TEST(Algebraic, SameRealNumberAcrossFields) {
    // phi in Q(sqrt5) and as the root of t^2 - t - 1
    auto g = NumberField::create(IntPoly({Integer(-1), Integer(-1), Integer(1)}), Interval(Rational(1), Rational(2)));
    Element phi_a = (Element::generator(sqrt5()) + 1) / 2;
    Element phi_b = Element::generator(g);
    EXPECT_TRUE(same_real_number(phi_a, phi_b));
    EXPECT_FALSE(same_real_number(phi_a, 1 - phi_b));  // the conjugate
    EXPECT_TRUE(same_real_number(Element(sqrt5(), Rational(3, 7)), Element(g, Rational(3, 7))));
    EXPECT_FALSE(same_real_number(Element::generator(cbrt2()), phi_b));
}
