#include <gtest/gtest.h>

#include "selmer/parse.hpp"
#include "selmer/serialize.hpp"

using namespace selmer;

TEST(ParseRational, Forms) {
    EXPECT_EQ(parse_rational("7"), 7);
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
    EXPECT_EQ(parse_rational("1e-30"), Rational(1) / pow_int(Integer(10), 30));
    EXPECT_EQ(parse_rational("-2.5e2"), -250);
    EXPECT_THROW(parse_rational("1/0"), ZeroDivisionError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(ParsePolynomial, Expressions) {
    EXPECT_EQ(parse_polynomial("x^3-2"), RatPoly({Rational(-2), Rational(0), Rational(0), Rational(1)}));
    EXPECT_EQ(parse_polynomial("(x-1)*(x+1)"), RatPoly({Rational(-1), Rational(0), Rational(1)}));
    EXPECT_EQ(parse_polynomial("-x^2/2 + 3"), RatPoly({Rational(3), Rational(0), Rational(-1, 2)}));
    EXPECT_THROW(parse_polynomial("x/x"), ParseError);
    EXPECT_THROW(parse_polynomial("x^-1"), ParseError);
    EXPECT_THROW(parse_polynomial("y+1"), ParseError);
    EXPECT_THROW(parse_polynomial("(x+1"), ParseError);
}

TEST(ParseField, Specs) {
    auto f = parse_field("x^3-2:(1,2)");
    EXPECT_EQ(f->degree(), 3u);
    EXPECT_EQ(f->root_interval(), Interval(Rational(1), Rational(2)));
    EXPECT_EQ(parse_field("x^2-5 : [2, 3]")->degree(), 2u);
    EXPECT_EQ(parse_field("")->degree(), 1u);
    EXPECT_EQ(parse_field("Q")->degree(), 1u);
    EXPECT_THROW(parse_field("x^2-2:(-2,2)"), ParseError);
    EXPECT_THROW(parse_field("x^2-2"), ParseError);
    EXPECT_THROW(parse_field("x^2-2:(2,1)"), ParseError);
    EXPECT_THROW(parse_field("x^2-2:(1,2,3)"), ParseError);
}

TEST(ParseElement, ArithmeticInTheRoot) {
    auto f = parse_field("x^3-2:(1,2)");
    Element a = Element::generator(f);
    EXPECT_EQ(parse_element("a^2-1", f), a * a - 1);
    EXPECT_EQ(parse_element("1/(a-1)", f), a * a + a + 1);
    EXPECT_EQ(parse_element("a^-1", f), a * a / 2);
    EXPECT_EQ(parse_element("-(a+1)*2", f), -2 * a - 2);
    EXPECT_EQ(parse_element("0.5*a", f), a / 2);
    EXPECT_THROW(parse_element("1/(a^3-2)", f), ParseError);
    EXPECT_THROW(parse_element("b", f), ParseError);
}

TEST(ParsePoint, SplitsAtTopLevel) {
    auto f = parse_field("x^2-5:(2,3)");
    PointB x = parse_point("(a-1)/2, (3-a)/2", f);
    EXPECT_EQ(x.dim(), 2u);
    EXPECT_THROW(parse_point("1/3,1/2", NumberField::rationals()), ParseError);
    EXPECT_THROW(parse_point("1/2,", NumberField::rationals()), ParseError);
    EXPECT_EQ(split_top_level("f(1,2),3").size(), 2u);
}

TEST(ParseRange, Forms) {
    EXPECT_EQ(parse_range("2..6"), (std::pair<long, long>{2, 6}));
    EXPECT_EQ(parse_range("4"), (std::pair<long, long>{4, 4}));
    EXPECT_THROW(parse_range("6..2"), ParseError);
    EXPECT_THROW(parse_range("a..b"), ParseError);
}

TEST(Serialize, ElementsAndFields) {
    auto f = parse_field("x^3-2:(1,2)");
    Element e = parse_element("-1/3 + a/3 + a^2/6", f);
    Json j = element_to_json(e);
    EXPECT_EQ(j.dump(), R"(["-1/3","1/3","1/6"])");
    EXPECT_EQ(field_to_json(*f).dump(), R"({"min_poly":["-2","0","0","1"],"root":["1","2"]})");
    FieldPtr g = field_from_json(field_to_json(*f));
    EXPECT_TRUE(g->same_as(*f));
    EXPECT_EQ(element_from_json(j, g), e);
}

TEST(Serialize, TraceRoundTrip) {
    auto f = parse_field("x^3-2:(1,2)");
    for (Algorithm algo : {Algorithm::ssa, Algorithm::msa}) {
        OrbitTrace t = run_orbit(parse_point("a^2-1,a-1", f), algo, 25);
        std::string text = trace_to_json(t).dump(2);
        OrbitTrace back = trace_from_json(Json::parse(text));
        EXPECT_TRUE(same_trace(t, back));
        EXPECT_EQ(trace_to_json(back).dump(2), text);
    }
    OrbitTrace stop = run_orbit(PointB::from_rationals({Rational(2, 3), Rational(1, 2)}), Algorithm::msa, 10);
    EXPECT_TRUE(trace_from_json(trace_to_json(stop)).terminated);
    EXPECT_THROW(trace_from_json(Json::parse(R"({"schema":"other"})")), ParseError);
}

TEST(Serialize, MatricesAsDecimalStrings) {
    IntMatrix m{{0, 2, 1}, {1, 0, 0}, {0, 1, 0}};
    Json j = matrix_to_json(m);
    EXPECT_EQ(j.dump(), R"([["0","2","1"],["1","0","0"],["0","1","0"]])");
    EXPECT_EQ(matrix_from_json(j), m);
    IntMatrix big = beta_matrix(Integer(9), 3).pow(200);
    EXPECT_EQ(matrix_from_json(matrix_to_json(big)), big);
}

TEST(Serialize, PeriodReport) {
    auto f = parse_field("x^2-5:(2,3)");
    PeriodReport r = make_report(detect_period(parse_point("(a-1)/2,(3-a)/2", f), Algorithm::msa));
    Json j = report_to_json(r);
    EXPECT_EQ(j["status"], "found");
    EXPECT_EQ(j["m"], 0);
    EXPECT_EQ(j["p"], 1);
    EXPECT_EQ(j["msa"]["charpoly"].dump(), R"(["-1","-2","0","1"])");
    EXPECT_EQ(j["msa"]["min_poly"].dump(), R"(["-1","-1","1"])");
    auto rho = rationals_from_json(j["msa"]["rho0"]);
    EXPECT_LE(rho[1] - rho[0], default_precision());
    EXPECT_LT(rho[0], Rational(1618034, 1000000));
    EXPECT_GT(rho[1], Rational(1618033, 1000000));
    FieldPtr g = field_from_json(j["msa"]["eigen_field"]);
    PointB e = point_from_json(j["msa"]["eigen_point"], g);
    EXPECT_TRUE(verify_cycle(e, {Integer(2)}));
    // deterministic output
    EXPECT_EQ(report_to_json(make_report(detect_period(parse_point("(a-1)/2,(3-a)/2", f), Algorithm::msa))).dump(), j.dump());
}
