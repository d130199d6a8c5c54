#include <gtest/gtest.h>

#include "rtorsion/errors.hpp"
#include "rtorsion/json_io.hpp"
#include "rtorsion/multipoly.hpp"
#include "rtorsion/unipoly.hpp"
#include "support.hpp"

using namespace rtorsion;
using rt_test::Gen;
using rt_test::to_double;

TEST(MultiPolyText, CanonicalFormRoundTrips) {
    MultiPoly p = MultiPoly::parse("L^2*M^4 - L*M^8 + M^4");
    EXPECT_EQ(p.to_string(), "-L*M^8 + L^2*M^4 + M^4");
    EXPECT_EQ(MultiPoly::parse(p.to_string()), p);
}

TEST(MultiPolyText, NegativeExponents) {
    MultiPoly p = MultiPoly::parse("s^-2*t + 3 - s^4");
    EXPECT_EQ(p.min_degree("s"), -2);
    EXPECT_EQ(MultiPoly::parse(p.to_string()), p);
}

TEST(MultiPolyText, RejectsMalformedInput) {
    for (const char* bad : {"x^", "2**x", "x + * y", "(x", "x^1.5", "3x"})
        EXPECT_THROW(MultiPoly::parse(bad), ParseError) << bad;
}

TEST(MultiPolyText, RandomRoundTrip) {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        MultiPoly p = g.multipoly({"s", "t", "L"}, g.uniform(0, 8), 4, 50, -3);
        EXPECT_EQ(MultiPoly::parse(p.to_string()), p) << p.to_string();
    }
}

TEST(MultiPolyJson, RoundTrip) {
    Gen g(12);
    for (int i = 0; i < 100; ++i) {
        MultiPoly p = g.multipoly({"M", "L"}, g.uniform(0, 6), 5, 1000, -2);
        Json j = to_json(p);
        EXPECT_EQ(multipoly_from_json(Json::parse(j.dump())), p);
    }
}

TEST(MultiPolyJson, Shape) {
    Json j = to_json(MultiPoly::parse("2*x*y^2 - 5"));
    EXPECT_EQ(j["vars"], Json::array({"x", "y"}));
    EXPECT_EQ(j["terms"][0][0], Json::array({1, 2}));
    EXPECT_EQ(j["terms"][0][1], "2");
    EXPECT_EQ(j["terms"][1][1], "-5");
}

TEST(MultiPolyJson, RejectsMalformed) {
    EXPECT_THROW(multipoly_from_json(Json::parse(R"({"vars":["x"]})")), ParseError);
    EXPECT_THROW(multipoly_from_json(Json::parse(R"({"vars":["x"],"terms":[[[1,2],"3"]]})")), ParseError);
    EXPECT_THROW(multipoly_from_json(Json::parse(R"({"vars":["x"],"terms":[[[1],"3.5"]]})")), ParseError);
}

// Ring axioms on random Laurent polynomials.
TEST(MultiPolyRing, AxiomsOnRandomInputs) {
    Gen g(13);
    const std::vector<std::string> vars{"s", "t"};
    for (int i = 0; i < 150; ++i) {
        MultiPoly a = g.multipoly(vars, 4, 3, 9, -2), b = g.multipoly(vars, 4, 3, 9, -2),
                  c = g.multipoly(vars, 4, 3, 9, -2);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(pow(a, 3), a * a * a);
    }
}

TEST(MultiPolyRing, ExactDivisionRecoversFactor) {
    Gen g(14);
    const std::vector<std::string> vars{"x", "y"};
    for (int i = 0; i < 100; ++i) {
        MultiPoly a = g.multipoly(vars, 4, 3, 9), b = g.multipoly(vars, 3, 3, 9);
        if (b.is_zero()) continue;
        EXPECT_EQ(divide_exact(a * b, b), a);
    }
    EXPECT_THROW(divide_exact(MultiPoly::parse("x^2 + 1"), MultiPoly::parse("x - 1")), DivisionError);
}

TEST(MultiPolyRing, Substitute) {
    MultiPoly p = MultiPoly::parse("x^2*y + y^-1");
    MultiPoly r = substitute(p, {{"x", MultiPoly::parse("y + 1")}, {"y", MultiPoly::parse("-y")}});
    EXPECT_EQ(r, MultiPoly::parse("-(y + 1)^2*y - y^-1"));
    EXPECT_THROW(substitute(MultiPoly::parse("x^-1"), "x", MultiPoly::parse("x + 1")), PreconditionError);
}

TEST(MultiPolyRing, SubstituteIsSimultaneous) {
    MultiPoly p = MultiPoly::parse("x + 2*y");
    MultiPoly r = substitute(p, {{"x", MultiPoly::parse("y")}, {"y", MultiPoly::parse("x")}});
    EXPECT_EQ(r, MultiPoly::parse("y + 2*x"));
}

// (1/k!) d^k/dx^k at x = 0 reads off the coefficient of x^k.
TEST(MultiPolyRing, ScaledDerivativeIsTaylorCoefficient) {
    Gen g(15);
    for (int i = 0; i < 100; ++i) {
        MultiPoly p = g.multipoly({"x", "y"}, 6, 5, 20);
        for (int k = 0; k <= 5; ++k) {
            MultiPoly d = substitute(scaled_derivative(p, "x", k), "x", MultiPoly(0));
            EXPECT_EQ(d, p.coefficient("x", k));
        }
    }
}

TEST(MultiPolyRing, ContentPrimitive) {
    MultiPoly f = MultiPoly::parse("(y^2 - 1)*(x^2 + y*x + 1)*6");
    auto split = content_primitive(f, "x");
    EXPECT_EQ(split.content * split.primitive, f);
    EXPECT_EQ(split.primitive, MultiPoly::parse("x^2 + y*x + 1"));
}

TEST(MultiPolyRing, GcdOfCommonMultiples) {
    Gen g(16);
    for (int i = 0; i < 40; ++i) {
        MultiPoly c = g.multipoly({"x", "y"}, 3, 2, 5);
        if (c.is_zero() || c.is_constant()) continue;
        MultiPoly a = g.multipoly({"x", "y"}, 3, 2, 5) * c, b = g.multipoly({"x", "y"}, 3, 2, 5) * c;
        if (a.is_zero() || b.is_zero()) continue;
        MultiPoly d = gcd(a, b);
        EXPECT_TRUE(try_divide(d, strip_units(c)).has_value()) << c.to_string() << " vs " << d.to_string();
        EXPECT_TRUE(try_divide(a, d).has_value());
        EXPECT_TRUE(try_divide(b, d).has_value());
    }
}

TEST(UniPolyArith, DivisionIdentity) {
    Gen g(17);
    for (int i = 0; i < 200; ++i) {
        UniPoly f = g.unipoly(g.uniform(0, 8), 20), d = g.monic(g.uniform(1, 4), 20);
        UniDivision qr = divide(f, d);
        EXPECT_EQ(qr.quotient * d + qr.remainder, f);
        EXPECT_LT(qr.remainder.degree(), d.degree());
    }
}

TEST(UniPolyArith, GcdOfProducts) {
    Gen g(18);
    for (int i = 0; i < 100; ++i) {
        UniPoly c = primitive_part(g.unipoly(g.uniform(1, 3), 9));
        UniPoly a = g.unipoly(g.uniform(0, 4), 9) * c, b = g.unipoly(g.uniform(0, 4), 9) * c;
        UniPoly d = gcd_univariate(a, b);
        EXPECT_TRUE(divide(d, c).remainder.is_zero()) << c.to_string() << " gcd " << d.to_string();
    }
}

TEST(UniPolyArith, SquarefreeDecompositionExpands) {
    Gen g(19);
    for (int i = 0; i < 100; ++i) {
        UniPoly a = g.unipoly(g.uniform(1, 3), 5), b = g.unipoly(g.uniform(1, 2), 5);
        UniPoly f = a * pow(b, 2) * pow(UniPoly::parse("x - 3"), 3);
        SquarefreeDecomposition d = squarefree_decompose(f);
        EXPECT_EQ(d.expand(), f);
        for (std::size_t j = 0; j < d.factors.size(); ++j) {
            const UniPoly& h = d.factors[j].first;
            EXPECT_EQ(gcd_univariate(h, h.derivative()).degree(), 0);
            for (std::size_t k = j + 1; k < d.factors.size(); ++k)
                EXPECT_EQ(gcd_univariate(h, d.factors[k].first).degree(), 0);
        }
    }
}

TEST(UniPolyArith, SquarefreeExample) {
    UniPoly f = UniPoly::parse("(x - 1)^3*(x + 2)^2*(x^2 + 1)");
    SquarefreeDecomposition d = squarefree_decompose(f);
    ASSERT_EQ(d.factors.size(), 3u);
    EXPECT_EQ(d.factors[0], std::make_pair(UniPoly::parse("x^2 + 1"), 1));
    EXPECT_EQ(d.factors[1], std::make_pair(UniPoly::parse("x + 2"), 2));
    EXPECT_EQ(d.factors[2], std::make_pair(UniPoly::parse("x - 1"), 3));
    EXPECT_EQ(squarefree_part(f), UniPoly::parse("(x - 1)*(x + 2)*(x^2 + 1)"));
}

TEST(UniPolyArith, ReversePoly) {
    EXPECT_EQ(reverse_poly(UniPoly::parse("2*x^2 - 1")), UniPoly::parse("-x^2 + 2"));
    EXPECT_THROW(reverse_poly(UniPoly::parse("x^2 + x")), PreconditionError);
}

TEST(UniPolyArith, TaylorShift) {
    Gen g(20);
    for (int i = 0; i < 50; ++i) {
        UniPoly f = g.unipoly(5, 20);
        Integer c = g.integer(5), x = g.integer(7);
        EXPECT_EQ(f.taylor_shift(c)(x), f(Integer(x + c)));
    }
}
