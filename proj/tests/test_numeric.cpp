#include <gtest/gtest.h>

#include <algorithm>

#include "rtorsion/errors.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/rep.hpp"
#include "support.hpp"

using namespace rtorsion;
using rt_test::Gen;
using rt_test::to_double;

namespace {

// Sort key for comparing root lists.
bool by_re_im(const ComplexApprox& a, const ComplexApprox& b) {
    if (abs(a.value.re - b.value.re) > 1e-20) return a.value.re < b.value.re;
    return a.value.im < b.value.im;
}

}  // namespace

TEST(Roots, IntegerRootsRecovered) {
    Gen g(41);
    PrecisionScope scope(128);
    for (int i = 0; i < 50; ++i) {
        const int n = g.uniform(1, 7);
        std::vector<int> rs;
        UniPoly f = UniPoly::parse("1");
        for (int k = 0; k < n; ++k) {
            int r = g.uniform(-9, 9);
            if (std::find(rs.begin(), rs.end(), r) != rs.end()) continue;
            rs.push_back(r);
            f = f * UniPoly({Integer(-r), Integer(1)});
        }
        if (f.degree() < 1) continue;
        auto found = roots(f, 128);
        ASSERT_EQ(found.size(), rs.size());
        for (const auto& z : found) {
            Integer r = round_to_integer(z.value.re);
            EXPECT_NE(std::find(rs.begin(), rs.end(), r.get_si()), rs.end());
            EXPECT_LT(to_double(abs(z.value - Complex(to_real(r)))), 1e-30);
        }
    }
}

TEST(Roots, Multiplicities) {
    UniPoly f = UniPoly::parse("(x - 1)^3*(x + 2)^2*(x^2 + 1)");
    auto rs = roots(f, 128);
    ASSERT_EQ(rs.size(), 4u);
    int total = 0;
    for (const auto& r : rs) {
        total += r.multiplicity;
        if (abs(r.value - Complex(Real(1))) < 1e-20) { EXPECT_EQ(r.multiplicity, 3); }
        if (abs(r.value - Complex(Real(-2))) < 1e-20) { EXPECT_EQ(r.multiplicity, 2); }
        if (abs(r.value.im) > 0.5) { EXPECT_EQ(r.multiplicity, 1); }
    }
    EXPECT_EQ(total, f.degree());
    EXPECT_THROW(roots(UniPoly::parse("7"), 128), PreconditionError);
}

// Expanding the computed roots gives back the coefficients.
TEST(Roots, ExpandInvertsRootFinding) {
    Gen g(42);
    PrecisionScope scope(200);
    for (int i = 0; i < 40; ++i) {
        UniPoly f = g.monic(g.uniform(1, 12), 50);
        if (squarefree_part(f).degree() != f.degree()) continue;
        std::vector<Complex> zs;
        for (const auto& r : roots(f, 200)) zs.push_back(r.value);
        auto c = expand_from_roots(zs);
        ASSERT_EQ(static_cast<int>(c.size()), f.degree() + 1);
        for (int k = 0; k <= f.degree(); ++k) {
            EXPECT_LT(to_double(abs(c[k] - Complex(to_real(f.coeff(k))))), 1e-40) << f.to_string();
        }
    }
}

TEST(Roots, ResidualsMeetPrecision) {
    Gen g(43);
    for (int bits : {64, 128, 256}) {
        PrecisionScope scope(bits + 32);
        for (int i = 0; i < 10; ++i) {
            UniPoly f = squarefree_part(g.unipoly(g.uniform(2, 10), 30));
            if (f.degree() < 1) continue;
            for (const auto& r : roots(f, bits)) {
                std::vector<Complex> cs;
                for (const auto& c : f.coeffs()) cs.emplace_back(to_real(c));
                const Real scale = evaluation_scale(cs, r.value);
                const Real rel = scale == 0 ? Real(0) : Real(abs(evaluate(cs, r.value)) / scale);
                EXPECT_LT(to_double(rel * pow(Real(2), bits / 2)), 1.0);
            }
        }
    }
}

// Same input, same output: twice at one precision, and agreement across precisions.
TEST(Roots, Deterministic) {
    UniPoly f = UniPoly::parse("x^12 - 124*x^11 + 3142*x^10 - 34792*x^9 + 196796*x^8 - 561760*x^7 + 627280*x^6 + "
                               "254848*x^5 - 866240*x^4 + 153088*x^3 + 253696*x^2 - 66560*x + 1024");
    PrecisionScope scope(300);
    auto a = roots(f, 256), b = roots(f, 256), c = roots(f, 128);
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].value.re, b[i].value.re);
        EXPECT_EQ(a[i].value.im, b[i].value.im);
    }
    std::sort(a.begin(), a.end(), by_re_im);
    std::sort(c.begin(), c.end(), by_re_im);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(to_double(abs(a[i].value - c[i].value)), 1e-30);
}

TEST(BackSubstitute, FiveTwoAtImaginaryUnit) {
    PrecisionScope scope(160);
    MultiPoly phi = riley_polynomial(TwistKnotFamily::make(2));
    auto ts = back_substitute(phi, Complex(Real(0), Real(1)), 128);
    ASSERT_EQ(ts.size(), 3u);
    UniPoly target = UniPoly::parse("t^3 + 7*t^2 + 14*t + 7", "t");
    for (const auto& t : ts) EXPECT_LT(to_double(abs(evaluate(target, t.value))), 1e-30);
}

TEST(BackSubstitute, RejectsDegenerateSpecialization) {
    PrecisionScope scope(128);
    // (s - 1) t + 1 is constant in t at s = 1.
    EXPECT_THROW(back_substitute(MultiPoly::parse("(s - 1)*t + 1"), Complex(Real(1)), 128), PreconditionError);
    EXPECT_THROW(back_substitute(MultiPoly::parse("u*t + 1"), Complex(Real(1)), 128), PreconditionError);
}

TEST(NearInteger, RoundsOrRefuses) {
    PrecisionScope scope(128);
    auto r = near_integer_vector({Real("2.0000000000000000000001"), Real("-3.9999999999999999999")}, Real("1e-15"));
    EXPECT_EQ(r.values, (std::vector<Integer>{2, -4}));
    EXPECT_LT(to_double(r.max_deviation), 1e-15);
    EXPECT_THROW(near_integer_vector({Real("0.5")}, Real("1e-15")), VerificationError);
}

TEST(Complex, Arithmetic) {
    PrecisionScope scope(128);
    Complex i(Real(0), Real(1));
    EXPECT_LT(to_double(abs(i * i + Complex(Real(1)))), 1e-35);
    Complex z(Real(3), Real(-4));
    EXPECT_LT(to_double(abs(z.abs() - 5)), 1e-35);
    EXPECT_LT(to_double(abs(z / z - Complex(Real(1)))), 1e-35);
    EXPECT_LT(to_double(abs(pow(z, -2) * pow(z, 2) - Complex(Real(1)))), 1e-35);
    EXPECT_THROW(z / Complex(), ConvergenceError);
}
