#include <gtest/gtest.h>

#include "rtorsion/errors.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/polymatrix.hpp"
#include "rtorsion/resultant.hpp"
#include "support.hpp"

using namespace rtorsion;
using rt_test::Gen;
using rt_test::to_double;

TEST(Sylvester, LinearCase) {
    PolyMatrix s = sylvester_matrix(MultiPoly::parse("x - a"), MultiPoly::parse("x - b"), "x");
    ASSERT_EQ(s.rows(), 2);
    EXPECT_EQ(s(0, 0), MultiPoly(1));
    EXPECT_EQ(s(0, 1), MultiPoly::parse("-a"));
    EXPECT_EQ(s(1, 0), MultiPoly(1));
    EXPECT_EQ(s(1, 1), MultiPoly::parse("-b"));
}

TEST(Sylvester, Shape) {
    PolyMatrix s = sylvester_matrix(MultiPoly::parse("x^2 + 1"), MultiPoly::parse("x^3 - x + 2"), "x");
    EXPECT_EQ(s.rows(), 5);
    EXPECT_EQ(s.cols(), 5);
    // Three rows of f, then two of g.
    EXPECT_EQ(s(2, 2), MultiPoly(1));
    EXPECT_EQ(s(3, 0), MultiPoly(1));
    EXPECT_EQ(s(4, 4), MultiPoly(2));
    EXPECT_THROW(sylvester_matrix(MultiPoly(3), MultiPoly(5), "x"), PreconditionError);
}

TEST(Resultant, WorkedEliminationExample) {
    MultiPoly f = MultiPoly::parse("2*x^2 + y^2 - 1"), g = MultiPoly::parse("x*y - 1");
    EXPECT_EQ(sylvester_matrix(f, g, "x").rows(), 3);
    EXPECT_EQ(resultant(f, g, "x"), MultiPoly::parse("y^4 - y^2 + 2"));
}

// A factor x^k in f contributes res(x, g)^k = g(0)^k and must not be stripped.
TEST(Resultant, KeepsPowersOfTheVariable) {
    EXPECT_EQ(resultant(MultiPoly::parse("x^2 + x"), MultiPoly::parse("x - 2"), "x"), MultiPoly(6));
    EXPECT_EQ(resultant(MultiPoly::parse("x^3"), MultiPoly::parse("x - y"), "x"), MultiPoly::parse("-y^3"));
    // Negative powers are still cleared.
    EXPECT_EQ(resultant(MultiPoly::parse("x + x^-1"), MultiPoly::parse("x - 2"), "x"), MultiPoly(5));
}

TEST(Resultant, SelfResultantVanishes) {
    Gen g(21);
    for (int i = 0; i < 30; ++i) {
        MultiPoly f = g.unipoly(g.uniform(1, 5), 9).to_multi();
        EXPECT_TRUE(resultant(f, f, "x").is_zero());
    }
}

TEST(Determinant, SmallCases) {
    EXPECT_EQ(determinant(PolyMatrix::identity(6)), MultiPoly(1));
    PolyMatrix m{{MultiPoly::parse("x"), MultiPoly::parse("y"), MultiPoly(1)},
                 {MultiPoly(2), MultiPoly(3), MultiPoly::parse("x*y")},
                 {MultiPoly::parse("x"), MultiPoly::parse("y"), MultiPoly(1)}};
    EXPECT_TRUE(determinant(m).is_zero());
}

TEST(Determinant, BareissMatchesCofactorOracle) {
    Gen g(22);
    for (int i = 0; i < 40; ++i) {
        const int n = g.uniform(2, 5);
        PolyMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = g.multipoly({"s", "t"}, 2, 2, 5);
        EXPECT_EQ(determinant_bareiss(m), determinant_cofactor(m));
        EXPECT_EQ(determinant(m), determinant_cofactor(m));
    }
}

TEST(Determinant, IntegerBareissMatchesCofactor) {
    Gen g(23);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::vector<Integer>> a(5, std::vector<Integer>(5));
        PolyMatrix m(5, 5);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                a[r][c] = g.integer(20);
                m(r, c) = MultiPoly(a[r][c]);
            }
        EXPECT_EQ(MultiPoly(determinant_integer(a)), determinant_cofactor(m));
    }
}

// Large two-variable matrices go through evaluation/interpolation; compare
// against fraction-free elimination.
TEST(Determinant, InterpolationPathAgreesWithBareiss) {
    Gen g(24);
    for (int i = 0; i < 4; ++i) {
        PolyMatrix m(8, 8);
        for (int r = 0; r < 8; ++r)
            for (int c = 0; c < 8; ++c) m(r, c) = g.multipoly({"s", "t"}, 2, 2, 3);
        EXPECT_EQ(determinant(m), determinant_bareiss(m));
    }
}

TEST(Resultant, Multiplicativity) {
    Gen g(25);
    for (int i = 0; i < 200; ++i) {
        UniPoly f = g.unipoly(g.uniform(1, 6), 9), a = g.unipoly(g.uniform(1, 3), 9),
                b = g.unipoly(g.uniform(1, 3), 9);
        EXPECT_EQ(resultant(f, a * b), resultant(f, a) * resultant(f, b));
        MultiPoly mf = f.to_multi(), ma = a.to_multi(), mb = b.to_multi();
        if (i % 10 == 0) { EXPECT_EQ(resultant(mf, ma * mb, "x"), resultant(mf, ma, "x") * resultant(mf, mb, "x")); }
    }
}

// res(f, g) = a0^deg g prod_{f(xi)=0} g(xi) = (-1)^(deg f deg g) b0^deg f prod_{g(z)=0} f(z).
TEST(Resultant, RootProductFormula) {
    Gen g(26);
    PrecisionScope scope(160);
    for (int i = 0; i < 200; ++i) {
        const int m = g.uniform(1, 6), n = g.uniform(1, 6);
        UniPoly f = g.unipoly(m, 9), h = g.unipoly(n, 9);
        const Real exact = to_real(resultant(f, h));
        Complex via_f = pow(Complex(to_real(f.leading())), n);
        for (const auto& r : roots(f, 128))
            for (int k = 0; k < r.multiplicity; ++k) via_f *= evaluate(h, r.value);
        Complex via_g = pow(Complex(to_real(h.leading())), m);
        if ((m * n) % 2) via_g = -via_g;
        for (const auto& r : roots(h, 128))
            for (int k = 0; k < r.multiplicity; ++k) via_g *= evaluate(f, r.value);
        const Real scale = std::max(Real(1), Real(abs(exact)));
        EXPECT_LT(to_double(abs(via_f - Complex(exact)) / scale), 1e-6) << f.to_string() << " | " << h.to_string();
        EXPECT_LT(to_double(abs(via_g - Complex(exact)) / scale), 1e-6) << f.to_string() << " | " << h.to_string();
    }
}

TEST(DerivativeDivisibility, ConstructedInstances) {
    Gen g(27);
    const MultiPoly x = MultiPoly::variable("x");
    for (int i = 0; i < 30; ++i) {
        MultiPoly gx = x * g.multipoly({"y"}, 2, 2, 3) + g.multipoly({"y"}, 2, 2, 3);
        if (gx.degree("x") < 1) continue;
        MultiPoly zeta = g.multipoly({"y"}, 2, 2, 3);
        MultiPoly gz = substitute(gx, "x", zeta);
        if (gz.is_zero()) continue;
        const int m = g.uniform(1, 3);
        MultiPoly f(0);
        for (int k = 0; k < m; ++k) f += pow(gz, m - k) * g.multipoly({"y"}, 2, 2, 3) * pow(x - zeta, k);
        f += pow(x - zeta, m) * (x + g.multipoly({"y"}, 2, 1, 3));
        DivisibilityCertificate c = check_derivative_divisibility(f, gx, "x", zeta, m);
        EXPECT_TRUE(c.verify());
        EXPECT_EQ(c.conclusion * pow(c.g_at_zeta, m), resultant(f, gx, "x"));
    }
}

TEST(DerivativeDivisibility, Failures) {
    const MultiPoly f = MultiPoly::parse("x^2 + y"), gx = MultiPoly::parse("x - 1 - y");
    // g(0) = -1 - y does not divide f(0) = y.
    EXPECT_THROW(check_derivative_divisibility(f, gx, "x", MultiPoly(0), 1), VerificationError);
    // g(zeta) = 0 is the degenerate case.
    EXPECT_THROW(check_derivative_divisibility(MultiPoly::parse("(x - 2)^2"), MultiPoly::parse("x - 2"), "x",
                                               MultiPoly(2), 2),
                 PreconditionError);
}

TEST(ShiftInvert, GoldenRatio) {
    UniPoly g = shift_invert(UniPoly::parse("x^2 - x - 1"));
    EXPECT_TRUE(g.is_monic());
    EXPECT_EQ(g.degree(), 2);
    PrecisionScope scope(128);
    const Real s5 = sqrt(Real(5));
    for (const Real& a : {Real((1 + s5) / 2), Real((1 - s5) / 2)}) {
        Complex z(Real(1 / (a - 1)));
        EXPECT_LT(to_double(abs(evaluate(g, z))), 1e-30);
    }
}

TEST(ShiftInvert, Cases) {
    EXPECT_EQ(shift_invert(UniPoly::parse("x - 2")), UniPoly::parse("x - 1"));
    EXPECT_THROW(shift_invert(UniPoly::parse("2*x^2 + 2*x + 1")), PreconditionError);
    EXPECT_THROW(shift_invert(UniPoly::parse("x^2 - 1")), PreconditionError);
    EXPECT_THROW(shift_invert(UniPoly::parse("x^2 - 3")), PreconditionError);
}

TEST(AlgCombine, SqrtSix) {
    UniPoly r = alg_combine(UniPoly::parse("x^2 - 2"), UniPoly::parse("x^2 - 3"), CombineMode::Product);
    EXPECT_EQ(r.degree(), 4);
    EXPECT_TRUE(r.is_monic());
    PrecisionScope scope(128);
    EXPECT_LT(to_double(abs(evaluate(r, Complex(Real(sqrt(Real(6))))))), 1e-30);
}

TEST(AlgCombine, LinearSum) {
    EXPECT_EQ(alg_combine(UniPoly::parse("x - 3"), UniPoly::parse("x + 5"), CombineMode::Sum),
              UniPoly::parse("x + 2"));
}

TEST(AlgCombine, RandomMonicStaysMonicAndVanishes) {
    Gen g(28);
    PrecisionScope scope(160);
    for (int i = 0; i < 20; ++i) {
        UniPoly p = g.monic(g.uniform(1, 3), 5), q = g.monic(g.uniform(1, 3), 5);
        for (CombineMode mode : {CombineMode::Sum, CombineMode::Product}) {
            UniPoly r = alg_combine(p, q, mode);
            EXPECT_TRUE(r.is_monic_up_to_sign());
            EXPECT_EQ(r.degree(), p.degree() * q.degree());
            auto rp = roots(p, 128), rq = roots(q, 128);
            Complex z = mode == CombineMode::Sum ? rp[0].value + rq[0].value : rp[0].value * rq[0].value;
            std::vector<Complex> cs;
            for (const auto& c : r.coeffs()) cs.emplace_back(to_real(c));
            EXPECT_LT(to_double(abs(evaluate(cs, z)) / std::max(Real(1), evaluation_scale(cs, z))), 1e-25);
        }
    }
    EXPECT_THROW(alg_combine(UniPoly::parse("3"), UniPoly::parse("x"), CombineMode::Sum), PreconditionError);
}
