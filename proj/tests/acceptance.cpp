// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "reference_data.hpp"
#include "rtorsion/apoly.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/json_io.hpp"
#include "rtorsion/rep.hpp"
#include "rtorsion/resultant.hpp"
#include "rtorsion/seifert.hpp"
#include "rtorsion/surgery.hpp"

using namespace rtorsion;
using namespace rt_ref;

namespace {

struct Verdict {
    bool ok = true;
    std::string note;

    // Records the first failure.
    void check(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

MultiPoly P(const std::string& text) { return MultiPoly::parse(text); }
UniPoly U(const std::string& text, const std::string& var = "x") { return UniPoly::parse(text, var); }
double d(const Real& x) { return x.convert_to<double>(); }

// 1. Riley polynomial through the command line.
Verdict riley_exactness() {
    Verdict v;
    std::ostringstream out, err;
    const int code = cli::run({"riley", "--knot", "J(2,4)"}, out, err);
    v.check(code == 0, "riley exited with " + std::to_string(code) + ": " + err.str());
    if (!v.ok) return v;
    MultiPoly phi = multipoly_from_json(Json::parse(out.str())["payload"]["phi"]["json"]);
    v.check(phi == P(kFiveTwoRiley), "phi differs from the display: " + phi.to_string());
    auto [re, im] = specialize_at_i(phi, "s");
    v.check(re == P("-t^3 - 7*t^2 - 14*t - 7") && im.is_zero(), "phi(i, t) = " + re.to_string());
    return v;
}

// 2. A-polynomials by elimination and by recursion.
Verdict apoly_exactness() {
    Verdict v;
    v.check(equal_up_to_unit(a_polynomial(-1).poly, P(kFigureEightPoly)), "A(4_1) differs from the printed one");
    v.check(equal_up_to_unit(a_polynomial(2).poly, P(kFiveTwoPoly)), "A(5_2) differs from the printed one");
    for (int m = -3; m <= 3; ++m)
        v.check(a_polynomial(m).poly == hoste_shanahan(m).poly, "recursion disagrees at m = " + std::to_string(m));
    return v;
}

// 3. Complement torsion modulo phi.
Verdict complement_torsion_check() {
    Verdict v;
    TwistKnotFamily k41 = TwistKnotFamily::make(-1);
    TorsionFraction a = complement_torsion(k41);
    PseudoDivision w = pseudo_divide(a.numerator - P("-2*(s + s^-1 - 1)") * a.denominator, riley_polynomial(k41), "t");
    v.check(w.remainder.is_zero(), "4_1: nonzero remainder " + w.remainder.to_string());
    TwistKnotFamily k52 = TwistKnotFamily::make(2);
    TorsionFraction b = complement_torsion(k52);
    PseudoDivision w2 = pseudo_divide(MultiPoly(2) * b.numerator - P("-t^3 - 3*t^2 + 2*t + 9") * b.denominator,
                                      riley_polynomial(k52), "t");
    auto [re, im] = specialize_at_i(w2.remainder, "s");
    v.check(re.is_zero() && im.is_zero(), "5_2 at s = i: remainder " + re.to_string() + " + i(" + im.to_string() + ")");
    return v;
}

// Exact outputs and verdicts of criteria 4-6 at one precision.
struct SurgeryRun {
    std::string poly4, poly5, poly6;
    std::vector<bool> flags;
    Verdict v4, v5, v6;
};

SurgeryRun surgery_runs(int precision) {
    SurgeryRun r;
    {
        auto c = torsion_annihilator(TwistKnotFamily::make(-1), SurgerySlope::make(1, 1), precision);
        r.poly4 = c.annihilator.to_string();
        r.v4.check(c.verified, "not verified: " + c.failure);
        r.v4.check(c.annihilator == U("x^3 - 12*x^2 + 20*x - 8"), "annihilator " + r.poly4);
        r.flags.push_back(c.verified);
    }
    {
        auto pts = solve_representations(TwistKnotFamily::make(-1), SurgerySlope::make(2, 3), precision);
        r.v5.check(pts.size() == 12, std::to_string(pts.size()) + " solutions");
        const int missing = unmatched_rows(pts, kFigureEightTwoThirds, 1e-4, 0);
        r.v5.check(missing == 0, std::to_string(missing) + " table rows unmatched at 1e-4");
        auto c = torsion_annihilator(TwistKnotFamily::make(-1), SurgerySlope::make(2, 3), precision);
        r.poly5 = c.annihilator.to_string();
        r.v5.check(c.verified, "not verified: " + c.failure);
        const UniPoly f = U(kFigureEightTwoThirdsPoly);
        r.v5.check(!c.factors.empty() && c.factors[0].factor == f && c.factors[0].multiplicity == 2,
                   "multiplicity-2 factor differs from the printed polynomial");
        r.v5.check(c.cofactor * pow(f, 2) == c.raw, "f^2 does not divide the eliminant");
        PerronReport pr = perron_check(c.annihilator, precision);
        r.v5.check(pr.is_perron && pr.dominant.re > 94 && pr.dominant.re < 95 && pr.bracketed,
                   "Perron check: dominant " + pr.dominant.to_string());
        r.flags.insert(r.flags.end(), {missing == 0, c.verified, pr.is_perron, pr.bracketed});
    }
    {
        auto pts = solve_representations(TwistKnotFamily::make(2), SurgerySlope::make(1, 2), precision);
        int cyclic = 0;
        bool at_one = true;
        for (const auto& p : pts)
            if (!p.acyclic) {
                ++cyclic;
                at_one = at_one && abs(p.s - Complex(Real(1))) < 1e-20;
            }
        r.v6.check(pts.size() == 17, std::to_string(pts.size()) + " solutions");
        r.v6.check(cyclic == 3 && at_one, std::to_string(cyclic) + " non-acyclic points");
        auto c = torsion_annihilator(TwistKnotFamily::make(2), SurgerySlope::make(1, 2), precision);
        r.poly6 = c.annihilator.to_string();
        r.v6.check(c.verified, "not verified: " + c.failure);
        r.v6.check(c.annihilator == U(kFiveTwoOneHalfPoly) && c.annihilator.coeff(0) == 13778944,
                   "annihilator " + r.poly6);
        PerronReport pr = perron_check(c.annihilator, precision);
        r.v6.check(pr.is_perron && abs(pr.dominant.re - Real("148.658")) < 1e-3,
                   "Perron check: dominant " + pr.dominant.to_string());
        r.flags.insert(r.flags.end(), {cyclic == 3, c.verified, pr.is_perron});
    }
    return r;
}

const SurgeryRun& surgery_at(int precision) {
    static std::map<int, SurgeryRun> cache;
    auto it = cache.find(precision);
    if (it == cache.end()) it = cache.emplace(precision, surgery_runs(precision)).first;
    return it->second;
}

// 7. Even slope counterexample.
Verdict even_slope() {
    Verdict v;
    SlopePolyReport r = monic_slope_poly(-1, 2, 1);
    v.check(r.f.with_var("x") == U(kEvenSlopePoly), "eliminant " + r.f.to_string());
    v.check(r.f_at_1 == -49, "f(1) = " + r.f_at_1.get_str());
    return v;
}

// 8. Integer surgeries on the figure-eight knot.
Verdict div_by_16() {
    Verdict v;
    for (int p = -5; p <= 5; ++p) {
        if (p == 0) continue;
        const std::string tag = "p = " + std::to_string(p) + ": ";
        try {
            IntegerSurgeryReport r = integer_surgery_eliminant(p);
            v.check(abs(r.leading) == 16, tag + "leading " + r.leading.get_str());
            const UniPoly div = p % 2 ? U("4*(2*x - 3)^2") : UniPoly::constant(16, "x");
            v.check(divide(r.h, div).remainder.is_zero(), tag + "not divisible by " + div.to_string());
            v.check(r.quotient.is_monic(), tag + "quotient not monic");
            if (p == 1)
                v.check(divide(r.quotient, U("x^3 - 12*x^2 + 20*x - 8")).remainder.is_zero(),
                        tag + "quotient not divisible by the 1/1 annihilator");
        } catch (const Error& e) {
            v.check(false, tag + e.what());
        }
    }
    return v;
}

// 9. Derivatives of A at L = -1.
Verdict diff_of_a() {
    Verdict v;
    // The identities hold for the +L^3 representative.
    const MultiPoly a = -P(kFiveTwoPoly);
    v.check(equal_up_to_unit(a, a_polynomial(2).poly), "representative is not A(5_2)");
    const MultiPoly u = P("M^2 - 1");
    auto at = [&](int n) { return substitute(scaled_derivative(a, "L", n), "L", MultiPoly(-1)); };
    v.check(at(0) == pow(u, 3) * P("2*M^8 + 4*M^6 + 5*M^4 + 4*M^2 + 2"), "n = 0 identity");
    v.check(at(1) == -pow(u, 2) * P("M^10 - M^6 - 4*M^4 - 6*M^2 - 5"), "n = 1 identity");
    v.check(at(2) == u * P("M^8 + 2*M^2 + 4"), "n = 2 identity");
    for (int m : {-2, -1, 1, 2, 3}) {
        try {
            DiffDivisibilityReport r = verify_diff_divisibility(m);
            for (int n = 0; n < r.d; ++n) {
                MultiPoly lhs = substitute(scaled_derivative(r.a, "L", n), "L", MultiPoly(-1));
                v.check(r.quotients[n] * pow(u, r.d - n) == lhs, "m = " + std::to_string(m) + " n = " + std::to_string(n));
            }
        } catch (const Error& e) {
            v.check(false, "m = " + std::to_string(m) + ": " + e.what());
        }
    }
    return v;
}

// 10. Slope divisibility and the monic s-polynomial.
Verdict twist_knot_prop() {
    Verdict v;
    for (int m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        const MultiPoly a = a_polynomial(m).poly;
        const int dm = twist_degree(m);
        for (int p : {-1, 1})
            for (int q : {1, 3, 5}) {
                const std::string tag = "m=" + std::to_string(m) + " " + std::to_string(p) + "/" + std::to_string(q) + ": ";
                try {
                    const MultiPoly Lq = MultiPoly::monomial({"L"}, {q});
                    const MultiPoly sign(q % 2 ? -1 : 1);
                    MultiPoly g = p == 1 ? P("M") * Lq - MultiPoly(1) : Lq - P("M");
                    MultiPoly div = p == 1 ? sign * P("M") - MultiPoly(1) : sign - P("M");
                    v.check(try_divide(resultant(a, g, "L"), pow(div, dm)).has_value(), tag + "no exact division");
                    v.check(slope_divisibility(a, m, p, q).verify(), tag + "certificate does not verify");
                    SlopePolyReport r = monic_slope_poly(m, q, p);
                    v.check(r.f.is_monic() && abs(r.f_at_1) == 1, tag + "f = " + r.f.to_string());
                } catch (const Error& e) {
                    v.check(false, tag + e.what());
                }
            }
    }
    return v;
}

UniPoly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> c(-9, 9);
    std::vector<Integer> cs(deg + 1);
    for (auto& x : cs) x = c(rng);
    while (cs.back() == 0) cs.back() = c(rng);
    return UniPoly(cs, "x");
}

// 11. Resultant properties.
Verdict resultant_suite() {
    Verdict v;
    v.check(resultant(P("2*x^2 + y^2 - 1"), P("x*y - 1"), "x") == P("y^4 - y^2 + 2"), "worked example");
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> deg(1, 6), small(1, 3);
    for (int i = 0; i < 200; ++i) {
        UniPoly f = random_poly(rng, deg(rng)), a = random_poly(rng, small(rng)), b = random_poly(rng, small(rng));
        v.check(resultant(f, a * b) == resultant(f, a) * resultant(f, b), "multiplicativity, instance " + std::to_string(i));
    }
    PrecisionScope scope(160);
    Real worst = 0;
    for (int i = 0; i < 200; ++i) {
        const int m = deg(rng), n = deg(rng);
        UniPoly f = random_poly(rng, m), g = random_poly(rng, n);
        const Real exact = to_real(resultant(f, g));
        // a0^deg g prod g(xi) and (-1)^(mn) b0^deg f prod f(zeta).
        Complex via_f = pow(Complex(to_real(f.leading())), n);
        for (const auto& r : roots(f, 128))
            for (int k = 0; k < r.multiplicity; ++k) via_f *= evaluate(g, r.value);
        Complex via_g = pow(Complex(to_real(g.leading())), m);
        if ((m * n) % 2) via_g = -via_g;
        for (const auto& r : roots(g, 128))
            for (int k = 0; k < r.multiplicity; ++k) via_g *= evaluate(f, r.value);
        const Real scale = std::max(Real(1), Real(abs(exact)));
        worst = std::max(worst, Real(abs(via_f - Complex(exact)) / scale));
        worst = std::max(worst, Real(abs(via_g - Complex(exact)) / scale));
    }
    v.check(worst < 1e-6, "root product identity: relative error " + std::to_string(d(worst)));
    return v;
}

// 12. Chebyshev variants.
Verdict chebyshev_suite() {
    Verdict v;
    v.check(chebyshev_V(2) == U("x^2 - x - 1"), "V_2 = " + chebyshev_V(2).to_string());
    for (int n = 0; n <= 100; ++n) {
        UniPoly p = chebyshev_V(n);
        v.check(p.is_monic() && abs(p.coeff(0)) == 1, "V_" + std::to_string(n));
    }
    PrecisionScope scope(192);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> nd(0, 50);
    std::uniform_real_distribution<double> td(-20, 20);
    int checked = 0;
    Real worst = 0;
    while (checked < 500) {
        const int n = nd(rng);
        const Real t(td(rng));
        const Real half = cos(t / 2);
        if (abs(half) < 1e-3) continue;
        const Real lhs = evaluate(chebyshev_V(n), Complex(Real(2 * cos(t)))).re;
        worst = std::max(worst, Real(abs(lhs - cos((n + Real(0.5)) * t) / half)));
        ++checked;
    }
    v.check(worst < 1e-12, "cosine identity error " + std::to_string(d(worst)));
    return v;
}

// 13. Seifert fibered homology spheres.
Verdict seifert_suite() {
    Verdict v;
    for (auto [a1, a2, a3] : {std::array<int, 3>{2, 3, 5}, {2, 3, 7}, {3, 5, 7}}) {
        const std::string tag = "Sigma(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + "): ";
        SeifertIndex idx = brieskorn_index(a1, a2, a3);
        auto vals = seifert_torsion_values(idx, admissible_tuples(idx), 256);
        PrecisionScope scope(288);
        for (const auto& val : vals) {
            if (!val.acyclic) continue;
            v.check(abs(val.tau - val.tau_product) < 1e-20 * std::max(Real(1), val.tau), tag + "product forms differ");
            SeifertCertificate c = seifert_integrality_certificate(idx, val.k, 256);
            v.check(c.poly.is_monic() && c.residual < 1e-20, tag + "certificate residual " + std::to_string(d(c.residual)));
        }
        SeifertSigma s = brieskorn_sigma(a1, a2, a3, {}, 256);
        v.check(s.max_deviation < 1e-15, tag + "sigma deviation " + std::to_string(d(s.max_deviation)));
        if (a1 == 2 && a2 == 3 && a3 == 5) {
            Real top = 0;
            for (const auto& val : s.values) top = std::max(top, val.tau);
            const Real expected = pow(4 * sin(pi() / 4) * sin(pi() / 6) * sin(pi() / 10), -2);
            v.check(abs(top - expected) < 1e-20, tag + "maximum " + std::to_string(d(top)));
            bool perron = top > 1;
            for (const auto& val : s.values)
                if (val.tau != top) perron = perron && abs(val.tau) < top;
            v.check(perron, tag + "maximum is not Perron in the value set");
        }
    }
    return v;
}

// 14. Splice condition for the trefoil and the figure-eight knot.
Verdict splice_suite() {
    Verdict v;
    for (int m : {1, -1}) {
        const std::string tag = TwistKnotFamily::make(m).name() + ": ";
        SpliceReport r = splice_condition_check(a_polynomial(m).poly, 256);
        v.check(r.satisfied && !r.witnesses.empty(), tag + "not satisfied");
        auto pm1 = [](const Complex& z) {
            return abs(z - Complex(Real(1))) < 1e-20 || abs(z + Complex(Real(1))) < 1e-20;
        };
        for (const auto& w : r.witnesses) {
            v.check(w.L0.abs() > 1e-20 && w.M0.abs() > 1e-20, tag + "zero coordinate");
            v.check(!(pm1(w.L0) && pm1(w.M0)), tag + "witness at (+-1, +-1)");
            v.check(w.residual_curve < 1e-10 && w.residual_apoly < 1e-10, tag + "residual too large");
        }
    }
    return v;
}

// 15. Criteria 4-6 at two precisions.
Verdict determinism() {
    Verdict v;
    const SurgeryRun& lo = surgery_at(128);
    const SurgeryRun& hi = surgery_at(256);
    v.check(lo.poly4 == hi.poly4 && lo.poly5 == hi.poly5 && lo.poly6 == hi.poly6, "exact polynomials differ");
    v.check(lo.flags == hi.flags, "verdicts differ");
    v.check(lo.v4.ok == hi.v4.ok && lo.v5.ok == hi.v5.ok && lo.v6.ok == hi.v6.ok, "criterion outcomes differ");
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"Riley polynomial exactness", riley_exactness},
        {"A-polynomial exactness", apoly_exactness},
        {"complement torsion", complement_torsion_check},
        {"torsion polynomial of 1-surgery on 4_1", [] { return surgery_at(256).v4; }},
        {"2/3 surgery on 4_1", [] { return surgery_at(256).v5; }},
        {"1/2 surgery on 5_2", [] { return surgery_at(256).v6; }},
        {"even-slope eliminant, f(1) = -49", even_slope},
        {"integer surgeries, divisibility by 16", div_by_16},
        {"derivatives of A at L = -1", diff_of_a},
        {"slope divisibility and monic s-polynomial", twist_knot_prop},
        {"resultant properties", resultant_suite},
        {"Chebyshev variants", chebyshev_suite},
        {"Seifert torsion", seifert_suite},
        {"splice condition", splice_suite},
        {"determinism at 128 and 256 bits", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.ok = false;
            v.note = std::string("exception: ") + e.what();
        }
        if (!v.ok) ++failed;
        std::printf("[%s] %2zu %s%s%s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.ok ? "" : ": ", v.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
