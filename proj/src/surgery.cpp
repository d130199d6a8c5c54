#include "rtorsion/surgery.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "rtorsion/apoly.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/resultant.hpp"

namespace rtorsion {

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

MultiPoly s_power(int k) { return MultiPoly::monomial({"s"}, {k}); }

// base^n mod phi, reducing after every multiplication.
MultiPoly pow_mod(const MultiPoly& base, int n, const MultiPoly& phi) {
    MultiPoly r(1), b = reduce_modulo(base, phi, "t");
    while (n > 0) {
        if (n & 1) r = reduce_modulo(r * b, phi, "t");
        n >>= 1;
        if (n) b = reduce_modulo(b * b, phi, "t");
    }
    return r;
}

UniPoly to_uni(const MultiPoly& p, const std::string& v) {
    MultiPoly n = normalize_laurent(p).poly.compact();
    for (const auto& u : n.used_vars())
        if (u != v) throw Error("expected a polynomial in " + v + " only, found " + u);
    return UniPoly::from_multi(n, v);
}

UniPoly positive(const UniPoly& f) { return !f.is_zero() && f.leading() < 0 ? -f : f; }

int ext_gcd(int a, int b, int& x, int& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    int x1, y1;
    int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Real tolerance(int precision, int divisor) { return boost::multiprecision::pow(Real(2), -precision / divisor); }

}  // namespace

SurgerySlope SurgerySlope::make(int p, int q) {
    if (q == 0) throw PreconditionError("surgery slope: q must be nonzero");
    if (std::gcd(p, q) != 1) throw PreconditionError("surgery slope: p and q must be coprime");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    // p q' - q p' = 1: solve p x + q y = 1, then q' = x, p' = -y.
    int x, y;
    ext_gcd(p, q, x, y);
    int qc = x, pc = -y;
    // General solution (p' + k p, q' + k q); minimize |p'|, ties to p' >= 0.
    if (p != 0) {
        const long k0 = -std::lround(static_cast<double>(pc) / p);
        long best_k = k0;
        for (long k = k0 - 1; k <= k0 + 1; ++k) {
            long c = pc + k * p, b = pc + best_k * p;
            if (std::labs(c) < std::labs(b) || (std::labs(c) == std::labs(b) && c > b)) best_k = k;
        }
        pc = static_cast<int>(pc + best_k * p);
        qc = static_cast<int>(qc + best_k * q);
    }
    return with_continuation(p, q, pc, qc);
}

SurgerySlope SurgerySlope::with_continuation(int p, int q, int p_cont, int q_cont) {
    if (q == 0) throw PreconditionError("surgery slope: q must be nonzero");
    if (std::gcd(p, q) != 1) throw PreconditionError("surgery slope: p and q must be coprime");
    if (q < 0) {
        p = -p;
        q = -q;
        p_cont = -p_cont;
        q_cont = -q_cont;
    }
    if (static_cast<long>(p) * q_cont - static_cast<long>(q) * p_cont != 1)
        throw PreconditionError("surgery slope: continuation does not satisfy p q' - q p' = 1");
    SurgerySlope s;
    s.p = p;
    s.q = q;
    s.p_cont = p_cont;
    s.q_cont = q_cont;
    return s;
}

std::string SurgerySlope::to_string() const { return std::to_string(p) + "/" + std::to_string(q); }

SurgerySlope parse_slope(std::string_view text) {
    auto read = [&](std::string_view part) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("malformed slope '" + std::string(text) + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return SurgerySlope::make(read(text), 1);
    int p = read(text.substr(0, slash));
    int q = read(text.substr(slash + 1));
    if (q == 0) throw ParseError("slope denominator must be nonzero in '" + std::string(text) + "'");
    if (std::gcd(p, q) != 1) throw ParseError("slope '" + std::string(text) + "' is not in lowest terms");
    return SurgerySlope::make(p, q);
}

bool removes_s_plus_1(const TwistKnotFamily& family, const SurgerySlope& slope) {
    return family.m == -1 && std::abs(slope.p) == 1;
}

SurgerySystem surgery_system(const TwistKnotFamily& family, const SurgerySlope& slope) {
    SurgerySystem sys;
    sys.phi = riley_polynomial(family);
    sys.lambda = reduce_modulo(longitude_eigenvalue(family), sys.phi, "t");
    MultiPoly P = reduce_modulo(s_power(slope.p) * pow_mod(sys.lambda, slope.q, sys.phi) - MultiPoly(1), sys.phi, "t");
    if (P.is_zero()) throw Error("surgery equation vanishes modulo the Riley polynomial");
    sys.P = normalize_laurent(P, "s").poly;
    MultiPoly r = resultant(sys.phi, sys.P, "t");
    if (r.is_zero()) throw Error("surgery eliminant S(s) vanishes identically");
    sys.raw = positive(primitive_part(to_uni(r, "s")));
    UniPoly sf = squarefree_part(sys.raw);
    const UniPoly sm1 = UniPoly::parse("s - 1", "s"), sp1 = UniPoly::parse("s + 1", "s");
    for (UniPoly w = sys.raw; w.degree() > 0; ++sys.s_minus_1) {
        auto d = divide(w, sm1);
        if (!d.remainder.is_zero()) break;
        w = d.quotient;
    }
    while (sf.degree() > 0 && sf.coeff(0) == 0) {
        sf = sf.shifted(-1);
        sys.removed.push_back("s");
    }
    if (sys.s_minus_1 > 0) {
        sf = divide_exact(sf, sm1);
        sys.removed.push_back("s - 1");
    }
    if (removes_s_plus_1(family, slope) && sf(Integer(-1)) == 0) {
        sf = divide_exact(sf, sp1);
        sys.removed.push_back("s + 1");
    }
    if (sf.degree() < 1) throw Error("surgery eliminant has no roots besides s = 0, +-1");
    sys.S = positive(sf);
    return sys;
}

TorsionExpression torsion_expression(const TwistKnotFamily& family, const SurgerySlope& slope) {
    MultiPoly phi = riley_polynomial(family);
    PolyMatrix lam = word_eval(family.lambda, riley_rep());
    TorsionFraction e = complement_torsion(family);
    MultiPoly ne = reduce_modulo(e.numerator, phi, "t");
    MultiPoly lpow = slope.q_cont >= 0 ? pow_mod(lam(0, 0), slope.q_cont, phi) : pow_mod(lam(1, 1), -slope.q_cont, phi);
    TorsionExpression out;
    out.U = reduce_modulo(s_power(slope.p_cont) * lpow, phi, "t");
    out.numerator = reduce_modulo(-ne * out.U, phi, "t");
    MultiPoly um1 = out.U - MultiPoly(1);
    out.denominator = reduce_modulo(e.denominator * reduce_modulo(um1 * um1, phi, "t"), phi, "t");
    return out;
}

namespace {

bool preferred(const Complex& s, const Real& eps) {
    Real r = s.abs();
    if (r < 1 - eps) return true;
    if (r > 1 + eps) return false;
    return s.im >= -eps;
}

bool close(const Complex& a, const Complex& b, const Real& eps) {
    return (a - b).abs() <= eps * std::max(Real(1), std::max(a.abs(), b.abs()));
}

void sort_points(std::vector<SolutionPoint>& pts) {
    std::stable_sort(pts.begin(), pts.end(), [](const SolutionPoint& a, const SolutionPoint& b) {
        Real ea = a.tau.abs(), eb = b.tau.abs();
        Real tol = Real(1e-30) * std::max(Real(1), std::max(ea, eb));
        if (boost::multiprecision::abs(ea - eb) > tol) return ea < eb;
        Real pa = a.tau.norm() == 0 ? Real(0) : a.tau.arg(), pb = b.tau.norm() == 0 ? Real(0) : b.tau.arg();
        if (boost::multiprecision::abs(pa - pb) > Real(1e-30)) return pa < pb;
        Real sa = a.s.abs(), sb = b.s.abs();
        if (boost::multiprecision::abs(sa - sb) > Real(1e-30)) return sa < sb;
        Real ta = a.t.arg(), tb = b.t.arg();
        return ta < tb;
    });
}

}  // namespace

std::vector<SolutionPoint> solve_representations(const TwistKnotFamily& family, const SurgerySlope& slope,
                                                 int precision) {
    if (precision < 53) throw PreconditionError("solve_representations: precision must be at least 53 bits");
    SurgerySystem sys = surgery_system(family, slope);
    TorsionExpression expr = torsion_expression(family, slope);
    PrecisionScope scope(precision + 32);
    const Real eq_tol = tolerance(precision, 4);
    const Real pair_tol = tolerance(precision, 8);
    std::vector<SolutionPoint> pts;
    auto finish = [&](SolutionPoint& pt) {
        std::map<std::string, Complex> at{{"s", pt.s}, {"t", pt.t}};
        Real scale;
        pt.residual_phi = evaluate(sys.phi, at, &scale).abs() / std::max(Real(1), scale);
        pt.L = evaluate(sys.lambda, at);
        pt.residual_eq = (pow(pt.s, slope.p) * pow(pt.L, slope.q) - Complex(Real(1))).abs();
        pt.precision = precision;
    };
    for (const auto& sr : roots(sys.S, precision)) {
        for (const auto& tr : back_substitute(sys.phi, sr.value, precision)) {
            SolutionPoint pt;
            pt.s = sr.value;
            pt.t = tr.value;
            finish(pt);
            if (pt.residual_eq > eq_tol) continue;
            Real dscale;
            std::map<std::string, Complex> at{{"s", pt.s}, {"t", pt.t}};
            Complex den = evaluate(expr.denominator, at, &dscale);
            if (den.abs() <= eq_tol * std::max(Real(1), dscale)) {
                pt.acyclic = false;
                pt.tau = Complex();
            } else {
                pt.tau = evaluate(expr.numerator, at) / den;
            }
            pts.push_back(std::move(pt));
        }
    }
    // (s, t) ~ (1/s, t)
    std::vector<SolutionPoint> kept;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!preferred(pts[i].s, pair_tol)) {
            Complex inv = Complex(Real(1)) / pts[i].s;
            bool partner = false;
            for (std::size_t j = 0; j < pts.size() && !partner; ++j)
                partner = j != i && close(pts[j].s, inv, pair_tol) && close(pts[j].t, pts[i].t, pair_tol);
            if (partner) continue;
        }
        kept.push_back(pts[i]);
    }
    // Parabolic points s = 1 that satisfy the eigenvalue equation.
    if (sys.s_minus_1 > 0) {
        UniPoly phi1 = to_uni(substitute(sys.phi, "s", MultiPoly(1)), "t");
        MultiPoly p1 = substitute(sys.P, "s", MultiPoly(1));
        UniPoly g = p1.is_zero() ? phi1 : gcd_univariate(phi1, to_uni(p1, "t"));
        if (g.degree() >= 1) {
            for (const auto& tr : roots(g, precision)) {
                SolutionPoint pt;
                pt.s = Complex(Real(1));
                pt.t = tr.value;
                finish(pt);
                pt.acyclic = false;
                pt.tau = Complex();
                kept.push_back(std::move(pt));
            }
        }
    }
    sort_points(kept);
    return kept;
}

namespace {

// Coefficients of prod (x - r) rounded to integers; nullopt if some
// coefficient is not within tol of an integer.
std::optional<UniPoly> rounded_product(const std::vector<Complex>& rs, const Integer& scale, const Real& tol) {
    std::vector<Complex> c = expand_from_roots(rs);
    std::vector<Integer> out;
    Real sc = to_real(scale);
    for (const auto& z : c) {
        Real re = z.re * sc, im = z.im * sc;
        Integer r = round_to_integer(re);
        Real mag = std::max(Real(1), Real(boost::multiprecision::abs(re)));
        if (boost::multiprecision::abs(re - to_real(r)) > tol * mag || boost::multiprecision::abs(im) > tol * mag)
            return std::nullopt;
        out.push_back(r);
    }
    return UniPoly(out, "x");
}

std::vector<Integer> small_divisors(const Integer& n, long limit) {
    std::vector<Integer> out;
    Integer a = abs(n);
    for (long d = 1; d <= limit && Integer(d) <= a; ++d)
        if (a % d == 0) out.emplace_back(d);
    return out;
}

Real poly_residual(const UniPoly& f, const Complex& z) {
    std::vector<Complex> c;
    for (int i = 0; i <= f.degree(); ++i) c.emplace_back(to_real(f.coeff(i)));
    return evaluate(c, z).abs() / std::max(Real(1), evaluation_scale(c, z));
}

// Divisibility over Z; a leading coefficient that fails to divide means no.
bool exactly_divides(const UniPoly& d, const UniPoly& f) {
    try {
        return divide(f, d).remainder.is_zero();
    } catch (const DivisionError&) {
        return false;
    }
}

}  // namespace

AnnihilatorCertificate torsion_annihilator(const TwistKnotFamily& family, const SurgerySlope& slope,
                                           int precision) {
    AnnihilatorCertificate cert;
    cert.knot = family.name();
    cert.slope = slope;
    cert.precision = precision;
    cert.solutions = solve_representations(family, slope, precision);
    SurgerySystem sys = surgery_system(family, slope);
    cert.removed = sys.removed;
    TorsionExpression expr = torsion_expression(family, slope);

    MultiPoly H = normalize_laurent(var("x") * expr.denominator - expr.numerator, "s").poly;
    MultiPoly R = normalize_laurent(resultant(H, sys.phi, "t"), "s").poly;
    MultiPoly Sm = sys.S.to_multi();
    MultiPoly Rrem = pseudo_divide(R, Sm, "s").remainder;
    MultiPoly A = Rrem.is_zero() ? MultiPoly(0) : resultant(Rrem, Sm, "s");
    if (A.is_zero()) {
        cert.failure = "torsion eliminant vanishes identically";
        return cert;
    }
    cert.raw = positive(primitive_part(to_uni(A, "x")));
    auto dec = squarefree_decompose(cert.raw);
    cert.squarefree = dec.factors;

    PrecisionScope scope(precision + 32);
    const Real tau_tol = tolerance(precision, 4);
    std::vector<Complex> taus;
    std::vector<std::vector<int>> owners;
    for (std::size_t i = 0; i < cert.solutions.size(); ++i) {
        const auto& pt = cert.solutions[i];
        if (!pt.acyclic) continue;
        bool dup = false;
        for (std::size_t k = 0; k < taus.size() && !dup; ++k)
            if (close(taus[k], pt.tau, tau_tol)) {
                owners[k].push_back(static_cast<int>(i));
                dup = true;
            }
        if (!dup) {
            taus.push_back(pt.tau);
            owners.push_back({static_cast<int>(i)});
        }
    }
    if (taus.empty()) {
        cert.failure = "no acyclic solutions";
        return cert;
    }
    // The factor of raw vanishing exactly at the distinct torsion values.
    const Real round_tol = tolerance(precision, 3);
    std::optional<UniPoly> f;
    for (const auto& d : small_divisors(cert.raw.leading(), 100000)) {
        auto cand = rounded_product(taus, d, round_tol);
        if (!cand) continue;
        if (exactly_divides(*cand, cert.raw)) {
            f = *cand;
            break;
        }
    }
    if (!f) {
        cert.failure = "could not isolate the factor vanishing at the torsion values (leading coefficient of the "
                       "eliminant " + cert.raw.leading().get_str() + ")";
        return cert;
    }
    cert.leading = f->leading();
    int k = 0;
    UniPoly rest = cert.raw;
    while (true) {
        if (!exactly_divides(*f, rest)) break;
        auto d = divide(rest, *f);
        rest = d.quotient;
        ++k;
    }
    cert.annihilator = *f;
    cert.cofactor = rest;
    AnnihilatorFactor main{*f, k, {}};
    for (const auto& o : owners) main.matched.insert(main.matched.end(), o.begin(), o.end());
    std::sort(main.matched.begin(), main.matched.end());
    cert.factors.push_back(main);
    if (rest.degree() > 0)
        for (const auto& [g, mult] : squarefree_decompose(rest).factors) cert.factors.push_back({g, mult, {}});

    cert.max_residual = 0;
    cert.min_cofactor = -1;
    for (const auto& z : taus) {
        cert.max_residual = std::max(cert.max_residual, poly_residual(*f, z));
        if (rest.degree() > 0) {
            Real c = poly_residual(rest, z);
            cert.min_cofactor = cert.min_cofactor < 0 ? c : std::min(cert.min_cofactor, c);
        }
    }
    if (!f->is_monic()) {
        cert.failure = "isolated factor is not monic: leading coefficient " + f->leading().get_str();
        return cert;
    }
    if (cert.max_residual > tolerance(precision, 3)) {
        cert.failure = "torsion values are not roots of the isolated factor to working precision";
        return cert;
    }
    cert.verified = true;
    return cert;
}

IntegerSurgeryReport integer_surgery_eliminant(int p) {
    if (p == 0) throw PreconditionError("integer_surgery_eliminant: p must be nonzero");
    IntegerSurgeryReport r;
    r.p = p;
    MultiPoly a = recursion_base(-1);
    MultiPoly as = substitute(a, {{"L", s_power(-p)}, {"M", var("s")}});
    as = normalize_laurent(as).poly;
    MultiPoly g = var("x") * MultiPoly::parse("(s - 1)^2") - MultiPoly::parse("2*(s^2 - s + 1)");
    r.h = to_uni(resultant(g, as, "s"), "x");
    r.leading = r.h.leading();
    if (abs(r.leading) != 16)
        throw VerificationError("integer surgery eliminant: leading coefficient " + r.leading.get_str() + " is not +-16");
    r.divisor = p % 2 != 0 ? UniPoly::parse("4*(2*x - 3)^2", "x") : UniPoly::constant(16, "x");
    auto d = divide(r.h, r.divisor);
    if (!d.remainder.is_zero())
        throw VerificationError("integer surgery eliminant: not divisible by " + r.divisor.to_string());
    r.quotient = positive(d.quotient);
    if (!r.quotient.is_monic())
        throw VerificationError("integer surgery eliminant: quotient is not monic: " + r.quotient.to_string());
    r.h_at_1 = r.h(Integer(1));
    auto [re, im] = specialize_at_i(as, "s");
    Integer x = re.is_zero() ? Integer(0) : re.constant_value();
    Integer y = im.is_zero() ? Integer(0) : im.constant_value();
    r.norm_at_i = x * x + y * y;
    if (abs(r.h_at_1) != r.norm_at_i)
        throw VerificationError("integer surgery eliminant: |h(1)| differs from |A(i^-p, i)|^2");
    if (p % 2 == 0 && r.norm_at_i != 0 && r.norm_at_i != 16)
        throw VerificationError("integer surgery eliminant: h(1) = " + r.h_at_1.get_str() + " is neither 0 nor +-16");
    return r;
}

OneOverQReport one_over_q_certificate(int q) {
    if (q == 0) throw PreconditionError("one_over_q_certificate: q must be nonzero");
    OneOverQReport r;
    r.q = q;
    MultiPoly a = recursion_base(-1);
    MultiPoly f = substitute(a, "M", MultiPoly::monomial({"L"}, {-q}));
    r.f = to_uni(f, "L");
    if (r.f(Integer(-1)) != 0) throw VerificationError("one_over_q: f(-1) != 0");
    if (r.f.derivative()(Integer(-1)) != 0) throw VerificationError("one_over_q: f'(-1) != 0");
    r.h = divide_exact(r.f, UniPoly::parse("(L + 1)^2", "L"));
    r.f_at_1 = r.f(Integer(1));
    r.h_at_1 = r.h(Integer(1));
    if (r.f_at_1 != 4) throw VerificationError("one_over_q: f(1) = " + r.f_at_1.get_str() + ", expected 4");
    if (r.h_at_1 != 1) throw VerificationError("one_over_q: h(1) = " + r.h_at_1.get_str() + ", expected 1");
    if (!r.h.is_monic_up_to_sign()) throw VerificationError("one_over_q: h is not monic: " + r.h.to_string());
    r.shifted = shift_invert(positive(r.h));
    return r;
}

TwistCertificate twist_knot_certificate(int m, int q) {
    if (q <= 0 || q % 2 == 0) throw PreconditionError("twist_knot_certificate: q must be odd and positive");
    TwistCertificate c;
    c.m = m;
    c.q = q;
    SlopePolyReport sp = monic_slope_poly(m, q, 1);
    c.s_poly = sp.f;
    c.f_at_1 = sp.f_at_1;
    if (abs(c.s_poly.coeff(0)) != 1)
        throw VerificationError("twist certificate: constant term of the s-polynomial is not +-1");
    c.s_inv_poly = positive(reverse_poly(c.s_poly));
    c.phi = riley_polynomial(TwistKnotFamily::make(m));
    const MultiPoly lc = c.phi.coefficients_in("t").rbegin()->second;
    if (!lc.is_monomial() || abs(lc.leading_coefficient()) != 1)
        throw VerificationError("twist certificate: phi is not monic in t up to a unit");
    c.shifted = shift_invert(c.s_poly);
    return c;
}

PerronReport perron_check(const UniPoly& f, int precision) {
    if (f.degree() < 1) throw PreconditionError("perron_check: constant polynomial");
    PerronReport r;
    auto rs = roots(f, precision);
    PrecisionScope scope(precision + 32);
    std::size_t top = 0;
    for (std::size_t i = 1; i < rs.size(); ++i)
        if (rs[i].value.abs() > rs[top].value.abs()) top = i;
    r.dominant = rs[top].value;
    r.second_modulus = 0;
    for (std::size_t i = 0; i < rs.size(); ++i)
        if (i != top) r.second_modulus = std::max(r.second_modulus, rs[i].value.abs());
    const Real sep = tolerance(precision, 4);
    Real top_mod = r.dominant.abs();
    r.real = boost::multiprecision::abs(r.dominant.im) <= sep * std::max(Real(1), top_mod);
    r.simple = rs[top].multiplicity == 1;
    if (r.real && r.simple && top_mod - r.second_modulus <= sep * top_mod)
        throw ConvergenceError("perron_check: the two largest root moduli agree to " +
                               std::to_string(precision / 4) + " bits; raise the precision");
    if (r.real) {
        Integer lo = round_to_integer(boost::multiprecision::floor(r.dominant.re));
        Integer a = f(lo), b = f(Integer(lo + 1));
        r.lower = lo;
        r.bracketed = sgn(a) * sgn(b) < 0;
    }
    r.is_perron = r.real && r.simple && r.dominant.re > 1 &&
                  r.second_modulus < top_mod * (1 - Real(1e-6));
    return r;
}

MultiPoly splice_curve() {
    return MultiPoly::parse(
        "L^2*M^16 - L*((M^32 + 1) - 4*(M^30 + M^2) - 2*(M^28 + M^4) + 16*(M^26 + M^6) + 13*(M^24 + M^8)"
        " - 32*(M^22 + M^10) - 46*(M^20 + M^12) + 20*(M^18 + M^14) + 70*M^16) + M^16");
}

SpliceReport splice_condition_check(const MultiPoly& a_poly, int precision) {
    SpliceReport rep;
    MultiPoly fc = splice_curve();
    MultiPoly aswap = normalize_laurent(rename(a_poly, {{"L", "M"}, {"M", "L"}})).poly;
    if (!aswap.depends_on("M")) {
        // A(M, L) free of M: common zeros need A(., L0) = 0 for all M.
        if (!aswap.depends_on("L")) {
            rep.resultant = aswap.is_zero() ? MultiPoly(0) : MultiPoly(1);
            return rep;
        }
    }
    rep.resultant = aswap.depends_on("M") ? resultant(fc, aswap, "M") : aswap;
    if (rep.resultant.is_zero()) throw Error("splice: f_C and A(M, L) share a common factor");
    if (!rep.resultant.depends_on("L")) return rep;
    UniPoly R = squarefree_part(to_uni(rep.resultant, "L"));
    auto l_roots = roots(R, precision);
    PrecisionScope scope(precision + 32);
    const Real tol = std::min(Real(1e-10), tolerance(precision, 4));
    const Real zero_tol = tolerance(precision, 4);
    for (const auto& lr : l_roots) {
        const Complex& l0 = lr.value;
        if (l0.abs() <= zero_tol) continue;
        std::vector<ComplexApprox> m_roots;
        MultiPoly other = aswap.depends_on("M") ? aswap : fc;
        try {
            m_roots = back_substitute(other, l0, precision, "L", "M");
        } catch (const PreconditionError&) {
            continue;
        }
        for (const auto& mr : m_roots) {
            const Complex& m0 = mr.value;
            if (m0.abs() <= zero_tol) continue;
            std::map<std::string, Complex> at{{"L", l0}, {"M", m0}};
            Real s1, s2;
            Real r1 = evaluate(fc, at, &s1).abs() / std::max(Real(1), s1);
            Real r2 = evaluate(aswap, at, &s2).abs() / std::max(Real(1), s2);
            if (r1 >= tol || r2 >= tol) continue;
            auto unit = [&](const Complex& z) {
                return close(z, Complex(Real(1)), zero_tol) || close(z, Complex(Real(-1)), zero_tol);
            };
            if (unit(l0) && unit(m0)) continue;
            rep.witnesses.push_back({l0, m0, r1, r2});
        }
    }
    rep.satisfied = !rep.witnesses.empty();
    return rep;
}

}  // namespace rtorsion
