#include "rtorsion/apoly.hpp"

#include <algorithm>
#include <map>

#include "rtorsion/errors.hpp"

namespace rtorsion {

namespace {

const std::vector<std::string> kLM{"L", "M"};

MultiPoly in_lm(const MultiPoly& p) { return p.with_vars(merge_vars(kLM, p.vars())); }

MultiPoly sign_normalized(const MultiPoly& p) {
    MultiPoly q = in_lm(p);
    return q.leading_coefficient() < 0 ? -q : q;
}

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

}  // namespace

MultiPoly raw_eliminant(const TwistKnotFamily& family) {
    MultiPoly phi = riley_polynomial(family);
    MultiPoly lam = reduce_modulo(longitude_eigenvalue(family), phi, "t");
    MultiPoly r = resultant(var("L") - lam, phi, "t");
    if (r.is_zero()) throw Error("A-polynomial eliminant vanishes identically for " + family.name());
    return in_lm(rename(r, {{"s", "M"}}));
}

APoly clean_a_polynomial(const MultiPoly& raw, std::string provenance) {
    APoly out;
    out.provenance = std::move(provenance);
    if (raw.is_zero()) throw PreconditionError("clean_a_polynomial: zero input");
    MultiPoly a = strip_units(raw);
    if (!(in_lm(a) == in_lm(raw)) && !(in_lm(a) == -in_lm(raw))) out.removed.push_back("unit");
    const MultiPoly lm1 = var("L") - MultiPoly(1);
    while (a.depends_on("L")) {
        auto q = try_divide(a, lm1);
        if (!q) break;
        a = *q;
        out.removed.push_back("L - 1");
    }
    if (a.depends_on("L")) {
        auto split = content_primitive(a, "L");
        if (!split.content.is_constant()) {
            out.removed.push_back(split.content.to_string());
            a = split.primitive;
        }
        MultiPoly g = gcd(a, scaled_derivative(a, "L", 1));
        if (!g.is_constant()) {
            out.removed.push_back("(" + g.to_string() + ") repeated");
            a = divide_exact(a, g);
        }
    }
    out.poly = sign_normalized(strip_units(a));
    return out;
}

APoly a_polynomial(int m) {
    if (m == 0) return {in_lm(MultiPoly(1)), "unknot", {}};
    return clean_a_polynomial(raw_eliminant(TwistKnotFamily::make(m)), "raw-eliminant");
}

MultiPoly recursion_x() {
    return in_lm(MultiPoly::parse("-L + L^2 + 2*L*M^2 + M^4 + 2*L*M^4 + L^2*M^4 + 2*L*M^6 + M^8 - L*M^8"));
}

MultiPoly recursion_y() { return in_lm(MultiPoly::parse("M^4*(L + M^2)^4")); }

MultiPoly recursion_base(int m) {
    if (m == 0) return in_lm(MultiPoly(1));
    if (m < -1 || m > 2) throw PreconditionError("recursion_base: base cases are m = -1, 0, 1, 2");
    // The recursion closes when every base case has a positive coefficient
    // on its top power of L.
    MultiPoly a = a_polynomial(m).poly;
    auto cs = a.coefficients_in("L");
    return cs.rbegin()->second.leading_coefficient() < 0 ? -a : a;
}

APoly hoste_shanahan(int m) {
    if (m >= -1 && m <= 2) return {sign_normalized(strip_units(recursion_base(m))), "recursion", {}};
    const MultiPoly x = recursion_x(), y = recursion_y();
    MultiPoly a, b;  // a = A_{k-1}, b = A_{k-2} (or mirrored for m < 0)
    if (m > 0) {
        b = recursion_base(1);
        a = recursion_base(2);
        for (int k = 3; k <= m; ++k) {
            MultiPoly c = x * a - y * b;
            b = std::move(a);
            a = std::move(c);
        }
    } else {
        b = recursion_base(0);
        a = recursion_base(-1);
        for (int k = -2; k >= m; --k) {
            MultiPoly c = x * a - y * b;
            b = std::move(a);
            a = std::move(c);
        }
    }
    APoly out;
    out.provenance = "recursion";
    out.poly = sign_normalized(strip_units(a));
    return out;
}

bool equal_up_to_unit(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    MultiPoly na = normalize_laurent(a).poly, nb = normalize_laurent(b).poly;
    return in_lm(na) == in_lm(nb) || in_lm(na) == -in_lm(nb);
}

NewtonPolygon newton_polygon(const MultiPoly& a, const std::string& lvar, const std::string& mvar) {
    if (a.is_zero()) throw PreconditionError("newton_polygon: zero polynomial");
    int il = a.var_index(lvar), im = a.var_index(mvar);
    std::vector<std::pair<int, int>> pts;
    for (const auto& [e, c] : a.terms()) pts.emplace_back(il < 0 ? 0 : e[il], im < 0 ? 0 : e[im]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    NewtonPolygon out;
    if (pts.size() == 1) {
        out.vertices = pts;
        out.degenerate = true;
        return out;
    }
    auto cross = [](const std::pair<int, int>& o, const std::pair<int, int>& p, const std::pair<int, int>& q) {
        return static_cast<long long>(p.first - o.first) * (q.second - o.second) -
               static_cast<long long>(p.second - o.second) * (q.first - o.first);
    };
    // Andrew's monotone chain, collinear points dropped.
    std::vector<std::pair<int, int>> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    out.vertices = hull;
    out.degenerate = hull.size() < 3;
    const std::size_t sides = out.degenerate ? 1 : hull.size();
    for (std::size_t i = 0; i < sides; ++i) {
        const auto& p = hull[i];
        const auto& q = hull[(i + 1) % hull.size()];
        if (p.first == q.first)
            out.slopes.emplace_back(std::nullopt);
        else
            out.slopes.emplace_back(Rational(q.second - p.second, q.first - p.first));
        if (out.slopes.back()) out.slopes.back()->canonicalize();
    }
    return out;
}

namespace {

// ±M^k check; returns (k, sign) or nullopt.
std::optional<std::pair<int, int>> unit_in_m(const MultiPoly& c) {
    if (!c.is_monomial()) return std::nullopt;
    const auto& [e, v] = *c.terms().begin();
    if (v != 1 && v != -1) return std::nullopt;
    for (const auto& name : c.used_vars())
        if (name != "M") return std::nullopt;
    int im = c.var_index("M");
    return std::make_pair(im < 0 ? 0 : e[im], v > 0 ? 1 : -1);
}

}  // namespace

UnitExtremesReport verify_unit_extremes(const MultiPoly& a) {
    if (a.is_zero()) throw PreconditionError("verify_unit_extremes: zero polynomial");
    auto cs = a.coefficients_in("L");
    UnitExtremesReport r;
    const auto& [hi, chi] = *cs.rbegin();
    const auto& [lo, clo] = *cs.begin();
    auto uh = unit_in_m(chi);
    if (!uh)
        throw VerificationError("leading L-coefficient (L^" + std::to_string(hi) + ") is not a unit: " +
                                chi.to_string());
    auto ul = unit_in_m(clo);
    if (!ul)
        throw VerificationError("trailing L-coefficient (L^" + std::to_string(lo) + ") is not a unit: " +
                                clo.to_string());
    r.leading_power = uh->first;
    r.leading_sign = uh->second;
    r.trailing_power = ul->first;
    r.trailing_sign = ul->second;
    return r;
}

ResExtremesReport verify_res_extremes(const MultiPoly& a, int p, int q) {
    if (p != 1 && p != -1) throw PreconditionError("verify_res_extremes: p must be 1 or -1");
    if (q <= 0) throw PreconditionError("verify_res_extremes: q must be positive");
    MultiPoly g = MultiPoly::monomial(kLM, {q, p}) - MultiPoly(1);
    ResExtremesReport r;
    r.p = p;
    r.q = q;
    r.resultant = resultant(in_lm(a), g, "L");
    if (r.resultant.is_zero()) throw VerificationError("res_L(A, M^p L^q - 1) vanishes identically");
    auto cs = r.resultant.coefficients_in("M");
    r.highest = cs.rbegin()->second.constant_value();
    r.lowest = cs.begin()->second.constant_value();
    if (abs(r.highest) != 1 || abs(r.lowest) != 1)
        throw VerificationError("extreme coefficients of res_L(A, M^" + std::to_string(p) + " L^" +
                                std::to_string(q) + " - 1) are " + r.highest.get_str() + " and " +
                                r.lowest.get_str());
    return r;
}

DiffDivisibilityReport verify_diff_divisibility(const MultiPoly& a, int m) {
    DiffDivisibilityReport r;
    r.m = m;
    r.d = twist_degree(m);
    r.a = in_lm(a);
    const MultiPoly m21 = in_lm(MultiPoly::parse("M^2 - 1"));
    for (int n = 0; n < r.d; ++n) {
        MultiPoly v = substitute(scaled_derivative(r.a, "L", n), "L", MultiPoly(-1));
        auto quo = try_divide(v, pow(m21, r.d - n));
        if (!quo)
            throw VerificationError("(M^2 - 1)^" + std::to_string(r.d - n) + " does not divide the n = " +
                                    std::to_string(n) + " derivative of A at L = -1");
        r.quotients.push_back(*quo);
    }
    return r;
}

DiffDivisibilityReport verify_diff_divisibility(int m) { return verify_diff_divisibility(a_polynomial(m).poly, m); }

DivisibilityCertificate slope_divisibility(const MultiPoly& a, int m, int p, int q) {
    if (p != 1 && p != -1) throw PreconditionError("slope_divisibility: p must be 1 or -1");
    if (q == 0) throw PreconditionError("slope_divisibility: q must be nonzero");
    const int d = twist_degree(m);
    MultiPoly g = MultiPoly::monomial(kLM, {q, p}) - MultiPoly(1);
    MultiPoly f = in_lm(a);
    if (f.degree("L") < d)
        throw PreconditionError("slope_divisibility: deg_L A < d(m)");
    return check_derivative_divisibility(f, g, "L", MultiPoly(-1), d);
}

SlopePolyReport monic_slope_poly(int m, int q, int p) {
    if (q <= 0) throw PreconditionError("monic_slope_poly: q must be positive");
    MultiPoly a = a_polynomial(m).poly;
    SlopePolyReport r;
    r.divisibility = slope_divisibility(a, m, p, q);
    MultiPoly f = normalize_laurent(r.divisibility.conclusion).poly;
    f = rename(f, {{"M", "s"}});
    if (f.depends_on("L")) throw Error("monic_slope_poly: quotient still depends on L");
    UniPoly u = UniPoly::from_multi(f.compact(), "s");
    if (u.is_zero()) throw VerificationError("monic_slope_poly: resultant vanishes");
    if (u.leading() < 0) u = -u;
    r.f = u;
    r.f_at_1 = u(Integer(1));
    r.monic = u.is_monic();
    if (!r.monic)
        throw VerificationError("monic_slope_poly: f is not monic, leading coefficient " + u.leading().get_str());
    if (q % 2 != 0 && abs(r.f_at_1) != 1)
        throw VerificationError("monic_slope_poly: |f(1)| = " + Integer(abs(r.f_at_1)).get_str() + " != 1");
    return r;
}

}  // namespace rtorsion
