#include "rtorsion/resultant.hpp"

#include "rtorsion/errors.hpp"

namespace rtorsion {

PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("sylvester_matrix: zero input");
    // Only negative powers are cleared; stripping a factor var^k would drop
    // res(var, g)^k from the result.
    MultiPoly fn = f.min_degree(var) < 0 ? normalize_laurent(f, var).poly : f;
    MultiPoly gn = g.min_degree(var) < 0 ? normalize_laurent(g, var).poly : g;
    const int n = fn.degree(var);
    const int m = gn.degree(var);
    if (n + m == 0) throw PreconditionError("sylvester_matrix: both inputs are constant in " + var);
    auto cf = fn.coefficients_in(var);
    auto cg = gn.coefficients_in(var);
    const int dim = n + m;
    PolyMatrix s(dim, dim);
    for (int i = 0; i < m; ++i)
        for (const auto& [e, c] : cf) s(i, i + n - e) = c;
    for (int i = 0; i < n; ++i)
        for (const auto& [e, c] : cg) s(m + i, i + m - e) = c;
    return s;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    return determinant(sylvester_matrix(f, g, var));
}

Integer resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) throw PreconditionError("resultant: zero input");
    const int n = f.degree(), m = g.degree();
    if (n + m == 0) throw PreconditionError("resultant: both inputs are constant");
    const int dim = n + m;
    std::vector<std::vector<Integer>> a(dim, std::vector<Integer>(dim, 0));
    for (int i = 0; i < m; ++i)
        for (int e = 0; e <= n; ++e) a[i][i + n - e] = f.coeff(e);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e <= m; ++e) a[m + i][i + m - e] = g.coeff(e);
    return determinant_integer(std::move(a));
}

bool DivisibilityCertificate::verify() const {
    if (static_cast<int>(quotients.size()) != m) return false;
    for (int k = 0; k < m; ++k) {
        MultiPoly claim = substitute(scaled_derivative(f, var, k), var, zeta);
        if (!(quotients[k] * pow(g_at_zeta, m - k) == claim)) return false;
    }
    return conclusion * pow(g_at_zeta, m) == resultant;
}

DivisibilityCertificate check_derivative_divisibility(const MultiPoly& f, const MultiPoly& g,
                                                      const std::string& var, const MultiPoly& zeta,
                                                      int m) {
    if (m < 0) throw PreconditionError("check_derivative_divisibility: negative m");
    if (m > f.degree(var)) throw PreconditionError("check_derivative_divisibility: m exceeds deg f");
    DivisibilityCertificate cert;
    cert.f = f;
    cert.g = g;
    cert.var = var;
    cert.zeta = zeta;
    cert.m = m;
    cert.g_at_zeta = substitute(g, var, zeta);
    if (cert.g_at_zeta.is_zero())
        throw PreconditionError("check_derivative_divisibility: g(zeta) = 0");
    for (int k = 0; k < m; ++k) {
        MultiPoly fk = substitute(scaled_derivative(f, var, k), var, zeta);
        auto q = try_divide(fk, pow(cert.g_at_zeta, m - k));
        if (!q)
            throw VerificationError("derivative divisibility fails at k = " + std::to_string(k) + ": " +
                                    cert.g_at_zeta.to_string() + "^" + std::to_string(m - k) +
                                    " does not divide " + fk.to_string());
        cert.quotients.push_back(*q);
    }
    cert.resultant = resultant(f, g, var);
    auto c = try_divide(cert.resultant, pow(cert.g_at_zeta, m));
    if (!c)
        throw Error("derivative divisibility: hypotheses hold but g(zeta)^m does not divide the resultant");
    cert.conclusion = *c;
    return cert;
}

UniPoly shift_invert(const UniPoly& f) {
    if (!f.is_monic()) throw PreconditionError("shift_invert: polynomial is not monic: " + f.to_string());
    Integer f1 = f(Integer(1));
    if (f1 == 0) throw PreconditionError("shift_invert: f(1) = 0, strip the root 1 first");
    if (abs(f1) != 1)
        throw PreconditionError("shift_invert: |f(1)| = " + Integer(abs(f1)).get_str() + " is not 1");
    UniPoly g = reverse_poly(f.taylor_shift(1));
    return g.leading() < 0 ? -g : g;
}

UniPoly alg_combine(const UniPoly& p, const UniPoly& q, CombineMode mode) {
    if (p.degree() < 1 || q.degree() < 1) throw PreconditionError("alg_combine: inputs must have degree >= 1");
    // The resultant below works with y-normalized inputs, so zero roots of p
    // are split off and accounted for by hand.
    int a = 0;
    while (p.coeff(a) == 0) ++a;
    if (a > 0) {
        const UniPoly p0 = p.shifted(-a);
        UniPoly zero_part = mode == CombineMode::Sum ? pow(q.with_var(p.var()), a)
                                                     : UniPoly::monomial(a * q.degree(), 1, p.var());
        return p0.degree() < 1 ? zero_part.scaled(p0.leading()) : alg_combine(p0, q, mode) * zero_part;
    }
    const std::vector<std::string> vars{"x", "y"};
    MultiPoly::TermMap pt, qt;
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) pt.emplace(Exponents{0, i}, p.coeff(i));
    MultiPoly P(vars, std::move(pt));
    MultiPoly Q;
    if (mode == CombineMode::Sum) {
        MultiPoly shift = MultiPoly::variable("x") - MultiPoly::variable("y");
        Q = substitute(q.to_multi().with_vars({q.var()}), q.var(), shift);
    } else {
        const int n = q.degree();
        for (int i = 0; i <= n; ++i)
            if (q.coeff(i) != 0) qt.emplace(Exponents{i, n - i}, q.coeff(i));
        Q = MultiPoly(vars, std::move(qt));
    }
    MultiPoly r = resultant(P, Q, "y");
    return UniPoly::from_multi(r.compact(), "x").with_var(p.var());
}

}  // namespace rtorsion
