#include "rtorsion/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "rtorsion/errors.hpp"

namespace rtorsion {

int digits10_for_bits(int bits) { return static_cast<int>(std::ceil(bits * 0.30102999566398120)) + 1; }

PrecisionScope::PrecisionScope(int bits) : previous_(Real::default_precision()) {
    if (bits < 16) throw PreconditionError("precision must be at least 16 bits");
    Real::default_precision(static_cast<unsigned>(digits10_for_bits(bits)));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

Real to_real(const Integer& z) {
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Integer round_to_integer(const Real& x) {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDN);
    return z;
}

Real pi() { return boost::multiprecision::mpfr_float(boost::math::constants::pi<Real>()); }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.norm();
    if (d == 0) throw ConvergenceError("complex division by zero");
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Real Complex::abs() const { return boost::multiprecision::hypot(re, im); }

Real Complex::arg() const { return boost::multiprecision::atan2(im, re); }

Complex Complex::polar(const Real& r, const Real& theta) {
    return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

namespace {

std::string format_real(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

}  // namespace

std::string Complex::to_string(int digits) const {
    Real scale = std::max(Real(1), abs());
    Real tiny = scale * boost::multiprecision::pow(Real(10), -digits - 2);
    bool has_re = boost::multiprecision::abs(re) > tiny;
    bool has_im = boost::multiprecision::abs(im) > tiny;
    if (!has_im) return format_real(has_re ? re : Real(0), digits);
    std::string s;
    if (has_re) s = format_real(re, digits);
    std::string i = format_real(boost::multiprecision::abs(im), digits);
    if (im < 0)
        s += "-";
    else if (has_re)
        s += "+";
    return s + i + "i";
}

Complex pow(const Complex& z, int n) {
    if (n < 0) return Complex(Real(1)) / pow(z, -n);
    Complex r(Real(1));
    Complex b = z;
    while (n > 0) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

Real abs(const Complex& z) { return z.abs(); }

Complex evaluate(const UniPoly& f, const Complex& z) {
    Complex acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc *= z;
        acc.re += to_real(f.coeff(i));
    }
    return acc;
}

Complex evaluate(const std::vector<Complex>& coeffs, const Complex& z) {
    Complex acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

Real evaluation_scale(const std::vector<Complex>& coeffs, const Complex& z) {
    Real r = z.abs();
    Real acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + it->abs();
    return acc;
}

Complex evaluate(const MultiPoly& p, const std::map<std::string, Complex>& point, Real* scale) {
    const auto& vars = p.vars();
    std::vector<const Complex*> vals(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = point.find(vars[i]);
        if (it != point.end()) vals[i] = &it->second;
    }
    std::vector<std::map<int, Complex>> powers(vars.size());
    Complex acc;
    Real sc = 0;
    for (const auto& [e, c] : p.terms()) {
        Complex term(to_real(c));
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vals[i]) throw PreconditionError("evaluate: unbound variable " + vars[i]);
            auto it = powers[i].find(e[i]);
            if (it == powers[i].end()) it = powers[i].emplace(e[i], pow(*vals[i], e[i])).first;
            term *= it->second;
        }
        if (scale) sc += term.abs();
        acc += term;
    }
    if (scale) *scale = sc;
    return acc;
}

namespace {

// Value and derivative by Horner's rule.
void horner2(const std::vector<Complex>& a, const Complex& z, Complex& p, Complex& dp) {
    p = a.back();
    dp = Complex();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        dp *= z;
        dp += p;
        p *= z;
        p += a[k];
    }
}

// Starting points on circles whose radii come from the upper convex hull of
// (k, log|a_k|).
std::vector<Complex> initial_points(const std::vector<Complex>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<int> ks;
    std::vector<Real> ls;
    for (int k = 0; k <= n; ++k) {
        Real m = a[k].abs();
        if (m == 0) continue;
        Real l = boost::multiprecision::log(m);
        while (ks.size() >= 2) {
            int k1 = ks[ks.size() - 2], k2 = ks.back();
            const Real& l1 = ls[ls.size() - 2];
            const Real& l2 = ls.back();
            // Drop k2 if it lies on or below the segment k1 -> k.
            if ((l2 - l1) * (k - k1) <= (l - l1) * (k2 - k1)) {
                ks.pop_back();
                ls.pop_back();
            } else {
                break;
            }
        }
        ks.push_back(k);
        ls.push_back(l);
    }
    std::mt19937 rng(20240917u);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    const Real two_pi = 2 * pi();
    std::vector<Complex> z;
    z.reserve(n);
    for (std::size_t e = 0; e + 1 < ks.size(); ++e) {
        int cnt = ks[e + 1] - ks[e];
        Real radius = boost::multiprecision::exp((ls[e] - ls[e + 1]) / cnt);
        Real offset = two_pi * Real(jitter(rng));
        for (int j = 0; j < cnt; ++j) {
            Real theta = two_pi * j / cnt + offset + Real(0.4);
            z.push_back(Complex::polar(radius, theta));
        }
    }
    return z;
}

std::vector<ComplexApprox> aberth(const std::vector<Complex>& coeffs, int precision) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Complex> z = initial_points(coeffs);
    std::vector<char> done(n, 0);
    const Real step_eps = boost::multiprecision::pow(Real(2), -(precision - 4));
    const Real res_eps = boost::multiprecision::pow(Real(2), -(precision - 8));
    const int cap = 200 * std::max(n, 1);
    int converged = 0;
    Complex p, dp;
    for (int it = 0; it < cap && converged < n; ++it) {
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            horner2(coeffs, z[i], p, dp);
            Real scale = evaluation_scale(coeffs, z[i]);
            if (p.abs() <= res_eps * scale) {
                done[i] = 1;
                ++converged;
                continue;
            }
            Complex sum;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    Complex d = z[i] - z[j];
                    if (d.norm() != 0) sum += Complex(Real(1)) / d;
                }
            Complex ratio = dp.norm() == 0 ? Complex(Real(1)) : p / dp;
            Complex denom = Complex(Real(1)) - ratio * sum;
            Complex w = denom.norm() == 0 ? ratio : ratio / denom;
            z[i] -= w;
            if (w.abs() <= step_eps * std::max(Real(1), z[i].abs())) {
                done[i] = 1;
                ++converged;
            }
        }
    }
    const Real target = boost::multiprecision::pow(Real(2), -precision / 2);
    std::vector<ComplexApprox> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        // Newton polish.
        for (int k = 0; k < 8; ++k) {
            horner2(coeffs, z[i], p, dp);
            if (p.abs() <= res_eps * evaluation_scale(coeffs, z[i]) || dp.norm() == 0) break;
            z[i] -= p / dp;
        }
        horner2(coeffs, z[i], p, dp);
        Real scale = evaluation_scale(coeffs, z[i]);
        Real residual = p.abs();
        if (residual > target * scale)
            throw ConvergenceError("root finding did not converge: best residual " +
                                   format_real(residual / scale, 6) + " (relative) at degree " +
                                   std::to_string(n));
        out.push_back({z[i], precision, residual, 1});
    }
    return out;
}

}  // namespace

std::vector<ComplexApprox> roots_numeric(const std::vector<Complex>& coeffs0, int precision) {
    std::vector<Complex> coeffs = coeffs0;
    while (!coeffs.empty() && coeffs.back().norm() == 0) coeffs.pop_back();
    if (coeffs.size() < 2) throw PreconditionError("roots: polynomial is constant");
    std::vector<ComplexApprox> out;
    // Exact zero roots.
    std::size_t zeros = 0;
    while (coeffs[zeros].norm() == 0) ++zeros;
    for (std::size_t i = 0; i < zeros; ++i) out.push_back({Complex(), precision, Real(0), 1});
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(zeros));
    if (coeffs.size() < 2) return out;
    std::vector<ComplexApprox> found;
    try {
        PrecisionScope scope(precision + 32);
        found = aberth(coeffs, precision);
    } catch (const ConvergenceError&) {
        PrecisionScope scope(2 * precision + 32);
        std::vector<Complex> wide(coeffs.begin(), coeffs.end());
        found = aberth(wide, precision);
    }
    for (auto& r : found) {
        r.precision = precision;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ComplexApprox> roots(const UniPoly& f, int precision) {
    if (f.degree() < 1) throw PreconditionError("roots: polynomial is constant");
    auto dec = squarefree_decompose(f);
    std::vector<ComplexApprox> out;
    for (const auto& [g, mult] : dec.factors) {
        std::vector<Complex> c;
        {
            PrecisionScope scope(precision + 32);
            for (int i = 0; i <= g.degree(); ++i) c.emplace_back(to_real(g.coeff(i)));
        }
        for (auto& r : roots_numeric(c, precision)) {
            r.multiplicity = mult;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<Complex> specialize(const MultiPoly& phi, const std::string& s_var, const Complex& s0,
                                const std::string& t_var) {
    int ks = phi.var_index(s_var), kt = phi.var_index(t_var);
    for (const auto& v : phi.used_vars())
        if (v != s_var && v != t_var) throw PreconditionError("specialize: unexpected variable " + v);
    std::vector<Complex> c(static_cast<std::size_t>(std::max(0, phi.degree(t_var))) + 1);
    if (phi.min_degree(t_var) < 0) throw PreconditionError("specialize: negative exponent in " + t_var);
    std::map<int, Complex> powers;
    for (const auto& [e, coeff] : phi.terms()) {
        int es = ks < 0 ? 0 : e[ks];
        int et = kt < 0 ? 0 : e[kt];
        auto it = powers.find(es);
        if (it == powers.end()) it = powers.emplace(es, pow(s0, es)).first;
        c[et] += it->second * Complex(to_real(coeff));
    }
    return c;
}

std::vector<ComplexApprox> back_substitute(const MultiPoly& phi, const Complex& s0, int precision,
                                           const std::string& s_var, const std::string& t_var) {
    std::vector<Complex> c;
    {
        PrecisionScope scope(precision + 32);
        c = specialize(phi, s_var, s0, t_var);
        Real mx = 0;
        for (const auto& x : c) mx = std::max(mx, x.abs());
        Real tol = mx * boost::multiprecision::pow(Real(2), -precision / 2);
        while (!c.empty() && c.back().abs() <= tol) c.pop_back();
    }
    if (c.size() < 2) throw PreconditionError("back_substitute: specialized polynomial is constant or vanishes");
    return roots_numeric(c, precision);
}

std::vector<Complex> expand_from_roots(const std::vector<Complex>& rs) {
    std::vector<Complex> c{Complex(Real(1))};
    for (const auto& r : rs) {
        std::vector<Complex> n(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            n[i + 1] += c[i];
            n[i] -= c[i] * r;
        }
        c = std::move(n);
    }
    return c;
}

RoundedVector near_integer_vector(const std::vector<Real>& values, const Real& tol) {
    RoundedVector out;
    out.max_deviation = 0;
    for (const auto& v : values) {
        Integer z = round_to_integer(v);
        Real dev = boost::multiprecision::abs(v - to_real(z));
        out.max_deviation = std::max(out.max_deviation, dev);
        out.values.push_back(z);
    }
    if (out.max_deviation >= tol)
        throw VerificationError("values are not within " + format_real(tol, 3) + " of integers (deviation " +
                                format_real(out.max_deviation, 6) + ")");
    return out;
}

}  // namespace rtorsion
