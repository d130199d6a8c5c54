#include "rtorsion/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "rtorsion/errors.hpp"
#include "rtorsion/resultant.hpp"

namespace rtorsion {

UniPoly chebyshev_T(int n) {
    if (n < 0) throw PreconditionError("chebyshev_T: negative index");
    UniPoly a = UniPoly::constant(1), b = UniPoly::monomial(1);
    if (n == 0) return a;
    const UniPoly two_x = UniPoly::monomial(1, 2);
    for (int k = 2; k <= n; ++k) {
        UniPoly c = two_x * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

UniPoly chebyshev_V(int n) {
    if (n < 0) throw PreconditionError("chebyshev_V: negative index");
    UniPoly a = UniPoly::constant(1), b = UniPoly::parse("x - 1");
    if (n == 0) return a;
    const UniPoly x = UniPoly::monomial(1);
    for (int k = 2; k <= n; ++k) {
        UniPoly c = x * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

namespace {

UniPoly positive(const UniPoly& f) { return f.leading() < 0 ? -f : f; }

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

UniPoly sin_inverse_certificate(int a, int k, bool doubled) {
    if (a < 2) throw PreconditionError("sin_inverse_certificate: a must be at least 2");
    if (doubled != (a % 2 != 0))
        throw PreconditionError("sin_inverse_certificate: doubled form is for odd a, plain form for even a");
    UniPoly base;
    if (!doubled) {
        // sin(k pi/(2a)) = cos((a - k) pi/(2a)) is a root of T_a when a - k is odd.
        if (mod(k, 2) == 0) throw PreconditionError("sin_inverse_certificate: k must be odd for even a");
        base = chebyshev_T(a);
    } else {
        // 2 sin((a - 2k) pi/(2a)) = 2 cos(k pi/a).
        int l = mod(k, 2 * a);
        if (l > a) l = 2 * a - l;
        if (l == 0 || l == a)
            throw PreconditionError("sin_inverse_certificate: 2 sin((a - 2k) pi/(2a)) = ±2 is not a unit");
        const UniPoly v = chebyshev_V((a - 1) / 2);
        base = l % 2 != 0 ? v : v.negated_argument();
    }
    UniPoly r = positive(reverse_poly(base));
    if (!r.is_monic()) throw VerificationError("sin_inverse_certificate: reversed polynomial is not monic");
    return r;
}

UniPoly squared_roots(const UniPoly& f) {
    if (f.is_zero()) throw PreconditionError("squared_roots: zero polynomial");
    std::vector<Integer> even, odd;
    for (int i = 0; i <= f.degree(); ++i) (i % 2 == 0 ? even : odd).push_back(f.coeff(i));
    UniPoly e(even, f.var()), o(odd, f.var());
    return positive(e * e - UniPoly::monomial(1, 1, f.var()) * o * o);
}

UniPoly scaled_roots(const UniPoly& f, const Integer& c) {
    if (c == 0) throw PreconditionError("scaled_roots: zero scale");
    std::vector<Integer> cs(f.coeffs());
    Integer power = 1;
    for (int i = f.degree(); i >= 0; --i) {
        cs[i] *= power;
        power *= c;
    }
    return UniPoly(cs, f.var());
}

namespace {

// a x + b y = g
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    long long x1, y1;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

SeifertIndex SeifertIndex::make(int b, int g, const std::vector<std::pair<int, int>>& pairs) {
    if (g < 0) throw PreconditionError("Seifert index: genus must be nonnegative");
    SeifertIndex idx;
    idx.b = b;
    idx.g = g;
    for (const auto& [a, bi] : pairs) {
        if (a < 2) throw PreconditionError("Seifert index: a_i must be at least 2");
        if (std::gcd(a, bi) != 1) throw PreconditionError("Seifert index: gcd(a_i, b_i) must be 1");
        long long x, y;
        ext_gcd(a, bi, x, y);  // a x + b y = 1
        SeifertPair p{a, bi, static_cast<int>(y), static_cast<int>(-x)};
        if (a % 2 != 0 && bi % 2 != 0) {
            if (mod(p.r, 2) != 0) {
                p.r += a;
                p.s += bi;
            }
        } else if (mod(p.s, 2) == 0) {
            p.r += a;
            p.s += bi;
        }
        if (static_cast<long long>(a) * p.s - static_cast<long long>(bi) * p.r != -1 || mod(p.s, 2) != 1)
            throw Error("Seifert index: failed to normalize (r, s)");
        idx.pairs.push_back(p);
    }
    return idx;
}

int SeifertIndex::m_odd() const {
    return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [](const SeifertPair& p) { return p.a % 2; }));
}

std::string SeifertIndex::to_string() const {
    std::string out = std::to_string(b) + ";" + std::to_string(g) + ";";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(pairs[i].a) + "," + std::to_string(pairs[i].b) + ")";
    }
    return out;
}

SeifertIndex parse_seifert_index(const std::string& text) {
    static const std::regex whole(R"(\s*(-?\d+)\s*;\s*(\d+)\s*;\s*(.*?)\s*)");
    static const std::regex pair(R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*(,|$))");
    std::smatch m;
    if (!std::regex_match(text, m, whole)) throw ParseError("Seifert index must look like b;g;(a1,b1),...: " + text);
    try {
        const int b = std::stoi(m[1].str()), g = std::stoi(m[2].str());
        std::vector<std::pair<int, int>> pairs;
        std::string rest = m[3].str();
        auto it = rest.cbegin();
        std::smatch pm;
        while (it != rest.cend()) {
            if (!std::regex_search(it, rest.cend(), pm, pair, std::regex_constants::match_continuous))
                throw ParseError("malformed pair list in Seifert index: " + rest);
            pairs.emplace_back(std::stoi(pm[1].str()), std::stoi(pm[2].str()));
            it = pm[0].second;
        }
        return SeifertIndex::make(b, g, pairs);
    } catch (const std::out_of_range&) {
        throw ParseError("Seifert index entry out of range: " + text);
    }
}

SeifertIndex brieskorn_index(int a1, int a2, int a3) {
    const int as[3] = {a1, a2, a3};
    for (int i = 0; i < 3; ++i) {
        if (as[i] < 2) throw PreconditionError("brieskorn_index: exponents must be at least 2");
        for (int j = i + 1; j < 3; ++j)
            if (std::gcd(as[i], as[j]) != 1) throw PreconditionError("brieskorn_index: exponents must be pairwise coprime");
    }
    const Integer A = Integer(a1) * a2 * a3;
    Integer sum = 0;
    std::vector<std::pair<int, int>> pairs;
    for (int a : as) {
        Integer rest = A / a;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), rest.get_mpz_t(), Integer(a).get_mpz_t());
        int bi = static_cast<int>(inv.get_si());
        pairs.emplace_back(a, bi);
        sum += rest * bi;
    }
    Integer num = sum - 1;
    if (num % A != 0) throw Error("brieskorn_index: CRT reconstruction failed");
    Integer b = num / A;
    // A(-b + sum b_i/a_i) = 1 exactly.
    Rational e = -Rational(b);
    for (const auto& [a, bi] : pairs) e += Rational(bi, a);
    e.canonicalize();
    if (Rational(A) * e != 1) throw Error("brieskorn_index: Euler number check failed");
    return SeifertIndex::make(static_cast<int>(b.get_si()), 0, pairs);
}

void check_tuple(const SeifertIndex& index, const SeifertTuple& k) {
    if (k.size() != index.pairs.size())
        throw PreconditionError("Seifert tuple has " + std::to_string(k.size()) + " entries, expected " +
                                std::to_string(index.pairs.size()));
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& p = index.pairs[i];
        if (k[i] < 0 || k[i] > p.a)
            throw PreconditionError("Seifert tuple entry k_" + std::to_string(i + 1) + " outside [0, a_i]");
        if (mod(k[i] - p.b, 2) != 0)
            throw PreconditionError("Seifert tuple entry k_" + std::to_string(i + 1) + " has the wrong parity");
    }
}

std::vector<SeifertTuple> admissible_tuples(const SeifertIndex& index) {
    std::vector<SeifertTuple> out{{}};
    for (const auto& p : index.pairs) {
        std::vector<SeifertTuple> next;
        for (const auto& t : out)
            for (int k = 1; k < p.a; ++k)
                if (mod(k - p.b, 2) == 0) {
                    next.push_back(t);
                    next.back().push_back(k);
                }
        out = std::move(next);
    }
    return out;
}

namespace {

Real pow2(int e) {
    Real r = 1;
    if (e >= 0)
        for (int i = 0; i < e; ++i) r *= 2;
    else
        for (int i = 0; i < -e; ++i) r /= 2;
    return r;
}

// theta_i = (a - r k) pi / (2a)
Real theta(const SeifertPair& p, int k) { return Real(p.a - p.r * k) * pi() / (2 * p.a); }

}  // namespace

Real seifert_inverse_torsion(const SeifertIndex& index, const SeifertTuple& k) {
    check_tuple(index, k);
    Real v = pow2(4 - index.m() - index.g);
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& p = index.pairs[i];
        Real c = cos(Real(p.r) * k[i] * pi() / p.a);
        v *= mod(p.s, 2) ? Real(1 + c) : Real(1 - c);
    }
    return v;
}

Real seifert_product_form(const SeifertIndex& index, const SeifertTuple& k) {
    check_tuple(index, k);
    Real v = pow2(2 * index.m_odd() + index.g - 4);
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& p = index.pairs[i];
        Real sn = sin(theta(p, k[i]));
        if (p.a % 2) sn *= 2;
        v /= sn * sn;
    }
    return v;
}

std::vector<SeifertValue> seifert_torsion_values(const SeifertIndex& index, const std::vector<SeifertTuple>& tuples,
                                                 int precision) {
    PrecisionScope scope(precision + 32);
    const Real tol = pow2(-precision / 2);
    std::vector<SeifertValue> out;
    for (const auto& k : tuples) {
        SeifertValue v;
        v.k = k;
        Real inv = seifert_inverse_torsion(index, k);
        v.acyclic = abs(inv) > tol;
        if (v.acyclic) {
            v.tau = 1 / inv;
            v.tau_product = seifert_product_form(index, k);
        } else {
            v.tau = 0;
            v.tau_product = 0;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SeifertValue> distinct_values(const std::vector<SeifertValue>& values, int precision) {
    PrecisionScope scope(precision + 32);
    const Real tol = pow2(-precision / 2);
    std::vector<SeifertValue> acyclic;
    for (const auto& v : values)
        if (v.acyclic) acyclic.push_back(v);
    std::stable_sort(acyclic.begin(), acyclic.end(),
                     [](const SeifertValue& x, const SeifertValue& y) { return x.tau < y.tau; });
    std::vector<SeifertValue> out;
    for (auto& v : acyclic) {
        if (!out.empty()) {
            Real scale = std::max(Real(1), Real(abs(v.tau)));
            if (abs(out.back().tau - v.tau) <= tol * scale) {
                if (v.k < out.back().k) out.back() = v;
                continue;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

SeifertCertificate seifert_integrality_certificate(const SeifertIndex& index, const SeifertTuple& k, int precision) {
    check_tuple(index, k);
    const int e = 2 * index.m_odd() + index.g - 4;
    if (e < 0)
        throw PreconditionError("Seifert certificate needs 2 m_o + g >= 4, got " + std::to_string(e + 4));
    PrecisionScope scope(precision + 32);
    SeifertCertificate c;
    c.k = k;
    const Real inv = seifert_inverse_torsion(index, k);
    if (abs(inv) <= pow2(-precision / 2)) throw PreconditionError("Seifert certificate: tuple is not acyclic");
    c.tau = 1 / inv;
    UniPoly acc = UniPoly::monomial(1) - UniPoly::constant(1);
    bool first = true;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const auto& p = index.pairs[i];
        const int j = p.a - p.r * k[i];
        const bool doubled = p.a % 2 != 0;
        // For odd a the parity normalization makes r k even.
        UniPoly f = squared_roots(sin_inverse_certificate(p.a, doubled ? p.r * k[i] / 2 : j, doubled));
        c.steps.push_back(std::string(doubled ? "(2 sin" : "(sin") + "(" + std::to_string(j) + " pi/" +
                          std::to_string(2 * p.a) + "))^-2: " + f.to_string());
        acc = first ? f : alg_combine(acc, f, CombineMode::Product);
        first = false;
    }
    if (e > 0) {
        Integer two_e = 1;
        mpz_mul_2exp(two_e.get_mpz_t(), two_e.get_mpz_t(), e);
        acc = scaled_roots(acc, two_e);
        c.steps.push_back("scale by 2^" + std::to_string(e));
    }
    acc = positive(acc);
    c.steps.push_back("product: " + acc.to_string());
    if (!acc.is_monic()) throw VerificationError("Seifert certificate is not monic: " + acc.to_string());
    c.poly = acc;
    std::vector<Complex> cs;
    for (const auto& x : acc.coeffs()) cs.emplace_back(to_real(x));
    c.residual = abs(evaluate(cs, Complex(c.tau))) / evaluation_scale(cs, Complex(c.tau));
    if (c.residual >= pow2(-precision / 2))
        throw VerificationError("Seifert certificate residual too large: " + c.residual.str(6));
    return c;
}

SeifertSigma seifert_sigma(const SeifertIndex& index, const std::vector<SeifertTuple>& tuples, int precision) {
    SeifertSigma out;
    out.index = index;
    const std::vector<SeifertTuple> ts = tuples.empty() ? admissible_tuples(index) : tuples;
    out.values = distinct_values(seifert_torsion_values(index, ts, precision), precision);
    PrecisionScope scope(precision + 32);
    std::vector<Complex> rs;
    for (const auto& v : out.values) rs.emplace_back(v.tau);
    std::vector<Real> re;
    for (const auto& c : expand_from_roots(rs)) re.push_back(c.re);
    RoundedVector r = near_integer_vector(re, Real("1e-15"));
    out.sigma = UniPoly(r.values, "t");
    out.max_deviation = r.max_deviation;
    return out;
}

SeifertSigma brieskorn_sigma(int a1, int a2, int a3, const std::vector<SeifertTuple>& tuples, int precision) {
    return seifert_sigma(brieskorn_index(a1, a2, a3), tuples, precision);
}

}  // namespace rtorsion
