#include "rtorsion/unipoly.hpp"

#include <algorithm>

#include "rtorsion/errors.hpp"

namespace rtorsion {

UniPoly::UniPoly(std::vector<Integer> coeffs, std::string var)
    : var_(std::move(var)), coeffs_(std::move(coeffs)) {
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Integer& c, std::string var) {
    return UniPoly(std::vector<Integer>{c}, std::move(var));
}

UniPoly UniPoly::monomial(int n, const Integer& c, std::string var) {
    if (n < 0) throw PreconditionError("UniPoly::monomial: negative degree");
    std::vector<Integer> v(static_cast<std::size_t>(n) + 1, 0);
    v[n] = c;
    return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::from_multi(const MultiPoly& p, const std::string& var) {
    for (const auto& v : p.used_vars())
        if (v != var) throw PreconditionError("UniPoly::from_multi: polynomial depends on " + v);
    if (p.is_zero()) return UniPoly({}, var);
    if (p.min_degree(var) < 0) throw PreconditionError("UniPoly::from_multi: negative exponent");
    std::vector<Integer> c(static_cast<std::size_t>(p.degree(var)) + 1, 0);
    int k = p.var_index(var);
    for (const auto& [e, v] : p.terms()) c[k < 0 ? 0 : e[k]] = v;
    return UniPoly(std::move(c), var);
}

UniPoly UniPoly::parse(std::string_view text, const std::string& var) {
    return from_multi(MultiPoly::parse(text), var);
}

Integer UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[i];
}

const Integer& UniPoly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool UniPoly::is_monic_up_to_sign() const { return !is_zero() && abs(leading()) == 1; }

Integer UniPoly::operator()(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    acc.canonicalize();
    return acc;
}

MultiPoly UniPoly::to_multi() const {
    MultiPoly::TermMap t;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) t.emplace(Exponents{static_cast<int>(i)}, coeffs_[i]);
    return MultiPoly({var_}, std::move(t));
}

std::string UniPoly::to_string() const { return to_multi().to_string(); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return UniPoly(std::move(c), a.var_);
}

UniPoly UniPoly::scaled(const Integer& c) const {
    UniPoly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    r.trim();
    return r;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly({}, var_);
    std::vector<Integer> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return *this;
    if (k >= 0) {
        std::vector<Integer> c(static_cast<std::size_t>(k), 0);
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return UniPoly(std::move(c), var_);
    }
    for (int i = 0; i < -k; ++i)
        if (coeff(i) != 0) throw DivisionError("UniPoly::shifted: low coefficients do not vanish");
    return UniPoly(std::vector<Integer>(coeffs_.begin() + std::min<int>(-k, coeffs_.size()), coeffs_.end()),
                   var_);
}

UniPoly UniPoly::negated_argument() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
}

UniPoly UniPoly::taylor_shift(const Integer& c) const {
    std::vector<Integer> a = coeffs_;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) a[j] += c * a[j + 1];
    return UniPoly(std::move(a), var_);
}

UniPoly pow(const UniPoly& p, int n) {
    if (n < 0) throw PreconditionError("negative power of a univariate polynomial");
    UniPoly r = UniPoly::constant(1, p.var());
    UniPoly b = p;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

Integer content(const UniPoly& f) {
    Integer g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

UniPoly primitive_part(const UniPoly& f) {
    if (f.is_zero()) return f;
    Integer c = content(f);
    if (f.leading() < 0) c = -c;
    std::vector<Integer> v = f.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return UniPoly(std::move(v), f.var());
}

UniDivision divide(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    std::vector<Integer> r = f.coeffs();
    const int dg = g.degree();
    const int df = f.degree();
    if (df < dg) return {UniPoly({}, f.var()), f};
    std::vector<Integer> q(static_cast<std::size_t>(df - dg) + 1, 0);
    const Integer& lc = g.leading();
    for (int i = df; i >= dg; --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lc.get_mpz_t()))
            throw DivisionError("integer division: leading coefficient " + lc.get_str() +
                                " does not divide " + r[i].get_str());
        Integer c;
        mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lc.get_mpz_t());
        q[i - dg] = c;
        for (int j = 0; j <= dg; ++j) mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(dg));
    return {UniPoly(std::move(q), f.var()), UniPoly(std::move(r), f.var())};
}

UniPoly divide_exact(const UniPoly& f, const UniPoly& g) {
    auto d = divide(f, g);
    if (!d.remainder.is_zero())
        throw DivisionError("non-exact division by " + g.to_string() + "; remainder " +
                            d.remainder.to_string());
    return d.quotient;
}

UniPoly pseudo_remainder(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw PreconditionError("pseudo-remainder by the zero polynomial");
    std::vector<Integer> r = f.coeffs();
    const int dg = g.degree();
    const Integer& lc = g.leading();
    int df = f.degree();
    if (df < dg) return f;
    for (int i = df; i >= dg; --i) {
        Integer c = r[i];
        for (int j = 0; j < i; ++j) r[j] *= lc;
        r[i] = 0;
        if (c != 0)
            for (int j = 0; j < dg; ++j) mpz_submul(r[i - dg + j].get_mpz_t(), c.get_mpz_t(), g.coeffs()[j].get_mpz_t());
    }
    r.resize(static_cast<std::size_t>(dg));
    return UniPoly(std::move(r), f.var());
}

UniPoly gcd_univariate(const UniPoly& f0, const UniPoly& g0) {
    if (f0.is_zero()) return primitive_part(g0);
    if (g0.is_zero()) return primitive_part(f0);
    UniPoly a = f0, b = g0;
    if (a.degree() < b.degree()) std::swap(a, b);
    a = primitive_part(a);
    b = primitive_part(b);
    Integer gg = 1, h = 1;
    while (true) {
        if (b.degree() == 0) return UniPoly::constant(1, f0.var());
        int delta = a.degree() - b.degree();
        UniPoly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        a = b;
        Integer hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        Integer denom = gg * hd;
        std::vector<Integer> v = r.coeffs();
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
        b = UniPoly(std::move(v), f0.var());
        gg = a.leading();
        // h <- gg^delta / h^(delta-1); unchanged when delta == 0
        if (delta > 0) {
            Integer num, den;
            mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
    }
    return primitive_part(b).with_var(f0.var());
}

UniPoly SquarefreeDecomposition::expand() const {
    if (unit.get_den() != 1) throw PreconditionError("SquarefreeDecomposition::expand: non-integral unit");
    UniPoly r = UniPoly::constant(unit.get_num());
    std::string var = "x";
    for (const auto& [f, m] : factors) {
        r = r * pow(f, m);
        var = f.var();
    }
    return r.with_var(var);
}

SquarefreeDecomposition squarefree_decompose(const UniPoly& f) {
    if (f.is_zero()) throw PreconditionError("squarefree_decompose: zero polynomial");
    SquarefreeDecomposition out;
    if (f.degree() == 0) {
        out.unit = Rational(f.leading());
        return out;
    }
    UniPoly p = primitive_part(f);
    UniPoly a = gcd_univariate(p, p.derivative());
    UniPoly b = divide_exact(p, a);
    UniPoly c = divide_exact(p.derivative(), a);
    UniPoly d = c - b.derivative();
    int i = 1;
    UniPoly product = UniPoly::constant(1, f.var());
    while (b.degree() > 0) {
        UniPoly ai = gcd_univariate(b, d);
        b = divide_exact(b, ai);
        if (ai.degree() > 0) {
            out.factors.emplace_back(ai, i);
            product = product * pow(ai, i);
        }
        if (b.degree() <= 0) break;
        c = divide_exact(d, ai);
        d = c - b.derivative();
        ++i;
    }
    out.unit = Rational(f.leading(), product.leading());
    out.unit.canonicalize();
    return out;
}

UniPoly squarefree_part(const UniPoly& f) {
    auto dec = squarefree_decompose(f);
    UniPoly r = UniPoly::constant(1, f.var());
    for (const auto& [g, m] : dec.factors) r = r * g;
    return r;
}

UniPoly reverse_poly(const UniPoly& f) {
    if (f.is_zero() || f.coeff(0) == 0) throw PreconditionError("reverse_poly: f(0) = 0");
    std::vector<Integer> c = f.coeffs();
    std::reverse(c.begin(), c.end());
    return UniPoly(std::move(c), f.var());
}

}  // namespace rtorsion
