#include "rtorsion/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rtorsion/errors.hpp"

namespace rtorsion {

namespace {

int exp_sum(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Re-index the terms of p into the context `vars` (a superset of p's).
MultiPoly::TermMap reindex(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (p.vars() == vars) return p.terms();
    std::vector<std::size_t> slot(p.vars().size());
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), p.vars()[i]);
        slot[i] = static_cast<std::size_t>(it - vars.begin());
    }
    MultiPoly::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[slot[i]] = e[i];
        out.emplace(std::move(ne), c);
    }
    return out;
}

void add_term(MultiPoly::TermMap& m, const Exponents& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

bool is_unit_monomial(const MultiPoly& p) {
    return p.is_monomial() && abs(p.leading_coefficient()) == 1;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    int da = exp_sum(a), db = exp_sum(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
}

MultiPoly::MultiPoly(long c) : MultiPoly(Integer(c)) {}

MultiPoly::MultiPoly(const Integer& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::vector<std::string> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != vars_.size())
            throw PreconditionError("MultiPoly: exponent vector does not match variable context");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

MultiPoly MultiPoly::variable(const std::string& name) { return monomial({name}, {1}); }

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, const Integer& coeff) {
    TermMap t;
    if (coeff != 0) t.emplace(std::move(exps), coeff);
    return MultiPoly(std::move(vars), std::move(t));
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Integer MultiPoly::constant_value() const {
    if (!is_constant()) throw PreconditionError("constant_value: polynomial is not constant: " + to_string());
    return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

int MultiPoly::var_index(std::string_view var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    return -1;
}

bool MultiPoly::depends_on(std::string_view var) const {
    int k = var_index(var);
    if (k < 0) return false;
    return std::any_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first[k] != 0; });
}

std::vector<std::string> MultiPoly::used_vars() const {
    std::vector<std::string> out;
    for (const auto& v : vars_)
        if (depends_on(v)) out.push_back(v);
    return out;
}

int MultiPoly::degree(std::string_view var) const {
    if (terms_.empty()) return 0;
    int k = var_index(var);
    if (k < 0) return 0;
    int d = terms_.begin()->first[k];
    for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
    return d;
}

int MultiPoly::min_degree(std::string_view var) const {
    if (terms_.empty()) return 0;
    int k = var_index(var);
    if (k < 0) return 0;
    int d = terms_.begin()->first[k];
    for (const auto& [e, c] : terms_) d = std::min(d, e[k]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    return exp_sum(terms_.begin()->first);
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return terms_.begin()->first;
}

const Integer& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    return terms_.begin()->second;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    for (const auto& v : vars_)
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            if (depends_on(v)) throw PreconditionError("with_vars: context drops variable " + v);
            return compact().with_vars(vars);
        }
    return MultiPoly(vars, reindex(*this, vars));
}

MultiPoly MultiPoly::compact() const {
    auto used = used_vars();
    if (used.size() == vars_.size()) return *this;
    std::vector<int> keep;
    for (const auto& v : used) keep.push_back(var_index(v));
    TermMap out;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(keep.size());
        for (int k : keep) ne.push_back(e[k]);
        out.emplace(std::move(ne), c);
    }
    return MultiPoly(used, std::move(out));
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
    std::map<int, MultiPoly> out;
    int k = var_index(var);
    if (k < 0) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    std::map<int, TermMap> parts;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        ne[k] = 0;
        parts[e[k]].emplace(std::move(ne), c);
    }
    for (auto& [d, t] : parts) out.emplace(d, MultiPoly(vars_, std::move(t)));
    return out;
}

MultiPoly MultiPoly::from_coefficients(const std::string& var, const std::map<int, MultiPoly>& coeffs) {
    MultiPoly x = variable(var);
    MultiPoly out;
    for (const auto& [d, c] : coeffs) out += c * pow(x, d);
    return out;
}

MultiPoly MultiPoly::coefficient(std::string_view var, int e) const {
    auto cs = coefficients_in(var);
    auto it = cs.find(e);
    return it == cs.end() ? MultiPoly() : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.is_zero()) return *this;
    if (vars_ != o.vars_) {
        auto vars = merge_vars(vars_, o.vars_);
        terms_ = reindex(*this, vars);
        vars_ = vars;
        for (const auto& [e, c] : reindex(o, vars_)) add_term(terms_, e, c);
        return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(merge_vars(a.vars_, b.vars_), {});
    auto vars = merge_vars(a.vars_, b.vars_);
    auto ta = reindex(a, vars);
    auto tb = reindex(b, vars);
    MultiPoly::TermMap out;
    Exponents e(vars.size());
    Integer prod;
    for (const auto& [ea, ca] : ta)
        for (const auto& [eb, cb] : tb) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            auto [it, inserted] = out.try_emplace(e, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) out.erase(it);
            }
        }
    return MultiPoly(std::move(vars), std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    return (a - b).is_zero();
}

MultiPoly MultiPoly::scaled(const Integer& c) const {
    if (c == 0) return MultiPoly(vars_, {});
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string f = vars_[i];
            if (e[i] != 1) f += "^" + std::to_string(e[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << '*';
            os << factors[i];
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    MultiPoly parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        MultiPoly result = expr();
        skip();
        if (pos_ < s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
        return result;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    std::string digits() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected digits");
        return std::string(s_.substr(b, pos_ - b));
    }
    int exponent() {
        skip();
        bool paren = false;
        if (pos_ < s_.size() && s_[pos_] == '(') {
            paren = true;
            ++pos_;
            skip();
        }
        int sign = 1;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        std::string d = digits();
        if (d.size() > 9) fail("exponent too large");
        skip();
        if (paren) {
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
        }
        return sign * std::stoi(d);
    }
    MultiPoly expr() {
        MultiPoly result;
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size() || s_[pos_] == ')') break;
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            MultiPoly t = term();
            result += sign > 0 ? t : -t;
        }
        if (first) fail("empty expression");
        return result;
    }
    MultiPoly factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
            ++pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                inner = pow(inner, exponent());
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return MultiPoly(Integer(digits()));
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name(s_.substr(b, pos_ - b));
            skip();
            int e = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                e = exponent();
            }
            return MultiPoly::monomial({name}, {e});
        }
        fail(std::string("unexpected character '") + ch + "'");
    }
    MultiPoly term() {
        MultiPoly t = factor();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                t *= factor();
            } else {
                break;
            }
        }
        return t;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

MultiPoly pow(const MultiPoly& p, int n) {
    if (n < 0) {
        if (!p.is_monomial()) throw PreconditionError("negative power of a non-monomial: " + p.to_string());
        if (abs(p.leading_coefficient()) != 1)
            throw PreconditionError("negative power of a monomial with non-unit coefficient");
        Exponents e = p.leading_exponents();
        for (auto& x : e) x *= n;
        Integer c = (n % 2 != 0) ? p.leading_coefficient() : Integer(1);
        return MultiPoly::monomial(p.vars(), e, c);
    }
    MultiPoly result(1);
    result = result.with_vars(p.vars());
    MultiPoly base = p;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings) {
    std::vector<int> bound(p.vars().size(), 0);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (bindings.count(p.vars()[i]))
            bound[i] = 1;
        else
            rest.push_back(p.vars()[i]);
    }
    for (const auto& [v, val] : bindings)
        if (p.var_index(v) < 0) throw PreconditionError("substitute: variable " + v + " not in context");

    std::vector<std::map<int, MultiPoly>> cache(p.vars().size());
    auto power_of = [&](std::size_t i, int e) -> const MultiPoly& {
        auto it = cache[i].find(e);
        if (it != cache[i].end()) return it->second;
        const MultiPoly& val = bindings.at(p.vars()[i]);
        if (e < 0 && !is_unit_monomial(val))
            throw PreconditionError("substitute: non-monomial " + val.to_string() +
                                    " into negative exponent of " + p.vars()[i]);
        return cache[i].emplace(e, pow(val, e)).first->second;
    };

    // Group terms by the exponents of the bound variables.
    std::map<Exponents, MultiPoly::TermMap> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents be, re;
        for (std::size_t i = 0; i < e.size(); ++i) (bound[i] ? be : re).push_back(e[i]);
        add_term(groups[be], re, c);
    }
    MultiPoly result(rest, {});
    for (auto& [be, rt] : groups) {
        MultiPoly factor(rest, std::move(rt));
        std::size_t k = 0;
        for (std::size_t i = 0; i < bound.size(); ++i) {
            if (!bound[i]) continue;
            int e = be[k++];
            if (e != 0) factor = factor * power_of(i, e);
        }
        result += factor;
    }
    return result;
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value) {
    return substitute(p, std::map<std::string, MultiPoly>{{var, value}});
}

MultiPoly scaled_derivative(const MultiPoly& p, std::string_view var, int k) {
    if (k < 0) throw PreconditionError("scaled_derivative: negative order");
    int idx = p.var_index(var);
    if (idx < 0) return k == 0 ? p : MultiPoly(p.vars(), {});
    if (p.min_degree(var) < 0)
        throw PreconditionError("scaled_derivative: " + std::string(var) + " has negative exponents");
    MultiPoly::TermMap out;
    Integer binom;
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] < k) continue;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e[idx]), static_cast<unsigned long>(k));
        Exponents ne = e;
        ne[idx] -= k;
        add_term(out, ne, c * binom);
    }
    return MultiPoly(p.vars(), std::move(out));
}

LaurentNormal normalize_laurent(const MultiPoly& p) {
    if (p.is_zero()) return {p, MultiPoly(1)};
    Exponents shift(p.vars().size(), 0);
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -p.min_degree(p.vars()[i]);
    MultiPoly unit = MultiPoly::monomial(p.vars(), shift);
    return {p * unit, unit};
}

LaurentNormal normalize_laurent(const MultiPoly& p, std::string_view var) {
    int idx = p.var_index(var);
    if (p.is_zero() || idx < 0) return {p, MultiPoly(1)};
    Exponents shift(p.vars().size(), 0);
    shift[idx] = -p.min_degree(var);
    MultiPoly unit = MultiPoly::monomial(p.vars(), shift);
    return {p * unit, unit};
}

Integer integer_content(const MultiPoly& f) {
    Integer g = 0;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

MultiPoly strip_units(const MultiPoly& p) {
    if (p.is_zero()) return p;
    MultiPoly q = normalize_laurent(p).poly;
    Integer c = integer_content(q);
    if (q.leading_coefficient() < 0) c = -c;
    MultiPoly::TermMap t;
    for (const auto& [e, v] : q.terms()) t.emplace(e, v / c);
    return MultiPoly(q.vars(), std::move(t)).compact();
}

namespace {

// Polynomial exact division for inputs with nonnegative exponents.
std::optional<MultiPoly> divide_polynomial(const MultiPoly& f, const MultiPoly& g, std::string* failure) {
    auto vars = merge_vars(f.vars(), g.vars());
    MultiPoly::TermMap r = reindex(f, vars);
    MultiPoly::TermMap gt = reindex(g, vars);
    const Exponents& lg = gt.begin()->first;
    const Integer& lc = gt.begin()->second;
    MultiPoly::TermMap q;
    Exponents qe(vars.size());
    Integer qc, prod;
    while (!r.empty()) {
        const Exponents& lr = r.begin()->first;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            qe[i] = lr[i] - lg[i];
            if (qe[i] < 0) {
                if (failure) *failure = MultiPoly::monomial(vars, lr, r.begin()->second).to_string();
                return std::nullopt;
            }
        }
        if (!mpz_divisible_p(r.begin()->second.get_mpz_t(), lc.get_mpz_t())) {
            if (failure) *failure = MultiPoly::monomial(vars, lr, r.begin()->second).to_string();
            return std::nullopt;
        }
        mpz_divexact(qc.get_mpz_t(), r.begin()->second.get_mpz_t(), lc.get_mpz_t());
        Exponents e(vars.size());
        for (const auto& [ge, gc] : gt) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ge[i] + qe[i];
            mpz_mul(prod.get_mpz_t(), gc.get_mpz_t(), qc.get_mpz_t());
            auto [it, inserted] = r.try_emplace(e, -prod);
            if (!inserted) {
                it->second -= prod;
                if (it->second == 0) r.erase(it);
            }
        }
        q.emplace(qe, qc);
    }
    return MultiPoly(vars, std::move(q));
}

}  // namespace

std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (f.is_zero()) return MultiPoly(merge_vars(f.vars(), g.vars()), {});
    auto fn = normalize_laurent(f);
    auto gn = normalize_laurent(g);
    auto q = divide_polynomial(fn.poly, gn.poly, nullptr);
    if (!q) return std::nullopt;
    // f = fn/uf, g = gn/ug  =>  f/g = q * ug / uf
    return (*q) * gn.unit * pow(fn.unit, -1);
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (f.is_zero()) return MultiPoly(merge_vars(f.vars(), g.vars()), {});
    auto fn = normalize_laurent(f);
    auto gn = normalize_laurent(g);
    std::string failure;
    auto q = divide_polynomial(fn.poly, gn.poly, &failure);
    if (!q)
        throw DivisionError("non-exact division by " + g.to_string() +
                            "; remainder leading term " + failure);
    return (*q) * gn.unit * pow(fn.unit, -1);
}

namespace {

// Monomial gcd (minimal exponents) of a set of nonzero polynomials, in the
// given context; returned as a unit-coefficient monomial.
Exponents min_exponents(const MultiPoly& p) {
    Exponents m(p.vars().size(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

MultiPoly positive_lc(const MultiPoly& p) {
    return (!p.is_zero() && p.leading_coefficient() < 0) ? -p : p;
}

// gcd of polynomials with no monomial factors.
MultiPoly gcd_stripped(const MultiPoly& a, const MultiPoly& b);

MultiPoly gcd_list(const std::vector<MultiPoly>& xs) {
    MultiPoly g;
    for (const auto& x : xs) {
        g = g.is_zero() ? positive_lc(x) : gcd(g, x);
        if (g.is_constant() && abs(g.constant_value()) == 1) break;
    }
    return g;
}

MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    return pseudo_divide(f, g, var).remainder;
}

MultiPoly gcd_stripped(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return positive_lc(b);
    if (b.is_zero()) return positive_lc(a);
    auto used = merge_vars(a.used_vars(), b.used_vars());
    if (used.empty()) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return MultiPoly(g);
    }
    // Main variable: the first one that occurs in both, else any.
    std::string x = used.front();
    for (const auto& v : used)
        if (a.depends_on(v) && b.depends_on(v)) {
            x = v;
            break;
        }
    if (!a.depends_on(x) || !b.depends_on(x)) {
        // One side is free of x: gcd divides every x-coefficient of the other.
        const MultiPoly& dep = a.depends_on(x) ? a : b;
        const MultiPoly& free = a.depends_on(x) ? b : a;
        std::vector<MultiPoly> parts{free};
        for (auto& [d, c] : dep.coefficients_in(x)) parts.push_back(c);
        return gcd_list(parts);
    }
    auto ca = content_primitive(a, x);
    auto cb = content_primitive(b, x);
    MultiPoly c = gcd(ca.content, cb.content);
    MultiPoly p = ca.primitive, q = cb.primitive;
    if (p.degree(x) < q.degree(x)) std::swap(p, q);
    while (!q.is_zero() && q.depends_on(x)) {
        MultiPoly r = pseudo_remainder(p, q, x);
        p = q;
        q = r.is_zero() ? r : content_primitive(r, x).primitive;
    }
    MultiPoly g = q.is_zero() ? content_primitive(p, x).primitive : MultiPoly(1);
    return positive_lc(c * g);
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return MultiPoly();
    if (a.is_zero()) return positive_lc(b);
    if (b.is_zero()) return positive_lc(a);
    auto vars = merge_vars(a.vars(), b.vars());
    MultiPoly aa = a.with_vars(vars), bb = b.with_vars(vars);
    Exponents ma = min_exponents(aa), mb = min_exponents(bb);
    Exponents mg(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) mg[i] = std::min(ma[i], mb[i]);
    for (auto& x : ma) x = -x;
    for (auto& x : mb) x = -x;
    MultiPoly sa = aa * MultiPoly::monomial(vars, ma);
    MultiPoly sb = bb * MultiPoly::monomial(vars, mb);
    MultiPoly g = gcd_stripped(sa, sb);
    return positive_lc(g * MultiPoly::monomial(vars, mg)).with_vars(vars);
}

ContentSplit content_primitive(const MultiPoly& f, std::string_view var) {
    if (f.is_zero()) throw PreconditionError("content_primitive: zero polynomial");
    std::vector<MultiPoly> coeffs;
    for (auto& [d, c] : f.coefficients_in(var)) coeffs.push_back(c);
    MultiPoly content = gcd_list(coeffs).with_vars(f.vars());
    MultiPoly primitive = divide_exact(f, content).with_vars(f.vars());
    if (primitive.leading_coefficient() < 0) {
        primitive = -primitive;
        content = -content;
    }
    return {content, primitive};
}

PseudoDivision pseudo_divide(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    if (g.is_zero()) throw PreconditionError("pseudo_divide: zero divisor");
    if (f.min_degree(var) < 0 || g.min_degree(var) < 0)
        throw PreconditionError("pseudo_divide: negative exponents in " + std::string(var));
    const std::string v(var);
    auto gc = g.coefficients_in(var);
    int dg = gc.empty() ? 0 : gc.rbegin()->first;
    MultiPoly lc = gc.rbegin()->second;
    bool unit = is_unit_monomial(lc);
    MultiPoly lc_inv = unit ? pow(lc, -1) : MultiPoly(1);
    MultiPoly x = MultiPoly::variable(v);

    auto rc = f.coefficients_in(var);
    std::map<int, MultiPoly> qc;
    MultiPoly multiplier(1);
    while (!rc.empty() && rc.rbegin()->first >= dg) {
        int dr = rc.rbegin()->first;
        MultiPoly lead = rc.rbegin()->second;
        int shift = dr - dg;
        MultiPoly factor;
        if (unit) {
            factor = lead * lc_inv;
        } else {
            // r <- lc*r - lead*x^shift*g
            for (auto& [d, c] : rc) c = c * lc;
            for (auto& [d, c] : qc) c = c * lc;
            multiplier = multiplier * lc;
            factor = lead;
        }
        qc[shift] += factor;
        for (const auto& [d, c] : gc) {
            MultiPoly& slot = rc[d + shift];
            slot -= factor * c;
        }
        for (auto it = rc.begin(); it != rc.end();) {
            if (it->second.is_zero())
                it = rc.erase(it);
            else
                ++it;
        }
    }
    MultiPoly q, r;
    for (const auto& [d, c] : qc) q += c * pow(x, d);
    for (const auto& [d, c] : rc) r += c * pow(x, d);
    auto vars = merge_vars(f.vars(), g.vars());
    return {q.with_vars(merge_vars(vars, q.vars())), r.with_vars(merge_vars(vars, r.vars())),
            multiplier};
}

MultiPoly reduce_modulo(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
    auto gc = g.coefficients_in(var);
    if (gc.empty() || !is_unit_monomial(gc.rbegin()->second))
        throw PreconditionError("reduce_modulo: leading coefficient of the modulus is not a unit");
    return pseudo_divide(f, g, var).remainder;
}

MultiPoly evaluate(const MultiPoly& p, std::string_view var, const Integer& value) {
    int idx = p.var_index(var);
    if (idx < 0) return p;
    MultiPoly::TermMap out;
    Integer pw;
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] < 0) throw PreconditionError("evaluate: negative exponent at an integer point");
        mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e[idx]));
        Exponents ne = e;
        ne[idx] = 0;
        add_term(out, ne, c * pw);
    }
    return MultiPoly(p.vars(), std::move(out));
}

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& point) {
    std::vector<Rational> vals;
    for (const auto& v : p.vars()) {
        auto it = point.find(v);
        if (it == point.end()) {
            if (p.depends_on(v)) throw PreconditionError("evaluate: unbound variable " + v);
            vals.emplace_back(0);
        } else {
            vals.push_back(it->second);
        }
    }
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (vals[i] == 0 && e[i] < 0) throw PreconditionError("evaluate: division by zero");
            Rational b = e[i] > 0 ? vals[i] : Rational(1) / vals[i];
            Rational acc = 1;
            for (int k = 0; k < std::abs(e[i]); ++k) acc *= b;
            t *= acc;
        }
        sum += t;
    }
    sum.canonicalize();
    return sum;
}

std::pair<MultiPoly, MultiPoly> specialize_at_i(const MultiPoly& p, std::string_view var) {
    int idx = p.var_index(var);
    if (idx < 0) return {p, MultiPoly(p.vars(), {})};
    MultiPoly::TermMap re, im;
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        ne[idx] = 0;
        switch (((e[idx] % 4) + 4) % 4) {
            case 0: add_term(re, ne, c); break;
            case 1: add_term(im, ne, c); break;
            case 2: add_term(re, ne, -c); break;
            default: add_term(im, ne, -c); break;
        }
    }
    return {MultiPoly(p.vars(), std::move(re)), MultiPoly(p.vars(), std::move(im))};
}

MultiPoly invert_variable(const MultiPoly& p, std::string_view var) {
    int idx = p.var_index(var);
    if (idx < 0) return p;
    MultiPoly::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        Exponents ne = e;
        ne[idx] = -ne[idx];
        out.emplace(std::move(ne), c);
    }
    return MultiPoly(p.vars(), std::move(out));
}

MultiPoly rename(const MultiPoly& p, const std::map<std::string, std::string>& names) {
    std::vector<std::string> vars = p.vars();
    for (auto& v : vars) {
        auto it = names.find(v);
        if (it != names.end()) v = it->second;
    }
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("rename: variable names collide");
    return MultiPoly(vars, p.terms());
}

}  // namespace rtorsion
