#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtorsion {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first. Exponent vectors are compared
/// by total degree, ties broken lexicographically.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate Laurent polynomial with integer coefficients.
///
/// The variable context is an ordered list of names; exponent vectors are
/// indexed by that list. Operands with different contexts are merged by
/// name. Negative exponents mark Laurent terms. Terms with coefficient zero
/// are never stored, so the zero polynomial has an empty term map.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Integer, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(long c);  // NOLINT(google-explicit-constructor)
    MultiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(std::vector<std::string> vars, TermMap terms);

    static MultiPoly variable(const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, Exponents exps,
                              const Integer& coeff = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant value; throws unless is_constant().
    Integer constant_value() const;

    /// Index of `var` in the context, or -1.
    int var_index(std::string_view var) const;
    /// True when `var` occurs with a nonzero exponent in some term.
    bool depends_on(std::string_view var) const;
    /// Names of the variables that actually occur.
    std::vector<std::string> used_vars() const;

    int degree(std::string_view var) const;
    int min_degree(std::string_view var) const;
    int total_degree() const;

    const Exponents& leading_exponents() const;
    const Integer& leading_coefficient() const;

    /// Re-embed into a context that contains every variable of this one.
    MultiPoly with_vars(const std::vector<std::string>& vars) const;
    /// Drop variables that do not occur.
    MultiPoly compact() const;

    /// Coefficients with respect to `var`: exponent -> polynomial free of var.
    std::map<int, MultiPoly> coefficients_in(std::string_view var) const;
    static MultiPoly from_coefficients(const std::string& var,
                                       const std::map<int, MultiPoly>& coeffs);
    /// Coefficient of var^e (free of var).
    MultiPoly coefficient(std::string_view var, int e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Integer& c) const;

    /// Canonical text form, e.g. `L^2*M^4 - L*M^8 + M^4`.
    std::string to_string() const;
    static MultiPoly parse(std::string_view text);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Merge contexts: a's order first, then b's new names.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Integer power; negative powers only for monomials.
MultiPoly pow(const MultiPoly& p, int n);

/// Simultaneous substitution var -> polynomial. A binding that lands on a
/// negative exponent must be a monomial.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& bindings);
MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& value);

/// (1/k!) d^k p / d var^k, exact over the integers.
MultiPoly scaled_derivative(const MultiPoly& p, std::string_view var, int k);

/// Exact quotient f/g in the Laurent ring; throws DivisionError otherwise.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);
std::optional<MultiPoly> try_divide(const MultiPoly& f, const MultiPoly& g);

/// A Laurent polynomial written as unit^-1 * poly, where unit is a monomial
/// and poly has minimal exponent 0 in every normalized variable.
struct LaurentNormal {
    MultiPoly poly;
    MultiPoly unit;  // poly == unit * original
};

/// Multiply by the minimal clearing monomial in every variable.
LaurentNormal normalize_laurent(const MultiPoly& p);
/// Same, only in `var`.
LaurentNormal normalize_laurent(const MultiPoly& p, std::string_view var);

/// Multiply by the monomial that makes the minimal exponents zero and make
/// the integer content 1 with positive leading coefficient.
MultiPoly strip_units(const MultiPoly& p);

struct ContentSplit {
    MultiPoly content;
    MultiPoly primitive;
};

/// f == content * primitive; content free of var, primitive has coprime
/// coefficients as a polynomial in var. Sign is put into content so that the
/// primitive part has positive leading coefficient.
ContentSplit content_primitive(const MultiPoly& f, std::string_view var);

/// Integer content (gcd of coefficients, nonnegative).
Integer integer_content(const MultiPoly& f);

/// Greatest common divisor up to units, via recursive primitive remainder
/// sequences. Result has positive leading coefficient.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

struct PseudoDivision {
    MultiPoly quotient;
    MultiPoly remainder;
    MultiPoly multiplier;  // lc(g)^k with multiplier * f == quotient * g + remainder
};

/// Pseudo-division in `var`, g polynomial in var. When lc(g) is a unit
/// (±monomial) the division is exact in the Laurent ring and multiplier is 1.
PseudoDivision pseudo_divide(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// Remainder of f modulo g in var when lc_var(g) is ±1 times a monomial.
MultiPoly reduce_modulo(const MultiPoly& f, const MultiPoly& g, std::string_view var);

/// Partial evaluation at an integer.
MultiPoly evaluate(const MultiPoly& p, std::string_view var, const Integer& value);
/// Full evaluation; all variables must be bound.
Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& point);

/// Exact specialization var -> i (imaginary unit): returns real and imaginary parts.
std::pair<MultiPoly, MultiPoly> specialize_at_i(const MultiPoly& p, std::string_view var);

/// Replace var by var^-1.
MultiPoly invert_variable(const MultiPoly& p, std::string_view var);

/// Rename variables.
MultiPoly rename(const MultiPoly& p, const std::map<std::string, std::string>& names);

}  // namespace rtorsion
