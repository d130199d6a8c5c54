#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rtorsion/multipoly.hpp"

namespace rtorsion {

/// Dense univariate polynomial over the integers, constant term first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Integer> coeffs, std::string var = "x");
    static UniPoly constant(const Integer& c, std::string var = "x");
    /// c * x^n
    static UniPoly monomial(int n, const Integer& c = 1, std::string var = "x");
    /// Conversion from a MultiPoly in at most one variable (no negative exponents).
    static UniPoly from_multi(const MultiPoly& p, const std::string& var);
    static UniPoly parse(std::string_view text, const std::string& var = "x");

    const std::string& var() const { return var_; }
    UniPoly with_var(std::string var) const { return UniPoly(coeffs_, std::move(var)); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(int i) const;
    const Integer& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    /// Leading coefficient is +1 or -1.
    bool is_monic_up_to_sign() const;

    Integer operator()(const Integer& x) const;
    Rational operator()(const Rational& x) const;

    MultiPoly to_multi() const;
    std::string to_string() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly scaled(const Integer& c) const;
    UniPoly derivative() const;
    /// Shift by x^k (k may be negative if the low coefficients vanish).
    UniPoly shifted(int k) const;
    /// p(-x)
    UniPoly negated_argument() const;
    /// p(x + c)
    UniPoly taylor_shift(const Integer& c) const;

private:
    void trim();
    std::string var_ = "x";
    std::vector<Integer> coeffs_;
};

UniPoly pow(const UniPoly& p, int n);

/// Nonnegative gcd of the coefficients.
Integer content(const UniPoly& f);
/// f / content(f), with positive leading coefficient.
UniPoly primitive_part(const UniPoly& f);

struct UniDivision {
    UniPoly quotient;
    UniPoly remainder;
};

/// Division over Z when lc(g) divides every step; throws DivisionError otherwise.
UniDivision divide(const UniPoly& f, const UniPoly& g);
/// Exact quotient; throws DivisionError with the remainder if nonzero.
UniPoly divide_exact(const UniPoly& f, const UniPoly& g);
/// lc(g)^(deg f - deg g + 1) * f mod g.
UniPoly pseudo_remainder(const UniPoly& f, const UniPoly& g);

/// Primitive gcd with positive leading coefficient (subresultant remainder
/// sequence). gcd(0, 0) is 0.
UniPoly gcd_univariate(const UniPoly& f, const UniPoly& g);

struct SquarefreeDecomposition {
    Rational unit;
    std::vector<std::pair<UniPoly, int>> factors;  // primitive, multiplicity ascending

    UniPoly expand() const;  // requires unit to be an integer
};

/// Yun's algorithm. f = unit * prod factor^mult with pairwise coprime
/// squarefree primitive factors.
SquarefreeDecomposition squarefree_decompose(const UniPoly& f);

/// Product of the distinct squarefree factors (primitive).
UniPoly squarefree_part(const UniPoly& f);

/// x^deg f * f(1/x). Requires f(0) != 0.
UniPoly reverse_poly(const UniPoly& f);

}  // namespace rtorsion
