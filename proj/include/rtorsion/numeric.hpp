#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/unipoly.hpp"

namespace rtorsion {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR precision (in bits) for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(int bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned previous_;
};

int digits10_for_bits(int bits);

Real to_real(const Integer& z);
Real to_real(const Rational& q);
/// Nearest integer.
Integer round_to_integer(const Real& x);
Real pi();

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex operator-() const { return {-re, -im}; }
    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }

    Complex conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
    Real abs() const;
    Real arg() const;
    static Complex polar(const Real& r, const Real& theta);

    /// Short decimal form "a+bi" with `digits` significant digits.
    std::string to_string(int digits = 6) const;
};

Complex pow(const Complex& z, int n);
Real abs(const Complex& z);

/// Value of an integer polynomial at a complex point.
Complex evaluate(const UniPoly& f, const Complex& z);
/// Value of a complex-coefficient polynomial (constant term first).
Complex evaluate(const std::vector<Complex>& coeffs, const Complex& z);
/// Sum |a_k| |z|^k, the scale for residuals.
Real evaluation_scale(const std::vector<Complex>& coeffs, const Complex& z);

/// Value of a Laurent polynomial at a complex point; every used variable
/// must be bound. When `scale` is given it receives sum |c| |monomial|.
Complex evaluate(const MultiPoly& p, const std::map<std::string, Complex>& point, Real* scale = nullptr);

struct ComplexApprox {
    Complex value;
    int precision = 0;
    Real residual;  // |f(value)|
    int multiplicity = 1;
};

/// All roots of a squarefree complex polynomial by Aberth-Ehrlich iteration,
/// polished to residual < 2^(-precision/2) * scale. Deterministic.
std::vector<ComplexApprox> roots_numeric(const std::vector<Complex>& coeffs, int precision);

/// All roots of f, with multiplicities from the squarefree decomposition.
std::vector<ComplexApprox> roots(const UniPoly& f, int precision);

/// Complex coefficients of phi(s0, t) as a polynomial in t.
std::vector<Complex> specialize(const MultiPoly& phi, const std::string& s_var, const Complex& s0,
                                const std::string& t_var);

/// Roots t of phi(s0, t).
std::vector<ComplexApprox> back_substitute(const MultiPoly& phi, const Complex& s0, int precision,
                                           const std::string& s_var = "s",
                                           const std::string& t_var = "t");

/// Coefficients (constant term first) of prod (x - r).
std::vector<Complex> expand_from_roots(const std::vector<Complex>& rs);

struct RoundedVector {
    std::vector<Integer> values;
    Real max_deviation;
};

/// Round each value; throws VerificationError if some |v - round(v)| >= tol.
RoundedVector near_integer_vector(const std::vector<Real>& values, const Real& tol);

}  // namespace rtorsion
