#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/rep.hpp"
#include "rtorsion/resultant.hpp"
#include "rtorsion/unipoly.hpp"

namespace rtorsion {

/// A-polynomial in the variables L, M.
struct APoly {
    MultiPoly poly;
    std::string provenance;            // "raw-eliminant" or "recursion"
    std::vector<std::string> removed;  // factors dropped during cleanup
};

/// res_t(L - Lambda(M, t), phi(M, t)) before any cleanup. Lambda is reduced
/// modulo phi first, which keeps the Sylvester matrix small.
MultiPoly raw_eliminant(const TwistKnotFamily& family);

/// Content, monomial units, L - 1 factors and repeated factors removed; sign
/// fixed so that the graded-lex leading coefficient (L before M) is positive.
APoly clean_a_polynomial(const MultiPoly& raw, std::string provenance);

/// A-polynomial of J(2, 2m) by elimination. m = 0 gives the unknot, A = 1.
APoly a_polynomial(int m);

/// The polynomials x(L, M) and y(L, M) of the three-term recursion.
MultiPoly recursion_x();
MultiPoly recursion_y();

/// A-polynomial of J(2, 2m) from the recursion
///   A_m = x A_{m-1} - y A_{m-2}   (m >= 3, from A_1, A_2),
///   A_m = x A_{m+1} - y A_{m+2}   (m <= -2, from A_{-1} and A_0 = 1),
/// with the base cases taken from elimination in their recursion normal form.
APoly hoste_shanahan(int m);

/// Base-case normal form used by the recursion (sign and M -> 1/M variant
/// fixed so that the recursion closes). Exposed for tests.
MultiPoly recursion_base(int m);

/// True when a == ±(monomial) * b.
bool equal_up_to_unit(const MultiPoly& a, const MultiPoly& b);

struct NewtonPolygon {
    /// Hull vertices (deg_L, deg_M), counter-clockwise starting from the
    /// lexicographically smallest.
    std::vector<std::pair<int, int>> vertices;
    /// Slope dM/dL of each side; nullopt for a vertical side.
    std::vector<std::optional<Rational>> slopes;
    bool degenerate = false;  // support of dimension < 2
};

NewtonPolygon newton_polygon(const MultiPoly& a, const std::string& lvar = "L",
                             const std::string& mvar = "M");

struct UnitExtremesReport {
    int leading_power = 0;
    int leading_sign = 0;
    int trailing_power = 0;
    int trailing_sign = 0;
};

/// Checks that the highest and lowest L-coefficients are ±M^k. Throws
/// VerificationError naming the offending coefficient otherwise.
UnitExtremesReport verify_unit_extremes(const MultiPoly& a);

struct ResExtremesReport {
    int p = 0;
    int q = 0;
    MultiPoly resultant;  // in M, Laurent
    Integer highest;
    Integer lowest;
};

/// res_L(A, M^p L^q - 1) with both extreme M-coefficients ±1.
ResExtremesReport verify_res_extremes(const MultiPoly& a, int p, int q);

struct DiffDivisibilityReport {
    int m = 0;
    int d = 0;
    MultiPoly a;
    /// quotients[n] * (M^2 - 1)^(d - n) == (1/n!) d^n A / dL^n at L = -1
    std::vector<MultiPoly> quotients;
};

DiffDivisibilityReport verify_diff_divisibility(int m);
DiffDivisibilityReport verify_diff_divisibility(const MultiPoly& a, int m);

/// (M^p (-1)^q - 1)^d(m) divides res_L(A, M^p L^q - 1), certified through
/// check_derivative_divisibility at zeta = -1.
DivisibilityCertificate slope_divisibility(const MultiPoly& a, int m, int p, int q);

struct SlopePolyReport {
    DivisibilityCertificate divisibility;
    UniPoly f;        // in s, monic
    Integer f_at_1;   // ±1 when the theorem applies
    bool monic = false;
};

/// f(s) = (s^p (-1)^q - 1)^-d(m) res_L(A(L, s), s^p L^q - 1), made a polynomial
/// by clearing the unit and the sign. Throws VerificationError when f is not
/// monic or |f(1)| != 1 for odd q; for even q the value f(1) is reported.
SlopePolyReport monic_slope_poly(int m, int q, int p = 1);

}  // namespace rtorsion
