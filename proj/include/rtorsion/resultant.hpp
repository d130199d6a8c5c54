#pragma once

#include <string>
#include <vector>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/polymatrix.hpp"
#include "rtorsion/unipoly.hpp"

namespace rtorsion {

/// Sylvester matrix of f and g in `var`. Both are first multiplied by the
/// power of var that clears negative exponents. The first deg g rows carry
/// the coefficients of f, the remaining deg f rows those of g.
PolyMatrix sylvester_matrix(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// res_var(f, g) = det of the Sylvester matrix.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Resultant of two integer univariate polynomials.
Integer resultant(const UniPoly& f, const UniPoly& g);

struct DivisibilityCertificate {
    MultiPoly f;
    MultiPoly g;
    std::string var;
    MultiPoly zeta;
    int m = 0;
    MultiPoly g_at_zeta;
    /// quotients[k] * g(zeta)^(m-k) == (1/k!) f^(k)(zeta)
    std::vector<MultiPoly> quotients;
    MultiPoly resultant;
    /// conclusion * g(zeta)^m == resultant
    MultiPoly conclusion;

    /// Re-multiply every stored quotient and compare with its claim.
    bool verify() const;
};

/// Checks that g(zeta)^(m-k) divides (1/k!) f^(k)(zeta) for 0 <= k < m and
/// then that g(zeta)^m divides res_var(f, g). Throws VerificationError naming
/// the first failing k; a failing conclusion is an internal error.
DivisibilityCertificate check_derivative_divisibility(const MultiPoly& f, const MultiPoly& g,
                                                      const std::string& var, const MultiPoly& zeta,
                                                      int m);

/// For monic f with f(1) = ±1, the monic g whose roots are 1/(a - 1) over
/// the roots a of f.
UniPoly shift_invert(const UniPoly& f);

enum class CombineMode { Sum, Product };

/// Polynomial vanishing on all sums (products) of a root of p and a root of q.
UniPoly alg_combine(const UniPoly& p, const UniPoly& q, CombineMode mode);

}  // namespace rtorsion
