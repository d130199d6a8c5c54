#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rtorsion/numeric.hpp"
#include "rtorsion/unipoly.hpp"

namespace rtorsion {

/// T_n(cos x) = cos(n x).
UniPoly chebyshev_T(int n);

/// V_0 = 1, V_1 = x - 1, V_n = x V_{n-1} - V_{n-2}.
UniPoly chebyshev_V(int n);

/// Monic polynomial with a reciprocal sine as a root, from the reversal of
/// T_a or of V_((a-1)/2)(±x):
///   a even (doubled = false): root 1/sin(k pi/(2a)), k odd;
///   a odd (doubled = true): root 1/(2 sin((a - 2k) pi/(2a))), 2 cos(k pi/a) != ±2.
UniPoly sin_inverse_certificate(int a, int k, bool doubled);

/// Polynomial whose roots are the squares of the roots of f (one Graeffe
/// step), sign-normalized.
UniPoly squared_roots(const UniPoly& f);

/// Polynomial whose roots are c times the roots of f.
UniPoly scaled_roots(const UniPoly& f, const Integer& c);

struct SeifertPair {
    int a = 0;
    int b = 0;
    int r = 0;  // a s - b r = -1, s odd
    int s = 0;
};

struct SeifertIndex {
    int b = 0;
    int g = 0;
    std::vector<SeifertPair> pairs;

    /// Solves a s - b r = -1 and applies the parity shifts
    /// (r, s) -> (r + a, s + b) that make s odd (and r even for odd a, b).
    static SeifertIndex make(int b, int g, const std::vector<std::pair<int, int>>& pairs);
    int m() const { return static_cast<int>(pairs.size()); }
    int m_odd() const;
    std::string to_string() const;
};

/// Parses "b;g;(a1,b1),(a2,b2),...".
SeifertIndex parse_seifert_index(const std::string& text);

/// Seifert index of the Brieskorn sphere Sigma(a1, a2, a3): b_i is the
/// inverse of A/a_i mod a_i (A = a1 a2 a3) and b is fixed by
/// A(-b + sum b_i/a_i) = 1.
SeifertIndex brieskorn_index(int a1, int a2, int a3);

using SeifertTuple = std::vector<int>;

/// Throws PreconditionError unless 0 <= k_i <= a_i and k_i = b_i mod 2.
void check_tuple(const SeifertIndex& index, const SeifertTuple& k);

/// All tuples with 0 < k_i < a_i and k_i = b_i mod 2, in lex order.
std::vector<SeifertTuple> admissible_tuples(const SeifertIndex& index);

struct SeifertValue {
    SeifertTuple k;
    Real tau;            // from the cosine formula; 0 when not acyclic
    Real tau_product;    // from the sine product form
    bool acyclic = true;
};

/// tau^-1 = 2^(4-m-g) prod (1 - (-1)^s_i cos(r_i k_i pi / a_i)).
Real seifert_inverse_torsion(const SeifertIndex& index, const SeifertTuple& k);

/// tau = 2^(2 m_o + g - 4) prod_odd (2 sin t_i)^-2 prod_even (sin t_i)^-2,
/// t_i = (a_i - r_i k_i) pi / (2 a_i).
Real seifert_product_form(const SeifertIndex& index, const SeifertTuple& k);

std::vector<SeifertValue> seifert_torsion_values(const SeifertIndex& index, const std::vector<SeifertTuple>& tuples,
                                                 int precision);

/// Values with equal tau (to 2^(-precision/2) relative) collapsed; acyclic only.
std::vector<SeifertValue> distinct_values(const std::vector<SeifertValue>& values, int precision);

struct SeifertCertificate {
    SeifertTuple k;
    UniPoly poly;                    // monic, tau is a root
    std::vector<std::string> steps;  // combination tree, one line per step
    Real tau;
    Real residual;                   // |poly(tau)| / scale
};

/// Requires 2 m_o + g >= 4 and an acyclic tuple.
SeifertCertificate seifert_integrality_certificate(const SeifertIndex& index, const SeifertTuple& k, int precision);

struct SeifertSigma {
    SeifertIndex index;
    std::vector<SeifertValue> values;  // distinct acyclic values used
    UniPoly sigma;                     // in t
    Real max_deviation;
};

/// prod (t - tau) over the distinct acyclic values of `tuples` (all admissible
/// tuples when empty), rounded to integers. Throws VerificationError if a
/// coefficient is 1e-15 or more away from an integer.
SeifertSigma seifert_sigma(const SeifertIndex& index, const std::vector<SeifertTuple>& tuples, int precision);

/// seifert_sigma for the Brieskorn sphere Sigma(a1, a2, a3).
SeifertSigma brieskorn_sigma(int a1, int a2, int a3, const std::vector<SeifertTuple>& tuples, int precision);

}  // namespace rtorsion
