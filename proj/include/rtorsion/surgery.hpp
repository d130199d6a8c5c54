#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtorsion/multipoly.hpp"
#include "rtorsion/numeric.hpp"
#include "rtorsion/rep.hpp"
#include "rtorsion/unipoly.hpp"

namespace rtorsion {

/// Surgery slope p/q with a continuation (p', q'), p q' - q p' = 1.
/// Slopes with q < 0 are stored as (-p, -q).
struct SurgerySlope {
    int p = 0;
    int q = 1;
    int p_cont = 0;
    int q_cont = 1;

    /// Normalizes the sign, checks gcd(p, q) = 1 and picks the continuation
    /// with |p'| minimal (ties: p' >= 0).
    static SurgerySlope make(int p, int q);
    /// Same slope with an explicit continuation; throws unless p q' - q p' = 1.
    static SurgerySlope with_continuation(int p, int q, int p_cont, int q_cont);
    std::string to_string() const;
};

/// Parses "p/q" or "p".
SurgerySlope parse_slope(std::string_view text);

struct SurgerySystem {
    MultiPoly phi;     // Riley polynomial in s, t
    MultiPoly lambda;  // longitude eigenvalue reduced mod phi
    MultiPoly P;       // s^p Lambda^q - 1 reduced mod phi, unit cleared
    UniPoly raw;       // res_t(phi, P) as a polynomial in s, unit cleared
    UniPoly S;         // squarefree primitive part with s, s - 1 (and s + 1 if logged) removed
    int s_minus_1 = 0;  // multiplicity of s - 1 in raw
    std::vector<std::string> removed;
};

/// Whether the s + 1 factor is removed for this knot and slope (the case
/// where tr rho(mu) = -2 is excluded by hand: figure-eight, slope ±1/q).
bool removes_s_plus_1(const TwistKnotFamily& family, const SurgerySlope& slope);

SurgerySystem surgery_system(const TwistKnotFamily& family, const SurgerySlope& slope);

/// tau = numerator / denominator as polynomials in s^±1, t reduced mod phi:
/// numerator = -N_E U, denominator = D_E (U - 1)^2 with U = s^p' Lambda^q'.
struct TorsionExpression {
    MultiPoly numerator;
    MultiPoly denominator;
    MultiPoly U;
};

TorsionExpression torsion_expression(const TwistKnotFamily& family, const SurgerySlope& slope);

struct SolutionPoint {
    Complex s;
    Complex t;
    Complex L;
    Complex tau;
    bool acyclic = true;
    Real residual_phi;
    Real residual_eq;
    int precision = 0;
};

/// All solutions (s, t) of phi = 0, s^p Lambda^q = 1 up to (s, t) ~ (1/s, t),
/// including the parabolic points s = 1. Representative: |s| = 1 with
/// Im s >= 0, otherwise |s| < 1. Sorted by (|tau|, arg tau, |s|).
std::vector<SolutionPoint> solve_representations(const TwistKnotFamily& family, const SurgerySlope& slope,
                                                 int precision);

struct AnnihilatorFactor {
    UniPoly factor;
    int multiplicity = 0;
    std::vector<int> matched;  // indices into the solution list
};

struct AnnihilatorCertificate {
    std::string knot;
    SurgerySlope slope;
    int precision = 0;
    UniPoly raw;  // A(tau) = res_s(res_t(H, phi) mod S, S), primitive
    std::vector<std::pair<UniPoly, int>> squarefree;  // decomposition of raw
    std::vector<AnnihilatorFactor> factors;
    UniPoly annihilator;    // monic when verified
    UniPoly cofactor;       // raw / annihilator^multiplicity
    Integer leading;        // leading coefficient of the isolated factor
    std::vector<SolutionPoint> solutions;
    Real max_residual;      // max |annihilator(tau)| / scale over acyclic points
    Real min_cofactor;      // min |cofactor(tau)| / scale over acyclic points
    std::vector<std::string> removed;
    bool verified = false;
    std::string failure;
};

/// Exact annihilator of the torsion values. Never throws on a non-monic
/// result: verified = false and failure explains.
AnnihilatorCertificate torsion_annihilator(const TwistKnotFamily& family, const SurgerySlope& slope,
                                           int precision);

struct IntegerSurgeryReport {
    int p = 0;
    UniPoly h;          // in tau
    Integer leading;    // ±16
    UniPoly divisor;    // 4(2 tau - 3)^2 or 16
    UniPoly quotient;   // monic
    Integer h_at_1;
    Integer norm_at_i;  // |A(i^-p, i)|^2
};

/// res_s(tau (s - 1)^2 - 2(s^2 - s + 1), A_{4_1}(s^-p, s)) and its checks.
/// Throws VerificationError when any of them fails.
IntegerSurgeryReport integer_surgery_eliminant(int p);

struct OneOverQReport {
    int q = 0;
    UniPoly f;  // A_{4_1}(L, L^-q), unit cleared
    UniPoly h;  // f / (L + 1)^2
    Integer f_at_1;
    Integer h_at_1;
    UniPoly shifted;  // monic polynomial of 1/(L0 - 1)
};

OneOverQReport one_over_q_certificate(int q);

struct TwistCertificate {
    int m = 0;
    int q = 0;
    UniPoly s_poly;        // monic with root s0
    UniPoly s_inv_poly;    // monic with root 1/s0
    MultiPoly phi;         // monic in t up to a unit: t0 integral
    Integer f_at_1;
    UniPoly shifted;       // monic with root 1/(s0 - 1)
};

/// The integrality chain for slope 1/q, q odd.
TwistCertificate twist_knot_certificate(int m, int q);

struct PerronReport {
    bool is_perron = false;
    Complex dominant;
    Real second_modulus;
    bool simple = false;
    bool real = false;
    Integer lower;  // sign change f(lower) f(lower + 1) < 0 when bracketed
    bool bracketed = false;
};

/// Perron test by root moduli. Throws ConvergenceError when the two largest
/// moduli cannot be separated at this precision.
PerronReport perron_check(const UniPoly& f, int precision);

/// The polynomial f_C(L, M) of the splice condition.
MultiPoly splice_curve();

struct SpliceWitness {
    Complex L0;
    Complex M0;
    Real residual_curve;
    Real residual_apoly;
};

struct SpliceReport {
    bool satisfied = false;
    MultiPoly resultant;  // res_M(f_C(L, M), A(M, L)) in L
    std::vector<SpliceWitness> witnesses;
};

/// Common zeros of f_C(L, M) and A(M, L) with L0, M0 != 0 and not both ±1.
SpliceReport splice_condition_check(const MultiPoly& a_poly, int precision);

}  // namespace rtorsion
