#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "rtorsion/surgery.hpp"

// Reference values printed with six significant digits.
namespace rt_ref {

struct Row {
    std::array<double, 2> s, t, tau;
};

// Solution tables (s, t, tau).
inline const std::vector<Row> kFigureEightTwoThirds = {
    {{-0.200325, 0.979729}, {-3.42754, 0}, {0.738094, 0}},
    {{0.200325, 0.979729}, {-3.42754, 0}, {5.85638, 0}},
    {{-0.490393, 0.871501}, {-2.21504, 0}, {2.38654, 0}},
    {{-1.30664, 0.0498758}, {-0.392004, 0.724199}, {5.8872, -0.943648}},
    {{-0.264802, 0.964303}, {-1.43838, 0}, {8.4028, 0}},
    {{0.490393, 0.871501}, {-2.21504, 0}, {0.0164217, 0}},
    {{0.264802, 0.964303}, {-1.43838, 0}, {0.258749, 0}},
    {{1.30664, 0.0498758}, {-0.392004, -0.724199}, {-0.717017, 0.0236658}},
    {{-0.764207, 0.0291705}, {-0.392004, -0.724199}, {5.8872, 0.943648}},
    {{0.764207, 0.0291705}, {-0.392004, 0.724199}, {-0.717017, -0.0236658}},
    {{-0.615146, 0}, {-0.135036, 0}, {1.60981, 0}},
    {{0.615146, 0}, {-0.135036, 0}, {94.3908, 0}},
};

inline const std::vector<Row> kFiveTwoOneHalf = {
    {{-0.471842, 0.881683}, {-2.87048, 0}, {2.81243, 0}},
    {{0.165381, 0.98623}, {-3.68825, 0}, {12.3508, 0}},
    {{-0.200082, 0.979779}, {-2.2146, 0}, {0.490587, 0}},
    {{0.0681942, 0.997672}, {-2.41933, 0}, {0.313753, 0}},
    {{1.29286, 1.35876}, {-0.182462, -0.461334}, {9.57556, -0.520417}},
    {{-1.26355, 0.363134}, {0.158863, 1.07159}, {3.6856, -0.147423}},
    {{-0.348139, 0.937443}, {-1.1692, 0}, {4.5522, 0}},
    {{1, 0}, {0.21508, -1.30714}, {0, 0}},
    {{1, 0}, {0.21508, 1.30714}, {0, 0}},
    {{1, 0}, {0.56984, 0}, {0, 0}},
    {{-0.859034, 0.511919}, {-0.62449, 0}, {7.42456, 0}},
    {{0.313791, 0.949492}, {-1.80681, 0}, {0.0670363, 0}},
    {{0.942666, 0.333737}, {0.0622582, 0}, {148.658, 0}},
    {{0.709501, 0.704704}, {-1.66753, 0}, {1.06479, 0}},
    {{-0.731039, 0.210094}, {0.158863, -1.07159}, {3.6856, 0.147423}},
    {{0.367529, 0.386263}, {-0.182462, 0.461334}, {9.57556, 0.520417}},
    {{-0.986232, 0.16537}, {0.445642, 0}, {5.74328, 0}},
};

inline const char* kFigureEightTwoThirdsPoly =
    "x^12 - 124*x^11 + 3142*x^10 - 34792*x^9 + 196796*x^8 - 561760*x^7 + 627280*x^6 + 254848*x^5 - "
    "866240*x^4 + 153088*x^3 + 253696*x^2 - 66560*x + 1024";
inline const char* kFiveTwoOneHalfPoly =
    "x^14 - 210*x^13 + 10760*x^12 - 269160*x^11 + 3993232*x^10 - 38203808*x^9 + 245006784*x^8 - "
    "1067441024*x^7 + 3141232640*x^6 - 6091473408*x^5 + 7422475264*x^4 - 5260713984*x^3 + "
    "1942106112*x^2 - 314212352*x + 13778944";

inline const char* kFigureEightPoly = "L^2*M^4 + L*(-M^8 - 1 + M^6 + M^2 + 2*M^4) + M^4";
inline const char* kFiveTwoPoly =
    "-L^3 + L^2*(1 - 2*M^2 - 2*M^4 + M^8 - M^10) + L*M^4*(-1 + M^2 - 2*M^6 - 2*M^8 + M^10) - M^14";
inline const char* kFiveTwoRiley =
    "(2*(s^2 + s^-2) - 3)*t^2 + (-(s^4 + s^-4) + 3*(s^2 + s^-2) - 6)*t + 2*(s^2 + s^-2) - t^3 - 3";
inline const char* kEvenSlopePoly =
    "x^14 + 2*x^13 + x^12 - 4*x^10 - 8*x^9 - 10*x^8 - 13*x^7 - 10*x^6 - 8*x^5 - 4*x^4 + x^2 + 2*x + 1";

inline double rt_to_double(const rtorsion::Real& x) { return x.convert_to<double>(); }

inline double dist(const rtorsion::Complex& z, const std::array<double, 2>& w) {
    return std::hypot(rt_to_double(z.re) - w[0], rt_to_double(z.im) - w[1]);
}

// Printed entries carry six significant digits, hence the relative part.
inline double tol_for(const std::array<double, 2>& w, double abs_tol, double rel_tol) {
    return std::max(abs_tol, rel_tol * std::hypot(w[0], w[1]));
}

inline bool row_matches(const rtorsion::SolutionPoint& p, const Row& r, double abs_tol, double rel_tol) {
    const rtorsion::Complex inv = rtorsion::Complex(rtorsion::Real(1)) / p.s;
    const bool s_ok = dist(p.s, r.s) < tol_for(r.s, abs_tol, rel_tol) || dist(inv, r.s) < tol_for(r.s, abs_tol, rel_tol);
    return s_ok && dist(p.t, r.t) < tol_for(r.t, abs_tol, rel_tol) && dist(p.tau, r.tau) < tol_for(r.tau, abs_tol, rel_tol);
}

// Greedy bipartite match; the rows are well separated so greedy suffices.
inline int unmatched_rows(const std::vector<rtorsion::SolutionPoint>& pts, const std::vector<Row>& rows,
                          double abs_tol, double rel_tol = 6e-6) {
    std::vector<bool> used(pts.size(), false);
    int missing = 0;
    for (const auto& r : rows) {
        bool found = false;
        for (std::size_t i = 0; i < pts.size() && !found; ++i)
            if (!used[i] && row_matches(pts[i], r, abs_tol, rel_tol)) used[i] = found = true;
        if (!found) ++missing;
    }
    return missing;
}

}  // namespace rt_ref
