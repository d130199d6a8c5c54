#include "rtorsion/polymatrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rtorsion/errors.hpp"

namespace rtorsion {

PolyMatrix::PolyMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw PreconditionError("PolyMatrix: negative dimension");
}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<MultiPoly>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw PreconditionError("PolyMatrix: ragged rows");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = MultiPoly(1);
    return m;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("PolyMatrix: shape mismatch");
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("PolyMatrix: shape mismatch in product");
    PolyMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            MultiPoly s;
            for (int k = 0; k < a.cols_; ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& a) {
    PolyMatrix r = a;
    for (auto& e : r.entries_) e = c * e;
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (!(a.entries_[i] == b.entries_[i])) return false;
    return true;
}

PolyMatrix PolyMatrix::adjugate2() const {
    if (rows_ != 2 || cols_ != 2) throw PreconditionError("adjugate2: not a 2x2 matrix");
    const PolyMatrix& m = *this;
    return PolyMatrix{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
}

PolyMatrix PolyMatrix::substituted(const std::map<std::string, MultiPoly>& bindings) const {
    PolyMatrix r = *this;
    for (auto& e : r.entries_) {
        std::map<std::string, MultiPoly> local;
        for (const auto& [v, val] : bindings)
            if (e.var_index(v) >= 0) local.emplace(v, val);
        if (!local.empty()) e = substitute(e, local);
    }
    return r;
}

std::string PolyMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

Integer determinant_integer(std::vector<std::vector<Integer>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    Integer t1, t2;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                mpz_mul(t1.get_mpz_t(), a[k][k].get_mpz_t(), a[i][j].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

namespace {

MultiPoly cofactor_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    const int n = m.rows();
    if (row == n) return MultiPoly(1);
    MultiPoly sum;
    int sign = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int col = cols[c];
        if (!m(row, col).is_zero()) {
            cols.erase(cols.begin() + c);
            MultiPoly minor = cofactor_rec(m, cols, row + 1);
            cols.insert(cols.begin() + c, col);
            if (!minor.is_zero()) {
                MultiPoly t = m(row, col) * minor;
                if (sign > 0)
                    sum += t;
                else
                    sum -= t;
            }
        }
        sign = -sign;
    }
    return sum;
}

bool all_integer(const PolyMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_constant()) return false;
    return true;
}

std::vector<std::string> used_variables(const PolyMatrix& m) {
    std::vector<std::string> vars;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) vars = merge_vars(vars, m(i, j).used_vars());
    return vars;
}

// Newton interpolation over Q of integer samples at the given points;
// returns power-basis coefficients, which must be integral.
std::vector<Integer> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    const std::size_t n = xs.size();
    std::vector<Rational> c(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            c[i] = (c[i] - c[i - 1]) / Rational(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    // Horner expansion of the Newton form.
    std::vector<Rational> p(1, c[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= p[i] * xs[k];
        }
        q[0] += c[k];
        p = std::move(q);
    }
    std::vector<Integer> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i].canonicalize();
        if (p[i].get_den() != 1) throw Error("determinant interpolation produced a non-integer coefficient");
        out[i] = p[i].get_num();
    }
    return out;
}

MultiPoly determinant_dispatch(const PolyMatrix& m);

// Determinant by evaluating `var` at integer points and interpolating.
MultiPoly determinant_interpolated(PolyMatrix m, const std::string& var) {
    const int n = m.rows();
    std::vector<int> row_max(n, 0), col_max(n, 0);
    long unit_exp = 0;
    for (int i = 0; i < n; ++i) {
        bool any = false;
        int lo = 0;
        for (int j = 0; j < n; ++j) {
            if (m(i, j).is_zero()) continue;
            int d = m(i, j).min_degree(var);
            lo = any ? std::min(lo, d) : d;
            any = true;
        }
        if (!any) return MultiPoly();
        if (lo != 0) {
            MultiPoly u = MultiPoly::monomial({var}, {-lo});
            for (int j = 0; j < n; ++j) m(i, j) = m(i, j) * u;
            unit_exp += lo;
        }
    }
    for (int j = 0; j < n; ++j) {
        bool any = false;
        int lo = 0;
        for (int i = 0; i < n; ++i) {
            if (m(i, j).is_zero()) continue;
            int d = m(i, j).min_degree(var);
            lo = any ? std::min(lo, d) : d;
            any = true;
        }
        if (!any) return MultiPoly();
        if (lo != 0) {
            MultiPoly u = MultiPoly::monomial({var}, {-lo});
            for (int i = 0; i < n; ++i) m(i, j) = m(i, j) * u;
            unit_exp += lo;
        }
    }
    long row_bound = 0, col_bound = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = m(i, j).is_zero() ? 0 : m(i, j).degree(var);
            row_max[i] = std::max(row_max[i], d);
            col_max[j] = std::max(col_max[j], d);
        }
    for (int i = 0; i < n; ++i) {
        row_bound += row_max[i];
        col_bound += col_max[i];
    }
    const long bound = std::min(row_bound, col_bound);

    std::vector<Integer> xs;
    std::vector<MultiPoly> ys;
    for (long k = 0; k <= bound; ++k) {
        Integer x = (k % 2 == 1) ? Integer((k + 1) / 2) : Integer(-(k / 2));
        PolyMatrix e(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) e(i, j) = evaluate(m(i, j), var, x);
        xs.push_back(x);
        ys.push_back(determinant_dispatch(e));
    }

    // Interpolate coefficientwise over the monomials of the remaining variables.
    std::vector<std::string> rest;
    for (const auto& y : ys) rest = merge_vars(rest, y.used_vars());
    std::set<Exponents> monos;
    std::vector<MultiPoly> yr;
    for (const auto& y : ys) {
        yr.push_back(y.compact().with_vars(rest));
        for (const auto& [e, c] : yr.back().terms()) monos.insert(e);
    }
    std::vector<std::string> out_vars = rest;
    out_vars.push_back(var);
    MultiPoly::TermMap out;
    for (const auto& mono : monos) {
        std::vector<Integer> vals;
        vals.reserve(yr.size());
        for (const auto& y : yr) {
            auto it = y.terms().find(mono);
            vals.push_back(it == y.terms().end() ? Integer(0) : it->second);
        }
        auto coeffs = interpolate(xs, vals);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            if (coeffs[d] == 0) continue;
            Exponents e = mono;
            e.push_back(static_cast<int>(d) + static_cast<int>(unit_exp));
            out.emplace(std::move(e), coeffs[d]);
        }
    }
    return MultiPoly(out_vars, std::move(out));
}

MultiPoly determinant_dispatch(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return MultiPoly(1);
    if (all_integer(m)) {
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = m(i, j).is_zero() ? Integer(0) : m(i, j).constant_value();
        return MultiPoly(determinant_integer(std::move(a)));
    }
    if (n <= 4) return determinant_cofactor(m);
    auto vars = used_variables(m);
    if (n >= 8 && vars.size() <= 2) return determinant_interpolated(m, vars.back());
    return determinant_bareiss(m);
}

}  // namespace

MultiPoly determinant_cofactor(const PolyMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    std::vector<int> cols(m.cols());
    for (int j = 0; j < m.cols(); ++j) cols[j] = j;
    return cofactor_rec(m, cols, 0);
}

MultiPoly determinant_bareiss(const PolyMatrix& m0) {
    if (!m0.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const int n = m0.rows();
    if (n == 0) return MultiPoly(1);
    PolyMatrix a = m0;
    MultiPoly prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        int best = 0;
        for (int i = k; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            int d = a(i, k).total_degree();
            if (piv < 0 || d < best) {
                piv = i;
                best = d;
            }
        }
        if (piv < 0) return MultiPoly();
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MultiPoly t = a(k, k) * a(i, j);
                if (!a(i, k).is_zero() && !a(k, j).is_zero()) t -= a(i, k) * a(k, j);
                a(i, j) = divide_exact(t, prev);
            }
            a(i, k) = MultiPoly();
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

MultiPoly determinant(const PolyMatrix& m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    return determinant_dispatch(m);
}

}  // namespace rtorsion
