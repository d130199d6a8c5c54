#pragma once

#include <vector>

#include "rtorsion/multipoly.hpp"

namespace rtorsion {

/// Dense matrix with MultiPoly entries, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(int rows, int cols);
    PolyMatrix(std::initializer_list<std::initializer_list<MultiPoly>> rows);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    MultiPoly& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const MultiPoly& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const MultiPoly& c, const PolyMatrix& a);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    /// Adjugate of a 2x2 matrix (the inverse when det = 1).
    PolyMatrix adjugate2() const;
    /// Entrywise substitution.
    PolyMatrix substituted(const std::map<std::string, MultiPoly>& bindings) const;

    std::string to_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<MultiPoly> entries_;
};

/// Exact determinant. Dimension <= 4 uses cofactor expansion; integer
/// matrices and matrices over one remaining variable of dimension >= 8 are
/// reduced to integer determinants by evaluation and interpolation; the
/// remaining cases use fraction-free Bareiss elimination.
MultiPoly determinant(const PolyMatrix& m);

/// Fraction-free Bareiss elimination with exact division, pivoting on the
/// lowest total degree nonzero entry of each column (ties: lowest row).
MultiPoly determinant_bareiss(const PolyMatrix& m);

/// Cofactor (Laplace) expansion along the first row.
MultiPoly determinant_cofactor(const PolyMatrix& m);

/// Integer Bareiss elimination.
Integer determinant_integer(std::vector<std::vector<Integer>> a);

}  // namespace rtorsion
