#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dgsk/scalars.hpp"

namespace dgsk {

using Vec = std::vector<Rational>;

/// Dense matrix over the rationals. Everything here is exact; row operations
/// use plain rational arithmetic (entries stay canonical through GMP).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, Vec(cols, Rational(0))) {}
    explicit Matrix(std::vector<Vec> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

    Vec& row(std::size_t i) { return data_[i]; }
    const Vec& row(std::size_t i) const { return data_[i]; }

    bool is_zero() const;
    Matrix transposed() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Vec> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Result of in-place reduced row echelon elimination. `pivot_cols` lists the
/// pivot column of each nonzero row, in row order; `pivot_row_of[c]` inverts
/// the map (SIZE_MAX for non-pivot columns).
struct RrefResult {
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_row_of;
    std::size_t rank = 0;
};

/// Reduced row echelon form with pivots chosen scanning columns in the given
/// order (pass 0..n-1 for the usual convention, n-1..0 to prefer late
/// columns). Deterministic: within a column the first usable row is taken.
RrefResult rref(Matrix& m, const std::vector<std::size_t>& column_order);

/// Convenience: left-to-right column order.
RrefResult rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in increasing free
/// column order, each with a 1 in its free coordinate (the standard reduced
/// parametrization; deterministic).
std::vector<Vec> nullspace(const Matrix& m);

/// A particular solution of m x = b, if the system is consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Expresses `target` in the span of `generators` (as column vectors):
/// returns c with sum_i c_i generators[i] = target, when possible.
std::optional<Vec> span_coordinates(const std::vector<Vec>& generators, const Vec& target);

/// True when `target` lies in the row space of `generators`.
bool in_span(const std::vector<Vec>& generators, const Vec& target);

}  // namespace dgsk
