#include "dgsk/linalg.hpp"

#include <limits>
#include <stdexcept>

namespace dgsk {

Matrix::Matrix(std::vector<Vec> rows) : data_(std::move(rows)) {
    rows_ = data_.size();
    cols_ = rows_ ? data_[0].size() : 0;
    for (const auto& r : data_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix rows");
        }
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& r : data_) {
        for (const auto& x : r) {
            if (!x.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matrix-vector shape mismatch");
    }
    Vec out(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.at(i, j).is_zero()) {
                out[i] += a.at(i, j) * v[j];
            }
        }
    }
    return out;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector size mismatch");
    }
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector size mismatch");
    }
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

Vec vec_scale(const Rational& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out) {
        x *= c;
    }
    return out;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

RrefResult rref(Matrix& m, const std::vector<std::size_t>& column_order) {
    constexpr auto npos = std::numeric_limits<std::size_t>::max();
    RrefResult res;
    res.pivot_row_of.assign(m.cols(), npos);
    std::size_t next_row = 0;
    for (const std::size_t col : column_order) {
        if (next_row >= m.rows()) {
            break;
        }
        std::size_t pivot = npos;
        for (std::size_t r = next_row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == npos) {
            continue;
        }
        std::swap(m.row(pivot), m.row(next_row));
        const Rational inv = Rational(1) / m.at(next_row, col);
        for (auto& x : m.row(next_row)) {
            x *= inv;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || m.at(r, col).is_zero()) {
                continue;
            }
            const Rational factor = m.at(r, col);
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!m.at(next_row, j).is_zero()) {
                    m.at(r, j) -= factor * m.at(next_row, j);
                }
            }
        }
        res.pivot_cols.push_back(col);
        res.pivot_row_of[col] = next_row;
        ++next_row;
    }
    res.rank = next_row;
    return res;
}

RrefResult rref(Matrix& m) {
    std::vector<std::size_t> order(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        order[j] = j;
    }
    return rref(m, order);
}

std::size_t rank(Matrix m) { return rref(m).rank; }

std::vector<Vec> nullspace(const Matrix& m_in) {
    Matrix m = m_in;
    const RrefResult r = rref(m);
    constexpr auto npos = std::numeric_limits<std::size_t>::max();
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (r.pivot_row_of[free_col] != npos) {
            continue;
        }
        Vec v(m.cols(), Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t col = 0; col < m.cols(); ++col) {
            const std::size_t prow = r.pivot_row_of[col];
            if (prow != npos) {
                v[col] = -m.at(prow, free_col);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (m.rows() != b.size()) {
        throw std::invalid_argument("solve shape mismatch");
    }
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            aug.at(i, j) = m.at(i, j);
        }
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> order(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        order[j] = j;
    }
    const RrefResult r = rref(aug, order);  // never pivots on the RHS column
    constexpr auto npos = std::numeric_limits<std::size_t>::max();
    // Inconsistent iff some row is (0 ... 0 | nonzero).
    for (std::size_t i = r.rank; i < aug.rows(); ++i) {
        if (!aug.at(i, m.cols()).is_zero()) {
            return std::nullopt;
        }
    }
    Vec x(m.cols(), Rational(0));
    for (std::size_t col = 0; col < m.cols(); ++col) {
        const std::size_t prow = r.pivot_row_of[col];
        if (prow != npos) {
            x[col] = aug.at(prow, m.cols());
        }
    }
    return x;
}

std::optional<Vec> span_coordinates(const std::vector<Vec>& generators, const Vec& target) {
    if (generators.empty()) {
        return vec_is_zero(target) ? std::optional<Vec>(Vec{}) : std::nullopt;
    }
    Matrix cols(generators[0].size(), generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].size() != target.size()) {
            throw std::invalid_argument("span generator size mismatch");
        }
        for (std::size_t i = 0; i < target.size(); ++i) {
            cols.at(i, g) = generators[g][i];
        }
    }
    return solve(cols, target);
}

bool in_span(const std::vector<Vec>& generators, const Vec& target) {
    return span_coordinates(generators, target).has_value();
}

}  // namespace dgsk
