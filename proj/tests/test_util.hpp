#pragma once

#include <cstddef>
#include <vector>

#include "dgsk/calabi_yau.hpp"
#include "dgsk/linalg.hpp"
#include "dgsk/ncpoly.hpp"
#include "dgsk/params.hpp"
#include "dgsk/sweep.hpp"

namespace dgsk::test {

/// validate() collapsed for fixtures that are known-good by construction.
inline SklyaninParams params_of(int a, int b, int c) {
    auto p = validate_quiet(Rational(a), Rational(b), Rational(c));
    if (!p) {
        throw std::logic_error("fixture parameter point rejected");
    }
    return *p;
}

/// Mutual containment of two rational span generators (row vectors).
inline bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    for (const Vec& v : a) {
        if (!in_span(b, v)) {
            return false;
        }
    }
    for (const Vec& v : b) {
        if (!in_span(a, v)) {
            return false;
        }
    }
    return true;
}

inline Matrix random_matrix3(SampleSource& src) {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m.at(i, j) = src.small_rational();
        }
    }
    return m;
}

/// Random rank-at-most-one matrix u·vᵀ; zero coordinates are allowed so the
/// zero-pattern edge cases get exercised.
inline Matrix random_rank_one(SampleSource& src) {
    Vec u(3), v(3);
    for (std::size_t i = 0; i < 3; ++i) {
        u[i] = src.small_rational();
        v[i] = src.small_rational();
    }
    Matrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m.at(i, j) = u[i] * v[j];
        }
    }
    return m;
}

inline MonomialMatrix random_monomial(SampleSource& src) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    MonomialMatrix c;
    const int* p = perms[src.bounded(6)];
    c.sigma = {p[0], p[1], p[2]};
    for (int j = 0; j < 3; ++j) {
        c.scales[j] = RadicalScalar(src.small_nonzero_rational());
    }
    return c;
}

/// qpl_apply with rational scales lands in the rationals again.
inline Matrix rational_qpl_image(const MonomialMatrix& c, const Matrix& m) {
    auto img = qpl_apply(c, m);
    Matrix n(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            n.at(i, j) = img[i][j].as_rational();
        }
    }
    return n;
}

/// Random homogeneous polynomial of the requested degree in the free algebra.
inline NcPoly random_homogeneous(SampleSource& src, std::size_t degree, std::size_t terms = 3) {
    NcPoly p;
    for (std::size_t t = 0; t < terms; ++t) {
        p.add_term(Word::from_rank(degree, src.bounded(word_count(degree))),
                   src.small_rational());
    }
    return p;
}

}  // namespace dgsk::test
