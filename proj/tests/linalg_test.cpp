#include <doctest.h>

#include "dgsk/linalg.hpp"
#include "dgsk/sweep.hpp"

using namespace dgsk;

namespace {

Matrix random_matrix(SampleSource& src, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = src.small_rational();
        }
    }
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix id = Matrix::identity(3);
    Matrix m(std::vector<Vec>{{Rational(1), Rational(2)},
                              {Rational(3), Rational(4)},
                              {Rational(5), Rational(6)}});
    CHECK(id * m == m);
    CHECK(m.transposed().rows() == 2);
    CHECK(m.transposed().at(1, 2) == Rational(6));
    CHECK_FALSE(m.is_zero());
    CHECK(Matrix(2, 2).is_zero());

    Vec v{Rational(1), Rational(-1)};
    Vec mv = m * v;
    CHECK(mv == Vec{Rational(-1), Rational(-1), Rational(-1)});
}

TEST_CASE("vector helpers") {
    Vec a{Rational(1), Rational(2)};
    Vec b{Rational(3), Rational(-2)};
    CHECK(vec_add(a, b) == Vec{Rational(4), Rational(0)});
    CHECK(vec_sub(a, b) == Vec{Rational(-2), Rational(4)});
    CHECK(vec_scale(Rational(2), a) == Vec{Rational(2), Rational(4)});
    CHECK(vec_is_zero(Vec{Rational(0), Rational(0)}));
    CHECK_FALSE(vec_is_zero(a));
}

TEST_CASE("rref ranks known matrices") {
    Matrix a(std::vector<Vec>{{Rational(1), Rational(2), Rational(3)},
                              {Rational(2), Rational(4), Rational(6)},
                              {Rational(1), Rational(1), Rational(1)}});
    CHECK(rank(a) == 2);
    CHECK(rank(Matrix::identity(4)) == 4);
    CHECK(rank(Matrix(3, 5)) == 0);

    Matrix b = a;
    RrefResult r = rref(b);
    CHECK(r.rank == 2);
    REQUIRE(r.pivot_cols.size() == 2);
    CHECK(r.pivot_cols[0] == 0);
    CHECK(r.pivot_row_of[r.pivot_cols[1]] == 1);
    // Pivot columns reduce to unit columns.
    CHECK(b.at(0, 0) == Rational(1));
    CHECK(b.at(1, 0) == Rational(0));
}

TEST_CASE("nullspace vectors actually solve, and dimensions add up") {
    SampleSource src(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + src.bounded(5);
        std::size_t cols = 1 + src.bounded(5);
        Matrix m = random_matrix(src, rows, cols);
        std::size_t rk = rank(m);
        auto basis = nullspace(m);
        CHECK(rk + basis.size() == cols);
        for (const Vec& x : basis) {
            CHECK(vec_is_zero(m * x));
        }
        // The basis is independent: each vector carries a 1 in a coordinate
        // where every other vector is 0 (the standard parametrization).
        Matrix stacked(basis);
        if (!basis.empty()) {
            CHECK(rank(stacked) == basis.size());
        }
    }
}

TEST_CASE("solve finds particular solutions exactly") {
    SampleSource src(29);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix m = random_matrix(src, 2 + src.bounded(3), 2 + src.bounded(3));
        // Build a consistent right-hand side from a known solution.
        Vec x0(m.cols());
        for (auto& e : x0) {
            e = src.small_rational();
        }
        Vec b = m * x0;
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
    // An inconsistent system is reported as such.
    Matrix m(std::vector<Vec>{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}});
    CHECK_FALSE(solve(m, Vec{Rational(0), Rational(1)}).has_value());
}

TEST_CASE("span membership and coordinates") {
    std::vector<Vec> gens{{Rational(1), Rational(0), Rational(1)},
                          {Rational(0), Rational(1), Rational(1)}};
    Vec inside{Rational(2), Rational(3), Rational(5)};
    Vec outside{Rational(1), Rational(0), Rational(0)};
    CHECK(in_span(gens, inside));
    CHECK_FALSE(in_span(gens, outside));
    auto c = span_coordinates(gens, inside);
    REQUIRE(c.has_value());
    CHECK(vec_add(vec_scale((*c)[0], gens[0]), vec_scale((*c)[1], gens[1])) == inside);
    CHECK_FALSE(span_coordinates(gens, outside).has_value());
    // The zero vector lies in the empty span.
    CHECK(in_span({}, Vec{Rational(0), Rational(0)}));
    CHECK_FALSE(in_span({}, outside));
}

TEST_CASE("rref respects a custom column order") {
    Matrix m(std::vector<Vec>{{Rational(1), Rational(1)}});
    Matrix late = m;
    RrefResult r = rref(late, std::vector<std::size_t>{1, 0});
    CHECK(r.pivot_cols == std::vector<std::size_t>{1});
}
