#include <doctest.h>

#include "dgsk/cohomology.hpp"
#include "test_util.hpp"

using namespace dgsk;
using dgsk::test::params_of;

namespace {

// The nonzero differential of the polynomial DG case: alpha = 1, beta =
// gamma = 0 in the anti-diagonal family.
DifferentialSpec prime_differential() {
    return DifferentialSpec::from_values(NcPoly(Rational(1), Word::parse("xx")),
                                         NcPoly(Rational(1), Word::parse("yx")),
                                         NcPoly(Rational(1), Word::parse("xz")));
}

DifferentialSpec diag_spec(std::initializer_list<int> entries) {
    Mat3 m{};
    auto it = entries.begin();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m[i][j] = Rational(*it++);
        }
    }
    return DifferentialSpec::from_diag(m);
}

}  // namespace

TEST_CASE("differential matrices have the right shape and compose to zero") {
    auto p = params_of(1, -1, 0);
    QuadraticAlgebraModel alg(p, 4);
    DifferentialSpec d = prime_differential();
    for (std::size_t deg = 0; deg + 1 <= 3; ++deg) {
        Matrix m = differential_matrix(alg, d, deg);
        CHECK(m.rows() == alg.dim(deg + 1));
        CHECK(m.cols() == alg.dim(deg));
    }
    CochainMatrices ch = cochain_matrices(alg, d, 3);
    REQUIRE(ch.maps.size() == 4);
    for (std::size_t deg = 0; deg + 1 < ch.maps.size(); ++deg) {
        CHECK((ch.maps[deg + 1] * ch.maps[deg]).is_zero());
    }
    CHECK_THROWS(differential_matrix(alg, d, 4));
}

TEST_CASE("zero differential: cohomology is the whole algebra") {
    auto p = params_of(1, 2, 3);
    QuadraticAlgebraModel alg(p, 4);
    CohomologyReport r = truncated_cohomology(alg, DifferentialSpec::zero(), 3);
    CHECK(r.dims == std::vector<std::size_t>{1, 3, 6, 10});
    REQUIRE(r.representatives.size() == 4);
    for (std::size_t d = 0; d <= 3; ++d) {
        CHECK(r.representatives[d].size() == r.dims[d]);
    }
}

TEST_CASE("polynomial DG algebra: even-degree veronese dimensions") {
    auto p = params_of(1, -1, 0);
    QuadraticAlgebraModel alg(p, 5);
    CohomologyReport r = truncated_cohomology(alg, prime_differential(), 4);
    CHECK(r.dims == std::vector<std::size_t>{1, 0, 3, 0, 5});
    // Representatives are genuine cocycles and independent modulo the image.
    CochainMatrices ch = cochain_matrices(alg, prime_differential(), 4);
    for (std::size_t d = 0; d <= 4; ++d) {
        REQUIRE(r.representatives[d].size() == r.dims[d]);
        std::vector<Vec> image;
        if (d > 0) {
            const Matrix& prev = ch.maps[d - 1];
            for (std::size_t j = 0; j < prev.cols(); ++j) {
                Vec col(prev.rows());
                for (std::size_t i = 0; i < prev.rows(); ++i) {
                    col[i] = prev.at(i, j);
                }
                image.push_back(col);
            }
        }
        std::size_t base_rank = image.empty() ? 0 : rank(Matrix(image));
        std::vector<Vec> stack = image;
        for (const Vec& rep : r.representatives[d]) {
            CHECK(vec_is_zero(ch.maps[d] * rep));
            stack.push_back(rep);
        }
        // Adjoining the representatives raises the rank by exactly dim H^d.
        CHECK(rank(Matrix(stack)) == base_rank + r.dims[d]);
    }
}

TEST_CASE("pinned regression goldens for the diagonal family") {
    auto p = params_of(1, 1, 0);
    {
        QuadraticAlgebraModel alg(p, 5);
        CohomologyReport r =
            truncated_cohomology(alg, diag_spec({0, 1, 1, 0, 1, 1, 0, 1, 1}), 4);
        CHECK(r.dims == std::vector<std::size_t>{1, 2, 3, 4, 5});
    }
    {
        QuadraticAlgebraModel alg(p, 4);
        CohomologyReport r =
            truncated_cohomology(alg, diag_spec({1, 1, 0, 1, 1, 0, 1, 1, 0}), 3);
        CHECK(r.dims == std::vector<std::size_t>{1, 2, 3, 4});
    }
}

TEST_CASE("cohomology refuses bad inputs") {
    auto p = params_of(1, -1, 0);
    QuadraticAlgebraModel small(p, 3);
    CHECK_THROWS_AS(truncated_cohomology(small, DifferentialSpec::zero(), 3),
                    std::invalid_argument);
    QuadraticAlgebraModel alg(p, 4);
    DifferentialSpec bad = DifferentialSpec::from_values(
        NcPoly(Rational(1), Word::parse("yy")), NcPoly(), NcPoly());
    CHECK_THROWS_AS(truncated_cohomology(alg, bad, 2), std::invalid_argument);
}

TEST_CASE("degree-0 representative is the unit") {
    auto p = params_of(1, 2, 3);
    QuadraticAlgebraModel alg(p, 3);
    CohomologyReport r = truncated_cohomology(alg, DifferentialSpec::zero(), 0);
    REQUIRE(r.dims == std::vector<std::size_t>{1});
    REQUIRE(r.representatives[0].size() == 1);
    CHECK(alg.lift(r.representatives[0][0], 0) == NcPoly::one());
}
