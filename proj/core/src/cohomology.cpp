#include "dgsk/cohomology.hpp"

#include <stdexcept>

namespace dgsk {

Matrix differential_matrix(const QuadraticAlgebraModel& alg, const DifferentialSpec& d,
                           std::size_t deg) {
    if (deg + 1 > alg.degree_cap()) {
        throw std::out_of_range("degree beyond cap");
    }
    const DegreeBasis& source = alg.degree_basis(deg);
    Matrix m(alg.dim(deg + 1), source.basis.size());
    for (std::size_t j = 0; j < source.basis.size(); ++j) {
        const NcPoly image = leibniz_apply(d, NcPoly(Rational(1), source.basis[j]), alg);
        if (image.is_zero()) {
            continue;
        }
        const Vec col = alg.coords(image, deg + 1);
        for (std::size_t i = 0; i < col.size(); ++i) {
            m.at(i, j) = col[i];
        }
    }
    return m;
}

CochainMatrices cochain_matrices(const QuadraticAlgebraModel& alg, const DifferentialSpec& d,
                                 std::size_t top) {
    CochainMatrices out;
    out.maps.reserve(top + 1);
    for (std::size_t deg = 0; deg <= top; ++deg) {
        out.maps.push_back(differential_matrix(alg, d, deg));
    }
    return out;
}

CohomologyReport truncated_cohomology(const QuadraticAlgebraModel& alg, const DifferentialSpec& d,
                                      std::size_t D) {
    if (alg.degree_cap() < 3 || D + 1 > alg.degree_cap()) {
        throw std::invalid_argument("model cap too small for the requested truncation");
    }
    if (!check_differential(d, alg).valid) {
        throw std::invalid_argument("not a differential");
    }

    const CochainMatrices cochain = cochain_matrices(alg, d, D);
    CohomologyReport report;
    for (std::size_t deg = 0; deg <= D; ++deg) {
        const std::vector<Vec> kernel = nullspace(cochain.maps[deg]);

        // Image of the previous map, as row vectors for span arithmetic.
        std::vector<Vec> image;
        if (deg > 0) {
            const Matrix& prev = cochain.maps[deg - 1];
            for (std::size_t j = 0; j < prev.cols(); ++j) {
                Vec col(prev.rows());
                for (std::size_t i = 0; i < prev.rows(); ++i) {
                    col[i] = prev.at(i, j);
                }
                if (!vec_is_zero(col)) {
                    image.push_back(std::move(col));
                }
            }
        }
        const std::size_t image_rank =
            image.empty() ? 0 : rank(Matrix(std::vector<Vec>(image)));

        report.dims.push_back(kernel.size() - image_rank);

        // Representatives: extend the image greedily by kernel basis vectors
        // (canonical nullspace order), keeping the ones that enlarge the span.
        std::vector<Vec> span = image;
        std::vector<Vec> reps;
        for (const Vec& k : kernel) {
            if (span.empty() || !in_span(span, k)) {
                span.push_back(k);
                reps.push_back(k);
            }
        }
        if (reps.size() != report.dims.back()) {
            throw std::logic_error("representative count disagrees with the rank computation");
        }
        report.representatives.push_back(std::move(reps));
    }
    return report;
}

}  // namespace dgsk
