#pragma once

#include <cstddef>
#include <vector>

#include "dgsk/algebra.hpp"
#include "dgsk/differential.hpp"
#include "dgsk/linalg.hpp"

namespace dgsk {

/**
 * Matrix of ∂: A^deg → A^{deg+1} in the deterministic monomial bases; column
 * j holds the coordinates of ∂(basis word j). Requires deg ≤ cap − 1.
 */
Matrix differential_matrix(const QuadraticAlgebraModel& alg, const DifferentialSpec& d,
                           std::size_t deg);

/// The cochain maps for degrees 0..top; consecutive maps compose to zero for
/// a valid differential.
struct CochainMatrices {
    std::vector<Matrix> maps;  // maps[deg]: A^deg -> A^{deg+1}
};

CochainMatrices cochain_matrices(const QuadraticAlgebraModel& alg, const DifferentialSpec& d,
                                 std::size_t top);

/**
 * CohomologyReport: dim H^d = dim ker ∂^d − rank ∂^{d−1} for d = 0..D, plus
 * deterministic representative cocycles spanning a complement of the image
 * inside the kernel (greedy extension of the image by the canonical kernel
 * basis, so reruns and permuted inputs reproduce the same dimensions).
 */
struct CohomologyReport {
    std::vector<std::size_t> dims;
    std::vector<std::vector<Vec>> representatives;  // per degree, basis coordinates
};

/// Exact truncated cohomology; the model cap must be at least max(3, D + 1)
/// (degree 3 is needed to certify d a differential before any ranks are
/// trusted). Throws std::invalid_argument when d is not a differential.
CohomologyReport truncated_cohomology(const QuadraticAlgebraModel& alg, const DifferentialSpec& d,
                                      std::size_t D);

}  // namespace dgsk
