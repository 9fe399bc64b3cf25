#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dgsk/algebra.hpp"
#include "dgsk/linalg.hpp"
#include "dgsk/ncpoly.hpp"
#include "dgsk/params.hpp"
#include "dgsk/sympoly.hpp"

namespace dgsk {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

/**
 * DifferentialSpec: a candidate degree +1 differential given by its values on
 * the generators, ∂g = (x,y,z)·M^g·(x,y,z)ᵀ for g = x, y, z. Pure data —
 * normal-form coordinates depend on the parameter point and are derived
 * through a model. Two specs with equal nf-coordinates define the same map
 * on the quotient; the 27 matrix entries over-parametrize by the 9-dimensional
 * relation gauge.
 */
struct DifferentialSpec {
    Mat3 Mx{};
    Mat3 My{};
    Mat3 Mz{};

    static DifferentialSpec zero() { return {}; }

    /// The a = b, c = 0 family form ∂(x,y,z)ᵀ = M·(x², y², z²)ᵀ.
    static DifferentialSpec from_diag(const Mat3& m);

    /// From explicit degree-2 values on the generators.
    static DifferentialSpec from_values(const NcPoly& dx, const NcPoly& dy, const NcPoly& dz);

    const Mat3& matrix(int g) const { return g == 0 ? Mx : (g == 1 ? My : Mz); }
    Mat3& matrix(int g) { return g == 0 ? Mx : (g == 1 ? My : Mz); }

    /// ∂g as a free-algebra polynomial (the raw matrix presentation).
    NcPoly value(int g) const;

    bool operator==(const DifferentialSpec& o) const = default;
};

/// nf-coordinates of ∂x, ∂y, ∂z in the model's degree-2 basis.
std::array<Vec, 3> nf_coords(const DifferentialSpec& d, const QuadraticAlgebraModel& alg);

/// Flattened nf-coordinates (x block, then y, then z); length 3·dim A².
Vec nf_flat(const DifferentialSpec& d, const QuadraticAlgebraModel& alg);

/// Canonical section of nf_flat: basis words back to matrix entries.
DifferentialSpec spec_from_nf_flat(const Vec& flat, const QuadraticAlgebraModel& alg);

/**
 * Graded Leibniz extension: for a word l₁…l_k,
 *   ∂(l₁…l_k) = Σᵢ (−1)^(i−1) l₁…l_{i−1} · ∂(l_i) · l_{i+1}…l_k ,
 * the sign being the parity of the degree-1 letters crossed. ∂(l_i) is taken
 * as the canonical representative (the basis-word lift of nf(∂l_i)), so the
 * result depends only on the spec's nf-coordinates. Returns the canonical
 * representative of the image; degrees must stay within the model's cap.
 */
NcPoly leibniz_apply(const DifferentialSpec& d, const NcPoly& p, const QuadraticAlgebraModel& alg);

/**
 * Exact residuals of the two defining conditions at one parameter point:
 * well-definedness (∂f_i ≡ 0 in degree 3) and ∂² = 0 on the generators
 * (∂ applied to the canonical representative of ∂g). The spec is a valid
 * differential iff every residual vector vanishes.
 */
struct ValidityReport {
    std::array<Vec, 3> relation_residuals;  // coordinates of ∂f₁, ∂f₂, ∂f₃ in A³
    std::array<Vec, 3> square_residuals;    // coordinates of ∂²x, ∂²y, ∂²z in A³
    bool valid = false;
};

ValidityReport check_differential(const DifferentialSpec& d, const SklyaninParams& p);
ValidityReport check_differential(const DifferentialSpec& d, const QuadraticAlgebraModel& alg);

/**
 * The full constraint system at a parameter point, in two coordinate systems:
 *   - nf-variables u_{g,t} (3 · dim A² = 18): the solver's canonical unknowns;
 *   - matrix variables m^g_{ij} (27): the presentation-level unknowns, related
 *     by the linear projection u = π(m).
 * Linear members are the A³-coordinates of ∂f₁, ∂f₂, ∂f₃; quadratic members
 * are the A³-coordinates of ∂²x, ∂²y, ∂²z. A concrete spec is a valid DG
 * structure iff every member evaluates to zero at it.
 */
struct ConstraintSystem {
    SklyaninParams params;
    std::size_t nf_vars = 0;      // 3 * dim A²
    std::size_t matrix_vars = 27;

    std::vector<SymPoly> linear_nf;
    std::vector<SymPoly> quadratic_nf;
    std::vector<SymPoly> linear_matrix;
    std::vector<SymPoly> quadratic_matrix;

    /// Residuals from evaluating all members at a concrete spec,
    /// in nf-variables (flattened) and matrix variables respectively.
    std::vector<Rational> evaluate_nf(const Vec& nf_flat) const;
    std::vector<Rational> evaluate_matrix(const DifferentialSpec& d) const;
};

ConstraintSystem build_constraints(const SklyaninParams& p);
ConstraintSystem build_constraints(const QuadraticAlgebraModel& alg);

/// Flattens a spec's matrix entries in variable order m^g_{ij} -> 9g + 3i + j.
Vec matrix_flat(const DifferentialSpec& d);

}  // namespace dgsk
