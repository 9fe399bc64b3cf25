#pragma once

#include <array>
#include <optional>
#include <string>

#include "dgsk/differential.hpp"
#include "dgsk/intlattice.hpp"
#include "dgsk/linalg.hpp"
#include "dgsk/params.hpp"
#include "dgsk/scalars.hpp"

namespace dgsk {

/**
 * MonomialMatrix: an invertible matrix with exactly one nonzero entry per row
 * and column, stored as the permutation plus the column scales. The entry
 * convention is c_{σ(j), j} = e_j (column j carries e_j in row σ(j)).
 */
struct MonomialMatrix {
    std::array<int, 3> sigma{0, 1, 2};  // column j -> nonzero row σ(j)
    std::array<RadicalScalar, 3> scales{RadicalScalar(Rational(1)), RadicalScalar(Rational(1)),
                                        RadicalScalar(Rational(1))};

    static MonomialMatrix identity() { return {}; }
};

/// The transported matrix C⁻¹·M(c²ᵢⱼ)·..., which works out entrywise to
/// (e_k²/e_j)·M_{σ(j),σ(k)}; exact in the radical arithmetic.
std::array<std::array<RadicalScalar, 3>, 3> qpl_apply(const MonomialMatrix& c, const Matrix& m);

/// Entry-exact re-check that qpl_apply(c, m) equals n.
bool qpl_reproduces(const MonomialMatrix& c, const Matrix& m, const Matrix& n);

/**
 * Outcome of the quasi-permutation equivalence decision. Existence is decided
 * over the algebraic closure (exponent-lattice consistency); the witness is
 * materialized in ℚ or one quadratic extension whenever the roots allow,
 * otherwise `closure_only` reports existence without concrete scales and the
 * verified kernel relations serve as the consistency certificate.
 */
struct QplDecision {
    bool equivalent = false;
    std::optional<MonomialMatrix> witness;
    std::array<int, 3> sigma{0, 1, 2};                // permutation component when equivalent
    bool closure_only = false;
    std::vector<std::vector<Integer>> kernel_checked;  // relations verified on the rhs

    explicit operator bool() const { return equivalent; }
};

/// Decides whether some monomial C carries m to n (n = C⁻¹·m(c²ᵢⱼ) entrywise).
QplDecision qpl_equivalent(const Matrix& m, const Matrix& n);

/// Rank-one factorization N = u·vᵀ with the first nonzero entry of u equal
/// to 1 (unique under that normalization); nullopt iff rank(N) ≠ 1.
struct RankOneFactorization {
    Vec u;
    Vec v;
};
std::optional<RankOneFactorization> rank_one_factor(const Matrix& n);

/// Δ(w) = (w₁−w₂−w₃)² − 4w₂w₃ on wᵢ = vᵢ·uᵢ²; fully symmetric, and invariant
/// up to scale under the monomial action, which makes it an orbit detector.
Rational delta_invariant(const Vec& w);

/**
 * Witness for membership in a non-Calabi-Yau family: the family member F hit,
 * the transform with N = C⁻¹·F(c²ᵢⱼ), and F's parameters (l₁, l₂ scaling the
 * rows of (m₁, m₂, m₃)). All side conditions re-check exactly:
 * l₁l₂ ≠ 0, 4m₂m₃l₁²l₂² = (m₂l₁²+m₃l₂²−m₁)², m₂l₁²+m₃l₂² ≠ m₁.
 */
struct NoncyWitness {
    Matrix family_matrix;        // F = (1, l₁, l₂)ᵀ·(m₁, m₂, m₃)
    MonomialMatrix transform;    // C with N = C⁻¹·F(c²ᵢⱼ)
    std::array<Rational, 2> l{};
    std::array<Rational, 3> m{};
};

struct NoncyResult {
    bool member = false;
    std::optional<NoncyWitness> witness;  // present iff member
    std::optional<Vec> w;                 // the invariant vector, when rank 1 with u ≠ 0
};

/// O(1) membership test: rank exactly 1, u-factor fully nonzero, Δ(w) = 0.
bool noncy_fast(const Matrix& n);

/// Independent search: the fixed first-family matrix via qpl_equivalent, and
/// the parametric second family via the 6 permutations with exact side
/// conditions. Returns the canonical witness when a family is hit.
NoncyResult noncy_oracle(const Matrix& n);

/// Cross-checked membership: runs both paths and throws std::logic_error on
/// any disagreement (an invariant violation, never a value).
NoncyResult noncy_membership(const Matrix& n);

enum class CyStatus { CalabiYau, NotCalabiYau, NotApplicable };
enum class CyJustification { ZeroDifferentialLemma, PolynomialCase, TheoremB };

const char* cy_status_name(CyStatus s);
const char* cy_justification_name(CyJustification j);

/**
 * CyVerdict: the Calabi-Yau decision for a valid differential, with the
 * citation tag that justifies it and, for a negative verdict, the re-checkable
 * witness plus the extracted diagonal matrix. A nonzero differential at
 * a = b with c ≠ 0 (the matrix family away from c = 0) is outside the
 * implemented decision criteria and reports NotApplicable rather than a
 * guessed verdict; the tag then names the criterion whose hypotheses fail.
 */
struct CyVerdict {
    CyStatus status = CyStatus::NotApplicable;
    CyJustification justification = CyJustification::ZeroDifferentialLemma;
    std::optional<NoncyWitness> witness;
    std::optional<Matrix> diagonal_matrix;  // extracted M at the a=b, c=0 case
};

/// Full verdict; throws std::invalid_argument("not a differential") when d
/// fails check_differential at p.
CyVerdict cy_verdict(const SklyaninParams& p, const DifferentialSpec& d);

}  // namespace dgsk
