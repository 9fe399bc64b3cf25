#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dgsk/differential.hpp"
#include "dgsk/linalg.hpp"
#include "dgsk/params.hpp"

namespace dgsk {

/// Exact nullspace of the linear constraint members, in nf-coordinates.
struct LinearSolutionSpace {
    std::vector<Vec> basis;  // reduced, deterministic (free-column order)
    std::size_t nf_vars = 0;

    std::size_t dimension() const { return basis.size(); }
};

LinearSolutionSpace solve_linear(const ConstraintSystem& cs);

/// Quadratic members pulled back along L's parametrization, as symmetric
/// forms on the parameter space (dim L × dim L matrices).
std::vector<Matrix> restrict_quadratics(const ConstraintSystem& cs, const LinearSolutionSpace& L);

/**
 * SquareCertificate: a sound proof that the common zero locus of the
 * restricted quadratics inside L is contained in the target subspace P. Round
 * after round, linear functionals s on the current subspace are certified to
 * vanish on the zero locus by exhibiting s² = Σ c_j Q_j exactly; the subspace
 * is then cut down by those functionals and the quadratics re-restricted,
 * until only P remains. Valid over any field — each certified functional's
 * square vanishes identically on the locus — so the conclusion holds over
 * the algebraic closure, not just over the rationals.
 */
struct SquareCertificate {
    struct CertifiedFunctional {
        Vec functional;  // on the round's subspace coordinates
        Vec combination; // c_j over that round's restricted quadratics
    };
    struct Round {
        std::vector<Vec> subspace;  // basis of the current subspace, in L-coordinates
        std::vector<CertifiedFunctional> certified;
    };
    std::vector<Round> rounds;
};

struct CertificateFailure {
    std::vector<Vec> unresolved_subspace;  // where the search stalled (L-coordinates)
    std::string reason;
};

/// Either a certificate that V(quads) ∩ L ⊆ P, or the point of failure.
struct CertificateResult {
    std::optional<SquareCertificate> certificate;
    std::optional<CertificateFailure> failure;

    bool ok() const { return certificate.has_value(); }
};

/**
 * Searches for a SquareCertificate proving V(quads) ⊆ P, where P is given by
 * spanning vectors in L-coordinates (pass {} for P = {0}). P must itself
 * satisfy all quadratics; the search never guesses — failure is a value.
 */
CertificateResult square_certificate(const std::vector<Matrix>& quads,
                                     const std::vector<Vec>& target);

/// Re-checks a certificate by exact expansion against the quadratics.
bool verify_square_certificate(const SquareCertificate& cert, const std::vector<Matrix>& quads,
                               const std::vector<Vec>& target, std::size_t dim_L);

/// The expected solution families, as concrete spec generators.
std::vector<DifferentialSpec> predicted_family(const SklyaninParams& p);

enum class ClassificationKind {
    ZeroOnly,
    AlphaBetaGammaFamily,
    SymmetricMatrixFamily,
    Undecided,
};

const char* classification_kind_name(ClassificationKind k);

/**
 * DgClassification: the classified solution set of the constraint system at
 * one parameter point. family_basis spans the solution space through the
 * canonical section (basis-word lifts); evidence records how the verdict was
 * reached and is independently re-checkable.
 */
struct DgClassification {
    SklyaninParams params;
    CaseTag tag;
    ClassificationKind kind = ClassificationKind::Undecided;
    std::size_t solution_dim = 0;
    std::size_t linear_dim = 0;          // dim of the linear-stage space L
    bool quadratics_vanish_on_L = false;
    std::vector<DifferentialSpec> family_basis;
    std::optional<SquareCertificate> certificate;
    std::optional<CertificateFailure> certificate_failure;
    bool family_residuals_ok = false;    // every family generator re-checked
};

DgClassification classify(const SklyaninParams& p);

}  // namespace dgsk
