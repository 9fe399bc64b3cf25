#include "dgsk/classifier.hpp"

#include <stdexcept>

namespace dgsk {

namespace {

/// Columns = basis vectors.
Matrix basis_matrix(const std::vector<Vec>& basis, std::size_t ambient) {
    Matrix b(ambient, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != ambient) {
            throw std::invalid_argument("basis vector of wrong length");
        }
        for (std::size_t i = 0; i < ambient; ++i) {
            b.at(i, j) = basis[j][i];
        }
    }
    return b;
}

/// Pullback of a symmetric form along the basis parametrization: Bᵀ Q B.
Matrix pullback(const Matrix& q, const Matrix& b) { return b.transposed() * q * b; }

/// Upper-triangle vectorization of a symmetric matrix, for span arithmetic
/// on the space of quadratic forms.
Vec sym_vec(const Matrix& q) {
    Vec v;
    v.reserve(q.rows() * (q.rows() + 1) / 2);
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t j = i; j < q.cols(); ++j) {
            v.push_back(q.at(i, j));
        }
    }
    return v;
}

Matrix outer(const Vec& f) {
    Matrix m(f.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            m.at(i, j) = f[i] * f[j];
        }
    }
    return m;
}

bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ambient) {
    Matrix ma = basis_matrix(a, ambient).transposed();
    Matrix mb = basis_matrix(b, ambient).transposed();
    const std::size_t ra = rank(ma);
    const std::size_t rb = rank(mb);
    if (ra != rb) {
        return false;
    }
    for (const Vec& v : a) {
        if (!in_span(b, v)) {
            return false;
        }
    }
    return true;
}

}  // namespace

LinearSolutionSpace solve_linear(const ConstraintSystem& cs) {
    std::vector<Vec> rows;
    rows.reserve(cs.linear_nf.size());
    for (const SymPoly& member : cs.linear_nf) {
        if (!member.is_zero()) {
            rows.push_back(member.linear_coefficients(cs.nf_vars));
        }
    }
    LinearSolutionSpace out;
    out.nf_vars = cs.nf_vars;
    if (rows.empty()) {
        // No constraints: the full coordinate space.
        for (std::size_t i = 0; i < cs.nf_vars; ++i) {
            Vec e(cs.nf_vars, Rational(0));
            e[i] = Rational(1);
            out.basis.push_back(std::move(e));
        }
        return out;
    }
    out.basis = nullspace(Matrix(std::move(rows)));
    return out;
}

std::vector<Matrix> restrict_quadratics(const ConstraintSystem& cs, const LinearSolutionSpace& L) {
    const Matrix b = basis_matrix(L.basis, cs.nf_vars);
    std::vector<Matrix> out;
    out.reserve(cs.quadratic_nf.size());
    for (const SymPoly& member : cs.quadratic_nf) {
        out.push_back(pullback(member.quadratic_form(cs.nf_vars), b));
    }
    return out;
}

namespace {

/// One certificate round on the current subspace (given by its basis in
/// L-coordinates): restrict the quadratics, certify vanishing functionals.
struct RoundOutcome {
    std::vector<SquareCertificate::CertifiedFunctional> certified;
};

std::vector<Matrix> restrict_to(const std::vector<Matrix>& quads, const std::vector<Vec>& basis,
                                std::size_t ambient) {
    const Matrix b = basis_matrix(basis, ambient);
    std::vector<Matrix> out;
    out.reserve(quads.size());
    for (const Matrix& q : quads) {
        out.push_back(pullback(q, b));
    }
    return out;
}

/// Functionals on the subspace that annihilate the target's coordinates
/// there (the whole dual space when the target is {0}).
std::vector<Vec> annihilator_basis(const std::vector<Vec>& target_coords, std::size_t dim) {
    if (target_coords.empty()) {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < dim; ++i) {
            Vec e(dim, Rational(0));
            e[i] = Rational(1);
            all.push_back(std::move(e));
        }
        return all;
    }
    return nullspace(Matrix(target_coords));
}

}  // namespace

CertificateResult square_certificate(const std::vector<Matrix>& quads,
                                     const std::vector<Vec>& target) {
    CertificateResult result;
    if (quads.empty()) {
        result.failure = CertificateFailure{{}, "no quadratic constraints to combine"};
        return result;
    }
    const std::size_t dim_L = quads.front().rows();

    // Soundness precondition: the target must satisfy every quadratic, else
    // V(quads) ⊆ target is false from the start.
    if (!target.empty()) {
        for (const Matrix& rq : restrict_to(quads, target, dim_L)) {
            if (!rq.is_zero()) {
                result.failure =
                    CertificateFailure{target, "target subspace does not satisfy the quadratics"};
                return result;
            }
        }
    }

    SquareCertificate cert;
    std::vector<Vec> subspace;  // current W, basis in L-coordinates
    for (std::size_t i = 0; i < dim_L; ++i) {
        Vec e(dim_L, Rational(0));
        e[i] = Rational(1);
        subspace.push_back(std::move(e));
    }

    while (true) {
        const std::size_t k = subspace.size();

        // Target expressed in W-coordinates (it is contained in W: initially
        // trivially, afterwards because its functionals vanish on it).
        std::vector<Vec> target_w;
        for (const Vec& t : target) {
            auto coords = span_coordinates(subspace, t);
            if (!coords) {
                result.failure = CertificateFailure{subspace, "target escaped the subspace"};
                return result;
            }
            target_w.push_back(std::move(*coords));
        }
        const std::size_t target_rank =
            target_w.empty() ? 0 : rank(Matrix(std::vector<Vec>(target_w)));
        if (target_rank == k) {
            // W = target: done.
            result.certificate = std::move(cert);
            return result;
        }

        const std::vector<Matrix> rquads = restrict_to(quads, subspace, dim_L);
        std::vector<Vec> quad_vecs;
        quad_vecs.reserve(rquads.size());
        for (const Matrix& q : rquads) {
            quad_vecs.push_back(sym_vec(q));
        }

        SquareCertificate::Round round;
        round.subspace = subspace;

        // Direct certificates: an annihilator functional s of the target with
        // s² an exact rational combination of the restricted quadratics.
        for (const Vec& f : annihilator_basis(target_w, k)) {
            if (vec_is_zero(f)) {
                continue;
            }
            if (auto comb = span_coordinates(quad_vecs, sym_vec(outer(f)))) {
                round.certified.push_back({f, std::move(*comb)});
            }
        }
        // Rank-one quadratics certify their own factor: Q = σ·uuᵀ forces the
        // functional u to vanish on the locus (u annihilates the target
        // automatically, since the target satisfies Q).
        for (std::size_t j = 0; j < rquads.size(); ++j) {
            const Matrix& q = rquads[j];
            if (q.is_zero() || rank(q) != 1) {
                continue;
            }
            std::size_t piv = k;
            for (std::size_t i = 0; i < k; ++i) {
                if (!q.at(i, i).is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv == k) {
                continue;  // rank-1 symmetric with zero diagonal is impossible in char 0
            }
            const Vec f = q.row(piv);
            Vec comb(rquads.size(), Rational(0));
            comb[j] = q.at(piv, piv);
            // f fᵀ = Q_{piv,piv} · Q must hold exactly for a symmetric rank-1 form.
            Matrix expect(k, k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t l = 0; l < k; ++l) {
                    expect.at(i, l) = comb[j] * q.at(i, l);
                }
            }
            if (outer(f) == expect) {
                round.certified.push_back({f, std::move(comb)});
            }
        }

        if (round.certified.empty()) {
            result.failure = CertificateFailure{subspace, "no functional admits a square combination"};
            return result;
        }

        // Cut W by the certified functionals and continue.
        std::vector<Vec> functional_rows;
        for (const auto& c : round.certified) {
            functional_rows.push_back(c.functional);
        }
        const std::vector<Vec> cut = nullspace(Matrix(std::move(functional_rows)));
        std::vector<Vec> next;
        const Matrix b = basis_matrix(subspace, dim_L);
        for (const Vec& w : cut) {
            next.push_back(b * w);
        }
        cert.rounds.push_back(std::move(round));
        if (next.size() >= subspace.size()) {
            result.failure = CertificateFailure{subspace, "certified functionals made no progress"};
            return result;
        }
        subspace = std::move(next);
    }
}

bool verify_square_certificate(const SquareCertificate& cert, const std::vector<Matrix>& quads,
                               const std::vector<Vec>& target, std::size_t dim_L) {
    std::vector<Vec> subspace;
    for (std::size_t i = 0; i < dim_L; ++i) {
        Vec e(dim_L, Rational(0));
        e[i] = Rational(1);
        subspace.push_back(std::move(e));
    }
    for (const auto& round : cert.rounds) {
        if (round.subspace != subspace || round.certified.empty()) {
            return false;
        }
        const std::vector<Matrix> rquads = restrict_to(quads, subspace, dim_L);
        std::vector<Vec> functional_rows;
        for (const auto& c : round.certified) {
            if (vec_is_zero(c.functional) || c.combination.size() != rquads.size()) {
                return false;
            }
            // Exact expansion: s² = Σ c_j Q_j as forms on the subspace.
            Matrix sum(subspace.size(), subspace.size());
            for (std::size_t j = 0; j < rquads.size(); ++j) {
                if (c.combination[j].is_zero()) {
                    continue;
                }
                for (std::size_t i = 0; i < sum.rows(); ++i) {
                    for (std::size_t l = 0; l < sum.cols(); ++l) {
                        sum.at(i, l) += c.combination[j] * rquads[j].at(i, l);
                    }
                }
            }
            if (!(outer(c.functional) == sum)) {
                return false;
            }
            functional_rows.push_back(c.functional);
        }
        const std::vector<Vec> cut = nullspace(Matrix(std::move(functional_rows)));
        std::vector<Vec> next;
        const Matrix b = basis_matrix(subspace, dim_L);
        for (const Vec& w : cut) {
            next.push_back(b * w);
        }
        subspace = std::move(next);
    }
    // After all rounds the surviving subspace must be exactly the target.
    if (target.empty()) {
        return subspace.empty();
    }
    return spans_equal(subspace, target, dim_L);
}

std::vector<DifferentialSpec> predicted_family(const SklyaninParams& p) {
    std::vector<DifferentialSpec> out;
    const Word x = word_x(), y = word_y(), z = word_z();
    if (case_of(p) == CaseTag::CZeroAntiDiagonal) {
        // ∂x = αx² + βxy + γxz, ∂y = αyx + βy² + γyz, ∂z = αxz + βyz + γz².
        out.push_back(DifferentialSpec::from_values(
            NcPoly(Rational(1), x.concat(x)), NcPoly(Rational(1), y.concat(x)),
            NcPoly(Rational(1), x.concat(z))));
        out.push_back(DifferentialSpec::from_values(
            NcPoly(Rational(1), x.concat(y)), NcPoly(Rational(1), y.concat(y)),
            NcPoly(Rational(1), y.concat(z))));
        out.push_back(DifferentialSpec::from_values(
            NcPoly(Rational(1), x.concat(z)), NcPoly(Rational(1), y.concat(z)),
            NcPoly(Rational(1), z.concat(z))));
    } else if (p.a() == p.b()) {
        // ∂(x,y,z)ᵀ = M·(x²,y²,z²)ᵀ with M running over the matrix units.
        // The family spans the solution space along the whole a = b line,
        // not only at c = 0: for c ≠ 0 the relation a(xy + yx) + cz² = 0
        // folds the mixed words into the squares, and the same nine
        // generators remain valid differentials.
        for (int g = 0; g < 3; ++g) {
            for (int h = 0; h < 3; ++h) {
                Mat3 m{};
                m[g][h] = Rational(1);
                out.push_back(DifferentialSpec::from_diag(m));
            }
        }
    }
    // Elsewhere only the zero differential survives.
    return out;
}

const char* classification_kind_name(ClassificationKind k) {
    switch (k) {
        case ClassificationKind::ZeroOnly: return "ZeroOnly";
        case ClassificationKind::AlphaBetaGammaFamily: return "AlphaBetaGammaFamily";
        case ClassificationKind::SymmetricMatrixFamily: return "SymmetricMatrixFamily";
        case ClassificationKind::Undecided: return "Undecided";
    }
    return "?";
}

DgClassification classify(const SklyaninParams& p) {
    const QuadraticAlgebraModel alg(p, 3);
    const ConstraintSystem cs = build_constraints(alg);
    const LinearSolutionSpace L = solve_linear(cs);
    const std::vector<Matrix> quads = restrict_quadratics(cs, L);

    DgClassification out{p, case_of(p), ClassificationKind::Undecided, 0, L.dimension(),
                         false,        {},         std::nullopt,
                         std::nullopt, false};

    // The expected family, re-checked concretely and located inside L.
    const std::vector<DifferentialSpec> family = predicted_family(p);
    out.family_residuals_ok = true;
    std::vector<Vec> family_in_L;
    for (const DifferentialSpec& gen : family) {
        if (!check_differential(gen, alg).valid) {
            out.family_residuals_ok = false;
        }
        auto coords = span_coordinates(L.basis, nf_flat(gen, alg));
        if (!coords) {
            // A would-be family member violating the linear constraints:
            // mathematically impossible; report honestly as undecided.
            out.family_residuals_ok = false;
            return out;
        }
        family_in_L.push_back(std::move(*coords));
    }

    bool quads_zero = true;
    for (const Matrix& q : quads) {
        if (!q.is_zero()) {
            quads_zero = false;
            break;
        }
    }
    out.quadratics_vanish_on_L = quads_zero;

    const std::size_t family_rank =
        family_in_L.empty() ? 0 : rank(Matrix(std::vector<Vec>(family_in_L)));

    if (quads_zero) {
        // Solution set = L; match it against the family span.
        out.solution_dim = L.dimension();
        for (const Vec& v : L.basis) {
            out.family_basis.push_back(spec_from_nf_flat(v, alg));
        }
        if (L.dimension() == 0) {
            out.kind = ClassificationKind::ZeroOnly;
        } else if (out.tag == CaseTag::CZeroAntiDiagonal && L.dimension() == 3 &&
                   family_rank == 3) {
            out.kind = ClassificationKind::AlphaBetaGammaFamily;
        } else if (p.a() == p.b() && L.dimension() == 9 && family_rank == 9) {
            // The matrix family: at c = 0 this is the CZeroDiagonal case, and
            // for c ≠ 0 the same nine-dimensional family persists on a = b.
            out.kind = ClassificationKind::SymmetricMatrixFamily;
        }
        return out;
    }

    CertificateResult cert = square_certificate(quads, family_in_L);
    if (!cert.ok()) {
        out.certificate_failure = std::move(cert.failure);
        return out;
    }
    out.certificate = std::move(cert.certificate);
    out.solution_dim = family_rank;
    for (const DifferentialSpec& gen : family) {
        out.family_basis.push_back(gen);
    }
    if (out.solution_dim == 0) {
        out.kind = ClassificationKind::ZeroOnly;
    } else if (out.tag == CaseTag::CZeroAntiDiagonal && out.solution_dim == 3) {
        out.kind = ClassificationKind::AlphaBetaGammaFamily;
    } else if (p.a() == p.b() && out.solution_dim == 9) {
        out.kind = ClassificationKind::SymmetricMatrixFamily;
    }
    return out;
}

}  // namespace dgsk
