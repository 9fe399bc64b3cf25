#include "dgsk/calabi_yau.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgsk {

namespace {

const std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

std::array<int, 3> inverse_perm(const std::array<int, 3>& s) {
    std::array<int, 3> inv{};
    for (int j = 0; j < 3; ++j) {
        inv[s[j]] = j;
    }
    return inv;
}

void require_3x3(const Matrix& m, const char* who) {
    if (m.rows() != 3 || m.cols() != 3) {
        throw std::invalid_argument(std::string(who) + " expects a 3x3 matrix");
    }
}

/// The fixed first-family matrix: every row (1, 1, 0).
Matrix first_family_matrix() {
    Matrix f(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        f.at(i, 0) = Rational(1);
        f.at(i, 1) = Rational(1);
    }
    return f;
}

}  // namespace

std::array<std::array<RadicalScalar, 3>, 3> qpl_apply(const MonomialMatrix& c, const Matrix& m) {
    require_3x3(m, "qpl_apply");
    std::array<std::array<RadicalScalar, 3>, 3> out;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const Rational& entry = m.at(c.sigma[j], c.sigma[k]);
            if (entry.is_zero()) {
                out[j][k] = RadicalScalar(Rational(0));
                continue;
            }
            // (C⁻¹ M C^{(2)})_{jk} = (e_k² / e_j) · M_{σ(j),σ(k)}.
            out[j][k] = c.scales[k].pow(2) / c.scales[j] * RadicalScalar(entry);
        }
    }
    return out;
}

bool qpl_reproduces(const MonomialMatrix& c, const Matrix& m, const Matrix& n) {
    require_3x3(n, "qpl_reproduces");
    const auto img = qpl_apply(c, m);
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            if (img[j][k] != RadicalScalar(n.at(j, k))) {
                return false;
            }
        }
    }
    return true;
}

QplDecision qpl_equivalent(const Matrix& m, const Matrix& n) {
    require_3x3(m, "qpl_equivalent");
    require_3x3(n, "qpl_equivalent");

    QplDecision best;
    int best_rank = 3;  // 0 rational witness, 1 radical witness, 2 closure-only

    for (const auto& sigma : kPerms) {
        bool pattern_ok = true;
        for (int j = 0; j < 3 && pattern_ok; ++j) {
            for (int k = 0; k < 3 && pattern_ok; ++k) {
                pattern_ok = m.at(sigma[j], sigma[k]).is_zero() == n.at(j, k).is_zero();
            }
        }
        if (!pattern_ok) {
            continue;
        }

        // Multiplicative system over the scales: for every nonzero position,
        // e_k²/e_j must equal N_{jk} / M_{σ(j),σ(k)}.
        IntMatrix exponents;
        std::vector<Rational> rhs;
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (n.at(j, k).is_zero()) {
                    continue;
                }
                std::vector<Integer> row(3, 0);
                row[k] += 2;
                row[j] -= 1;
                exponents.push_back(std::move(row));
                rhs.push_back(n.at(j, k) / m.at(sigma[j], sigma[k]));
            }
        }

        QplDecision cand;
        cand.equivalent = true;
        cand.sigma = sigma;
        int rank;
        if (exponents.empty()) {
            // Both matrices vanish everywhere the pattern allows: any scales
            // work, take units.
            cand.witness = MonomialMatrix{sigma, {RadicalScalar(Rational(1)),
                                                  RadicalScalar(Rational(1)),
                                                  RadicalScalar(Rational(1))}};
            rank = 0;
        } else {
            MultiplicativeSolution sol = solve_multiplicative(exponents, rhs);
            if (!sol.solvable) {
                continue;
            }
            cand.kernel_checked = std::move(sol.kernel);
            if (sol.witness.size() == 3) {
                MonomialMatrix w;
                w.sigma = sigma;
                bool rational = true;
                for (int i = 0; i < 3; ++i) {
                    w.scales[i] = sol.witness[i];
                    rational = rational && sol.witness[i].is_rational();
                }
                cand.witness = std::move(w);
                rank = rational ? 0 : 1;
            } else {
                cand.closure_only = true;
                rank = 2;
            }
        }

        if (rank < best_rank) {
            best = std::move(cand);
            best_rank = rank;
            if (best_rank == 0) {
                break;
            }
        }
    }

    if (best.equivalent && best.witness &&
        !qpl_reproduces(*best.witness, m, n)) {
        // The solver's algebra guarantees this; failure is a bug, not a value.
        throw std::logic_error("qpl witness failed re-evaluation");
    }
    return best;
}

std::optional<RankOneFactorization> rank_one_factor(const Matrix& n) {
    require_3x3(n, "rank_one_factor");
    std::size_t pivot_row = 3, pivot_col = 3;
    for (std::size_t i = 0; i < 3 && pivot_row == 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (!n.at(i, j).is_zero()) {
                pivot_row = i;
                pivot_col = j;
                break;
            }
        }
    }
    if (pivot_row == 3) {
        return std::nullopt;  // zero matrix, rank 0
    }
    RankOneFactorization f;
    f.v = n.row(pivot_row);
    f.u.assign(3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) {
        f.u[i] = n.at(i, pivot_col) / n.at(pivot_row, pivot_col);
    }
    // Exact reproduction check doubles as the rank-1 test.
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (n.at(i, j) != f.u[i] * f.v[j]) {
                return std::nullopt;
            }
        }
    }
    return f;
}

Rational delta_invariant(const Vec& w) {
    if (w.size() != 3) {
        throw std::invalid_argument("delta_invariant expects three coordinates");
    }
    const Rational d = w[0] - w[1] - w[2];
    return d * d - Rational(4) * w[1] * w[2];
}

bool noncy_fast(const Matrix& n) {
    const auto fac = rank_one_factor(n);
    if (!fac) {
        return false;
    }
    Vec w(3);
    for (int i = 0; i < 3; ++i) {
        if (fac->u[i].is_zero()) {
            return false;
        }
        w[i] = fac->v[i] * fac->u[i] * fac->u[i];
    }
    return delta_invariant(w).is_zero();
}

NoncyResult noncy_oracle(const Matrix& n) {
    require_3x3(n, "noncy_oracle");
    NoncyResult res;

    const auto fac = rank_one_factor(n);
    bool u_nonzero = fac.has_value();
    if (fac) {
        for (int i = 0; i < 3; ++i) {
            u_nonzero = u_nonzero && !fac->u[i].is_zero();
        }
        if (u_nonzero) {
            Vec w(3);
            for (int i = 0; i < 3; ++i) {
                w[i] = fac->v[i] * fac->u[i] * fac->u[i];
            }
            res.w = std::move(w);
        }
    }

    // Second family, searched permutation by permutation: relabeling by σ is
    // the scale-free part of the action, and the family's defining conditions
    // are invariant under pure scalings, so unit scales suffice.
    if (u_nonzero) {
        for (const auto& sigma : kPerms) {
            Vec u_s(3), v_s(3);
            for (int j = 0; j < 3; ++j) {
                u_s[j] = fac->u[sigma[j]];
                v_s[j] = fac->v[sigma[j]];
            }
            const Rational t = u_s[0];
            Vec ut(3), vt(3);
            for (int j = 0; j < 3; ++j) {
                ut[j] = u_s[j] / t;
                vt[j] = v_s[j] * t;
            }
            const std::array<Rational, 2> l{ut[1], ut[2]};
            const std::array<Rational, 3> mm{vt[0], vt[1], vt[2]};

            const Rational lhs = Rational(4) * mm[1] * mm[2] * l[0] * l[0] * l[1] * l[1];
            const Rational mid = mm[1] * l[0] * l[0] + mm[2] * l[1] * l[1];
            const Rational rhs = (mid - mm[0]) * (mid - mm[0]);
            if (lhs != rhs || mid == mm[0]) {
                continue;
            }

            NoncyWitness wit;
            wit.family_matrix = Matrix(3, 3);
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < 3; ++k) {
                    wit.family_matrix.at(j, k) = ut[j] * vt[k];
                }
            }
            MonomialMatrix c;
            c.sigma = inverse_perm(sigma);
            wit.transform = c;
            wit.l = l;
            wit.m = mm;
            if (!qpl_reproduces(wit.transform, wit.family_matrix, n)) {
                throw std::logic_error("family witness failed re-evaluation");
            }
            res.witness = std::move(wit);
            res.member = true;
            break;
        }
    }

    // First family: direct orbit test against the fixed matrix, through the
    // independent lattice-based equivalence decision.
    if (qpl_equivalent(first_family_matrix(), n).equivalent) {
        res.member = true;
    }
    return res;
}

NoncyResult noncy_membership(const Matrix& n) {
    const bool fast = noncy_fast(n);
    NoncyResult res = noncy_oracle(n);
    if (fast != res.member) {
        throw std::logic_error("membership invariant violated: fast and oracle paths disagree");
    }
    if (res.member && !res.witness) {
        throw std::logic_error("membership invariant violated: member without canonical witness");
    }
    return res;
}

const char* cy_status_name(CyStatus s) {
    switch (s) {
        case CyStatus::CalabiYau: return "CalabiYau";
        case CyStatus::NotCalabiYau: return "NotCalabiYau";
        case CyStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

const char* cy_justification_name(CyJustification j) {
    switch (j) {
        case CyJustification::ZeroDifferentialLemma: return "ZeroDifferentialLemma";
        case CyJustification::PolynomialCase: return "PolynomialCase";
        case CyJustification::TheoremB: return "TheoremB";
    }
    return "?";
}

CyVerdict cy_verdict(const SklyaninParams& p, const DifferentialSpec& d) {
    const QuadraticAlgebraModel alg(p, 3);
    if (!check_differential(d, alg).valid) {
        throw std::invalid_argument("not a differential");
    }

    CyVerdict out;
    const Vec flat = nf_flat(d, alg);
    if (vec_is_zero(flat)) {
        out.status = CyStatus::CalabiYau;
        out.justification = CyJustification::ZeroDifferentialLemma;
        return out;
    }

    const CaseTag tag = case_of(p);
    if (tag == CaseTag::CZeroAntiDiagonal) {
        // The quotient is the polynomial ring; every differential here keeps
        // the algebra Calabi-Yau.
        out.status = CyStatus::CalabiYau;
        out.justification = CyJustification::PolynomialCase;
        return out;
    }
    if (p.a() != p.b()) {
        // Away from the a = ±b lines validity forces ∂ = 0, and the
        // anti-diagonal polynomial case was handled above; reaching this
        // point would contradict the zero-only classification.
        throw std::logic_error("nonzero valid differential at zero-only parameters");
    }
    if (tag != CaseTag::CZeroDiagonal) {
        // a = b with c ≠ 0 carries the same nine-dimensional matrix family,
        // but the decision criteria implemented here are established only at
        // c = 0. Report the gap honestly instead of guessing; the tag names
        // the criterion whose hypotheses the input fails.
        out.status = CyStatus::NotApplicable;
        out.justification = CyJustification::TheoremB;
        return out;
    }

    // a = b, c = 0: read the defining matrix off the nf-coordinates,
    // ∂g = Σ_h M_{g,h}·h² on the monomial basis of the quotient.
    const DegreeBasis& deg2 = alg.degree_basis(2);
    std::array<std::size_t, 3> square_pos{};
    for (int h = 0; h < 3; ++h) {
        const Word sq({h, h});
        const auto it = std::find(deg2.basis.begin(), deg2.basis.end(), sq);
        if (it == deg2.basis.end()) {
            throw std::logic_error("generator square missing from the degree-2 basis");
        }
        square_pos[h] = static_cast<std::size_t>(it - deg2.basis.begin());
    }
    const std::array<Vec, 3> coords = nf_coords(d, alg);
    Matrix m(3, 3);
    for (int g = 0; g < 3; ++g) {
        Vec residue = coords[g];
        for (int h = 0; h < 3; ++h) {
            m.at(g, h) = residue[square_pos[h]];
            residue[square_pos[h]] = Rational(0);
        }
        if (!vec_is_zero(residue)) {
            throw std::logic_error("valid differential outside the diagonal family");
        }
    }

    out.diagonal_matrix = m;
    out.justification = CyJustification::TheoremB;
    NoncyResult membership = noncy_membership(m);
    if (membership.member) {
        out.status = CyStatus::NotCalabiYau;
        out.witness = std::move(membership.witness);
    } else {
        out.status = CyStatus::CalabiYau;
    }
    return out;
}

}  // namespace dgsk
