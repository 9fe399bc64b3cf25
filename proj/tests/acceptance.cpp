// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact rational/radical arithmetic; the only
// measured quantities are the wall-clock budgets of criteria 1 and 6.

#include <chrono>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dgsk/calabi_yau.hpp"
#include "dgsk/classifier.hpp"
#include "dgsk/cohomology.hpp"
#include "dgsk/json_io.hpp"
#include "dgsk/sweep.hpp"

using namespace dgsk;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

bool g_all_pass = true;

void report(int id, const std::string& label, const Outcome& o) {
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << label << ")";
    if (!o.detail.empty()) {
        line << ": " << o.detail;
    }
    line << " [" << std::fixed << std::setprecision(2) << o.seconds << " s]";
    std::cout << line.str() << std::endl;
    g_all_pass = g_all_pass && o.pass;
}

Outcome timed(const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
}

bool spans_equal(const std::vector<Vec>& a, const std::vector<Vec>& b) {
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

bool certificate_reverifies(const SklyaninParams& p, const DgClassification& cls) {
    ConstraintSystem cs = build_constraints(p);
    LinearSolutionSpace L = solve_linear(cs);
    auto quads = restrict_quadratics(cs, L);
    return verify_square_certificate(*cls.certificate, quads, {}, L.dimension());
}

// Zero-only locus: ZeroOnly with a verified certificate or a trivial
// collapse, over the three zero-only strata plus fixed probes on the
// anti-diagonal line with c != 0 (zero-only as well, but a measure-zero
// sublocus that random strata essentially never hit).
Outcome criterion1() {
    SampleSource src(1001);
    const CaseTag strata[3] = {CaseTag::TwoNonzeroWithC, CaseTag::AllNonzero,
                               CaseTag::CZeroDistinctSquares};
    std::size_t certified = 0, collapsed = 0;
    std::size_t points = 0;
    auto check_point = [&](const SklyaninParams& p) -> std::optional<Outcome> {
        ++points;
        DgClassification cls = classify(p);
        if (cls.kind != ClassificationKind::ZeroOnly || cls.solution_dim != 0 ||
            !cls.family_basis.empty()) {
            return Outcome{false, "unexpected classification at " + p.str(), 0};
        }
        if (cls.linear_dim == 0) {
            ++collapsed;
        } else if (cls.certificate.has_value() && certificate_reverifies(p, cls)) {
            ++certified;
        } else {
            return Outcome{false, "no certificate and no collapse at " + p.str(), 0};
        }
        return std::nullopt;
    };
    for (int i = 0; i < 100; ++i) {
        if (auto bad = check_point(sample_stratum(src, strata[i % 3]))) {
            return *bad;
        }
    }
    for (auto abc : {std::array<int, 3>{1, -1, 1}, {2, -2, 3}, {1, -1, -5}}) {
        auto p = validate_quiet(Rational(abc[0]), Rational(abc[1]), Rational(abc[2]));
        if (!p) {
            return {false, "anti-diagonal probe rejected", 0};
        }
        if (auto bad = check_point(*p)) {
            return *bad;
        }
    }
    std::ostringstream d;
    d << points << " points ZeroOnly (" << certified << " certified, " << collapsed
      << " collapsed)";
    return {true, d.str(), 0};
}

// The anti-diagonal line at c = 0 carries exactly the 3-parameter family.
Outcome criterion2() {
    SampleSource src(1002);
    for (int i = 0; i < 25; ++i) {
        SklyaninParams p = sample_stratum(src, CaseTag::CZeroAntiDiagonal);
        DgClassification cls = classify(p);
        if (cls.kind != ClassificationKind::AlphaBetaGammaFamily || cls.solution_dim != 3 ||
            cls.family_basis.size() != 3) {
            return {false, "expected the 3-dimensional family at " + p.str(), 0};
        }
        QuadraticAlgebraModel alg(p, 3);
        std::vector<Vec> solver, predicted;
        for (const DifferentialSpec& d : cls.family_basis) {
            solver.push_back(nf_flat(d, alg));
        }
        for (const DifferentialSpec& d : predicted_family(p)) {
            predicted.push_back(nf_flat(d, alg));
        }
        if (!spans_equal(solver, predicted)) {
            return {false, "solution span differs from the family span at " + p.str(), 0};
        }
        // Random members of the span have identically zero residuals.
        for (int t = 0; t < 3; ++t) {
            Vec combo(solver[0].size(), Rational(0));
            for (const Vec& gen : solver) {
                combo = vec_add(combo, vec_scale(src.small_rational(), gen));
            }
            ValidityReport v = check_differential(spec_from_nf_flat(combo, alg), alg);
            for (int g = 0; g < 3; ++g) {
                if (!vec_is_zero(v.relation_residuals[g]) ||
                    !vec_is_zero(v.square_residuals[g])) {
                    return {false, "nonzero residual on a family member at " + p.str(), 0};
                }
            }
        }
    }
    return {true, "25 points carry exactly the alpha-beta-gamma family", 0};
}

// The diagonal line at c = 0 carries exactly the 9-parameter family.
Outcome criterion3() {
    SampleSource src(1003);
    for (int i = 0; i < 25; ++i) {
        SklyaninParams p = sample_stratum(src, CaseTag::CZeroDiagonal);
        DgClassification cls = classify(p);
        if (cls.kind != ClassificationKind::SymmetricMatrixFamily || cls.solution_dim != 9 ||
            cls.family_basis.size() != 9) {
            return {false, "expected the 9-dimensional family at " + p.str(), 0};
        }
        QuadraticAlgebraModel alg(p, 3);
        std::vector<Vec> solver, predicted;
        for (const DifferentialSpec& d : cls.family_basis) {
            solver.push_back(nf_flat(d, alg));
            // Members must take the form d(g) = sum_h M_{gh} h^2.
            for (int g = 0; g < 3; ++g) {
                const Mat3& m = d.matrix(g);
                for (int r = 0; r < 3; ++r) {
                    for (int c = 0; c < 3; ++c) {
                        if (r != c && !m[r][c].is_zero()) {
                            return {false, "non-diagonal generator at " + p.str(), 0};
                        }
                    }
                }
            }
        }
        for (const DifferentialSpec& d : predicted_family(p)) {
            predicted.push_back(nf_flat(d, alg));
        }
        if (!spans_equal(solver, predicted)) {
            return {false, "solution span differs from the matrix family at " + p.str(), 0};
        }
    }
    return {true, "25 points carry exactly the symmetric-matrix family", 0};
}

// Graded dimensions across the whole parameter space.
Outcome criterion4() {
    SampleSource src(1004);
    const CaseTag all[5] = {CaseTag::TwoNonzeroWithC, CaseTag::AllNonzero,
                            CaseTag::CZeroDistinctSquares, CaseTag::CZeroAntiDiagonal,
                            CaseTag::CZeroDiagonal};
    const std::size_t expected[5] = {1, 3, 6, 10, 15};
    for (int i = 0; i < 50; ++i) {
        SklyaninParams p = sample_stratum(src, all[i % 5]);
        QuadraticAlgebraModel alg(p, 4);
        for (std::size_t d = 0; d <= 4; ++d) {
            if (alg.dim(d) != expected[d]) {
                std::ostringstream msg;
                msg << "dim A^" << d << " = " << alg.dim(d) << " at " << p.str();
                return {false, msg.str(), 0};
            }
        }
    }
    return {true, "50 points with dims 1, 3, 6, 10, 15", 0};
}

// Calabi-Yau verdict fixtures.
Outcome criterion5() {
    const auto p = *validate_quiet(Rational(1), Rational(1), Rational(0));
    struct Fixture {
        const char* name;
        Mat3 m;
        CyStatus status;
    };
    auto mk = [](std::initializer_list<int> entries) {
        Mat3 m{};
        auto it = entries.begin();
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                m[i][j] = Rational(*it++);
            }
        }
        return m;
    };
    const Fixture fixtures[] = {
        {"row-repeat", mk({1, 1, 0, 1, 1, 0, 1, 1, 0}), CyStatus::NotCalabiYau},
        {"column-shift", mk({0, 1, 1, 0, 1, 1, 0, 1, 1}), CyStatus::NotCalabiYau},
        {"weighted-rows", mk({1, 1, 1, 1, 1, 1, 2, 2, 2}), CyStatus::NotCalabiYau},
        {"zero", mk({0, 0, 0, 0, 0, 0, 0, 0, 0}), CyStatus::CalabiYau},
        {"identity", mk({1, 0, 0, 0, 1, 0, 0, 0, 1}), CyStatus::CalabiYau},
    };
    for (const Fixture& fx : fixtures) {
        CyVerdict v = cy_verdict(p, DifferentialSpec::from_diag(fx.m));
        if (v.status != fx.status) {
            return {false, std::string("wrong verdict for fixture ") + fx.name, 0};
        }
        if (v.status == CyStatus::NotCalabiYau) {
            if (!v.witness.has_value()) {
                return {false, std::string("missing witness for fixture ") + fx.name, 0};
            }
            Matrix target(3, 3);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    target.at(i, j) = fx.m[i][j];
                }
            }
            if (!qpl_reproduces(v.witness->transform, v.witness->family_matrix, target)) {
                return {false, std::string("witness fails re-check for fixture ") + fx.name, 0};
            }
        }
    }
    return {true, "all five fixtures verdict as published, witnesses re-check", 0};
}

// Fast-path / oracle equivalence on the rank-1 membership test.
Outcome criterion6() {
    SampleSource src(1006);
    std::size_t members = 0;
    auto check_one = [&members](const Matrix& n) -> bool {
        NoncyResult oracle = noncy_oracle(n);
        if (noncy_fast(n) != oracle.member) {
            return false;
        }
        if (oracle.member) {
            ++members;
            if (!oracle.witness.has_value() ||
                !qpl_reproduces(oracle.witness->transform, oracle.witness->family_matrix, n)) {
                return false;
            }
        }
        return true;
    };
    for (int i = 0; i < 1000; ++i) {
        Vec u(3), v(3);
        for (int k = 0; k < 3; ++k) {
            u[k] = src.small_rational();
            v[k] = src.small_rational();
        }
        Matrix n(3, 3);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                n.at(r, c) = u[r] * v[c];
            }
        }
        if (!check_one(n)) {
            return {false, "fast path and oracle disagree on a random instance", 0};
        }
    }
    for (int i = 0; i < 100; ++i) {
        // Engineered Delta = 0: w = (k(s±t)^2, k s^2, k t^2) with all u_i != 0.
        Rational k = src.small_nonzero_rational();
        Rational s = src.small_nonzero_rational();
        Rational t = src.small_nonzero_rational();
        Rational w1 = (i % 2 == 0) ? k * (s + t) * (s + t) : k * (s - t) * (s - t);
        Vec w{w1, k * s * s, k * t * t};
        Vec u(3);
        for (int j = 0; j < 3; ++j) {
            u[j] = src.small_nonzero_rational();
        }
        Matrix n(3, 3);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                n.at(r, c) = u[r] * (w[c] / (u[c] * u[c]));
            }
        }
        if (delta_invariant(w) != Rational(0)) {
            return {false, "engineered instance failed its own construction", 0};
        }
        if (!check_one(n)) {
            return {false, "fast path and oracle disagree on an engineered instance", 0};
        }
    }
    std::ostringstream d;
    d << "1000 random + 100 engineered instances agree (" << members << " members)";
    return {true, d.str(), 0};
}

// Isomorphism decision round-trip.
Outcome criterion7() {
    SampleSource src(1007);
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < 200; ++i) {
        Matrix m(3, 3);
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                m.at(r, c) = src.small_rational();
            }
        }
        MonomialMatrix c;
        const int* perm = perms[src.bounded(6)];
        c.sigma = {perm[0], perm[1], perm[2]};
        for (int j = 0; j < 3; ++j) {
            c.scales[j] = RadicalScalar(src.small_nonzero_rational());
        }
        auto img = qpl_apply(c, m);
        Matrix n(3, 3);
        for (int r = 0; r < 3; ++r) {
            for (int col = 0; col < 3; ++col) {
                n.at(r, col) = img[r][col].as_rational();
            }
        }
        QplDecision dec = qpl_equivalent(m, n);
        if (!dec.equivalent || !dec.witness.has_value() ||
            !qpl_reproduces(*dec.witness, m, n)) {
            return {false, "round-trip failed to recover a working witness", 0};
        }
    }
    return {true, "200 transported matrices recovered with entry-exact witnesses", 0};
}

// Property suites: Leibniz, d∘d = 0, reduction/multiplication, rescaling.
Outcome criterion8() {
    SampleSource src(1008);
    const auto anti = *validate_quiet(Rational(1), Rational(-1), Rational(0));
    const auto diag = *validate_quiet(Rational(1), Rational(1), Rational(0));

    auto random_valid_d = [&src](const SklyaninParams& p) {
        std::vector<DifferentialSpec> fam = predicted_family(p);
        QuadraticAlgebraModel alg(p, 3);
        Vec combo(3 * alg.dim(2), Rational(0));
        for (const DifferentialSpec& gen : fam) {
            combo = vec_add(combo, vec_scale(src.small_rational(), nf_flat(gen, alg)));
        }
        return spec_from_nf_flat(combo, alg);
    };
    auto random_poly = [&src](std::size_t degree) {
        NcPoly p;
        for (int t = 0; t < 3; ++t) {
            p.add_term(Word::from_rank(degree, src.bounded(word_count(degree))),
                       src.small_rational());
        }
        return p;
    };

    // Suite 1: graded Leibniz rule on 200 random (d, p, q).
    for (int i = 0; i < 200; ++i) {
        const SklyaninParams& p = (i % 2 == 0) ? anti : diag;
        QuadraticAlgebraModel alg(p, 4);
        DifferentialSpec d = random_valid_d(p);
        std::size_t dp = 1 + src.bounded(2);
        std::size_t dq = (dp == 2) ? 1 : 1 + src.bounded(2);
        NcPoly pa = random_poly(dp), qa = random_poly(dq);
        NcPoly lhs = leibniz_apply(d, mul_poly(pa, qa), alg);
        NcPoly rhs = mul_poly(leibniz_apply(d, pa, alg), alg.reduce(qa));
        NcPoly signed_part = mul_poly(alg.reduce(pa), leibniz_apply(d, qa, alg));
        rhs = (dp % 2 == 0) ? rhs + signed_part : rhs - signed_part;
        if (!alg.reduce(lhs - rhs).is_zero()) {
            return {false, "Leibniz identity violated", 0};
        }
        // Well-definedness: the value only depends on the class of the input.
        if (leibniz_apply(d, alg.reduce(pa), alg) != leibniz_apply(d, pa, alg)) {
            return {false, "Leibniz extension not well defined on classes", 0};
        }
    }

    // Suite 2: consecutive cochain maps compose to zero; 201 matrix checks.
    for (int i = 0; i < 67; ++i) {
        const SklyaninParams& p = (i % 2 == 0) ? anti : diag;
        QuadraticAlgebraModel alg(p, 4);
        DifferentialSpec d = random_valid_d(p);
        CochainMatrices ch = cochain_matrices(alg, d, 3);
        for (std::size_t k = 0; k + 1 < ch.maps.size(); ++k) {
            if (!(ch.maps[k + 1] * ch.maps[k]).is_zero()) {
                return {false, "d∘d != 0 on cochain matrices", 0};
            }
        }
    }

    // Suite 3: normal form respects multiplication; 200 random triples.
    const CaseTag all[5] = {CaseTag::TwoNonzeroWithC, CaseTag::AllNonzero,
                            CaseTag::CZeroDistinctSquares, CaseTag::CZeroAntiDiagonal,
                            CaseTag::CZeroDiagonal};
    for (int i = 0; i < 200; ++i) {
        SklyaninParams p = sample_stratum(src, all[i % 5]);
        QuadraticAlgebraModel alg(p, 4);
        NcPoly a = random_poly(1 + src.bounded(2));
        NcPoly b = random_poly(1 + src.bounded(2));
        if (alg.reduce(mul_poly(a, b)) !=
            alg.reduce(mul_poly(alg.reduce(a), alg.reduce(b)))) {
            return {false, "normal form incompatible with multiplication at " + p.str(), 0};
        }
    }

    // Suite 4: classify is invariant under projective rescaling; 200 pairs.
    for (int i = 0; i < 200; ++i) {
        SklyaninParams p = sample_stratum(src, all[i % 5]);
        Rational t = src.small_nonzero_rational();
        auto scaled = validate_quiet(t * p.a(), t * p.b(), t * p.c());
        if (!scaled) {
            return {false, "rescaled point rejected", 0};
        }
        Json lhs = json_classification(classify(p));
        Json rhs = json_classification(classify(*scaled));
        if (lhs.dump() != rhs.dump()) {
            return {false, "classification changed under rescaling at " + p.str(), 0};
        }
    }
    return {true, "four suites of >= 200 exact property checks", 0};
}

// Truncated cohomology goldens.
Outcome criterion9() {
    const auto generic = *validate_quiet(Rational(1), Rational(2), Rational(3));
    QuadraticAlgebraModel alg_g(generic, 4);
    CohomologyReport zero = truncated_cohomology(alg_g, DifferentialSpec::zero(), 3);
    if (zero.dims != std::vector<std::size_t>{1, 3, 6, 10}) {
        return {false, "zero differential dims off", 0};
    }
    const auto anti = *validate_quiet(Rational(1), Rational(-1), Rational(0));
    QuadraticAlgebraModel alg_a(anti, 5);
    DifferentialSpec prime = DifferentialSpec::from_values(
        NcPoly(Rational(1), Word::parse("xx")), NcPoly(Rational(1), Word::parse("yx")),
        NcPoly(Rational(1), Word::parse("xz")));
    CohomologyReport h = truncated_cohomology(alg_a, prime, 4);
    if (h.dims != std::vector<std::size_t>{1, 0, 3, 0, 5}) {
        return {false, "polynomial DG dims off", 0};
    }
    return {true, "dims (1,3,6,10) and (1,0,3,0,5) reproduced", 0};
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        std::function<Outcome()> body;
        double budget;  // seconds; 0 = untimed
    };
    const Entry entries[] = {
        {1, "zero-only classification with certificates", criterion1, 60.0},
        {2, "anti-diagonal 3-parameter family", criterion2, 0},
        {3, "diagonal 9-parameter family", criterion3, 0},
        {4, "graded dimensions 1,3,6,10,15", criterion4, 0},
        {5, "Calabi-Yau fixtures", criterion5, 0},
        {6, "fast path vs oracle", criterion6, 30.0},
        {7, "isomorphism witness round-trip", criterion7, 0},
        {8, "property suites", criterion8, 0},
        {9, "cohomology goldens", criterion9, 0},
    };
    for (const Entry& e : entries) {
        Outcome o = timed(e.body);
        if (e.budget > 0 && o.seconds > e.budget) {
            o.pass = false;
            o.detail += " (over time budget)";
        }
        report(e.id, e.label, o);
    }
    return g_all_pass ? 0 : 1;
}
