#include "dgsk/json_io.hpp"

#include <stdexcept>
#include <string>

namespace dgsk {

namespace {

void expect(bool cond, const char* what) {
    if (!cond) {
        throw std::invalid_argument(std::string("malformed JSON: ") + what);
    }
}

Matrix mat3_to_matrix(const Mat3& m) {
    Matrix out(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.at(i, j) = m[i][j];
        }
    }
    return out;
}

Mat3 matrix_to_mat3(const Matrix& m) {
    expect(m.rows() == 3 && m.cols() == 3, "expected a 3x3 matrix");
    Mat3 out{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out[i][j] = m.at(i, j);
        }
    }
    return out;
}

template <typename Enum>
Enum enum_from_name(const Json& j, const char* (*name)(Enum), std::initializer_list<Enum> all,
                    const char* what) {
    expect(j.is_string(), what);
    const std::string s = j.get<std::string>();
    for (Enum e : all) {
        if (s == name(e)) {
            return e;
        }
    }
    throw std::invalid_argument(std::string("malformed JSON: unknown ") + what + " '" + s + "'");
}

}  // namespace

Json json_rational(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Rational(Integer(j.get<std::int64_t>()));
    }
    expect(j.is_string(), "rational must be a string like \"2\" or \"-1/3\", or an integer");
    return Rational::parse(j.get<std::string>());
}

Json json_radical(const RadicalScalar& s) {
    if (s.is_rational()) {
        return json_rational(s.as_rational());
    }
    Json j;
    j["base"] = json_rational(s.base());
    j["coeff"] = json_rational(s.coeff());
    j["radicand"] = json_rational(s.radicand());
    return j;
}

RadicalScalar radical_from_json(const Json& j) {
    if (j.is_string()) {
        return RadicalScalar(rational_from_json(j));
    }
    expect(j.is_object() && j.contains("base") && j.contains("coeff") && j.contains("radicand"),
           "radical must be a string or a base/coeff/radicand object");
    return RadicalScalar(rational_from_json(j.at("base")), rational_from_json(j.at("coeff")),
                         rational_from_json(j.at("radicand")));
}

Json json_vec(const Vec& v) {
    Json j = Json::array();
    for (const Rational& r : v) {
        j.push_back(json_rational(r));
    }
    return j;
}

Vec vec_from_json(const Json& j) {
    expect(j.is_array(), "vector must be an array");
    Vec v;
    v.reserve(j.size());
    for (const Json& e : j) {
        v.push_back(rational_from_json(e));
    }
    return v;
}

Json json_matrix(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        j.push_back(json_vec(m.row(i)));
    }
    return j;
}

Matrix matrix_from_json(const Json& j) {
    expect(j.is_array(), "matrix must be an array of rows");
    std::vector<Vec> rows;
    rows.reserve(j.size());
    for (const Json& r : j) {
        rows.push_back(vec_from_json(r));
        expect(rows.back().size() == rows.front().size(), "ragged matrix rows");
    }
    return Matrix(std::move(rows));
}

Json json_params(const SklyaninParams& p) {
    Json j;
    j["a"] = json_rational(p.a());
    j["b"] = json_rational(p.b());
    j["c"] = json_rational(p.c());
    return j;
}

Json json_validation(const ParamValidation& v) {
    Json j;
    j["ok"] = v.ok();
    if (v.ok()) {
        j["params"] = json_params(*v.params);
        j["case"] = case_tag_name(case_of(*v.params));
    } else {
        j["error"] = param_error_message(*v.error);
    }
    return j;
}

Json json_spec(const DifferentialSpec& d) {
    Json j;
    j["Mx"] = json_matrix(mat3_to_matrix(d.Mx));
    j["My"] = json_matrix(mat3_to_matrix(d.My));
    j["Mz"] = json_matrix(mat3_to_matrix(d.Mz));
    return j;
}

DifferentialSpec spec_from_json(const Json& j) {
    if (j.is_array()) {
        // A bare 3x3 array is read as the diagonal form.
        return DifferentialSpec::from_diag(matrix_to_mat3(matrix_from_json(j)));
    }
    expect(j.is_object(), "differential must be an object");
    if (j.contains("diag")) {
        return DifferentialSpec::from_diag(matrix_to_mat3(matrix_from_json(j.at("diag"))));
    }
    expect(j.contains("Mx") && j.contains("My") && j.contains("Mz"),
           "differential needs Mx, My, Mz (or diag)");
    DifferentialSpec d;
    d.Mx = matrix_to_mat3(matrix_from_json(j.at("Mx")));
    d.My = matrix_to_mat3(matrix_from_json(j.at("My")));
    d.Mz = matrix_to_mat3(matrix_from_json(j.at("Mz")));
    return d;
}

Json json_validity(const ValidityReport& r) {
    Json j;
    j["valid"] = r.valid;
    Json rel = Json::array(), sq = Json::array();
    for (int i = 0; i < 3; ++i) {
        rel.push_back(json_vec(r.relation_residuals[i]));
        sq.push_back(json_vec(r.square_residuals[i]));
    }
    j["relation_residuals"] = std::move(rel);
    j["square_residuals"] = std::move(sq);
    return j;
}

Json json_monomial(const MonomialMatrix& c) {
    Json j;
    Json sigma = Json::array();
    Json scales = Json::array();
    for (int i = 0; i < 3; ++i) {
        sigma.push_back(c.sigma[i] + 1);
        scales.push_back(json_radical(c.scales[i]));
    }
    j["sigma"] = std::move(sigma);
    j["scales"] = std::move(scales);
    return j;
}

MonomialMatrix monomial_from_json(const Json& j) {
    expect(j.is_object() && j.contains("sigma") && j.contains("scales"),
           "monomial matrix needs sigma and scales");
    const Json& sigma = j.at("sigma");
    const Json& scales = j.at("scales");
    expect(sigma.is_array() && sigma.size() == 3 && scales.is_array() && scales.size() == 3,
           "monomial matrix fields must have three entries");
    MonomialMatrix c;
    std::array<bool, 3> seen{};
    for (int i = 0; i < 3; ++i) {
        expect(sigma[i].is_number_integer(), "sigma entries must be integers");
        const int v = sigma[i].get<int>() - 1;
        expect(v >= 0 && v < 3 && !seen[v], "sigma must be a permutation of {1,2,3}");
        seen[v] = true;
        c.sigma[i] = v;
        c.scales[i] = radical_from_json(scales[i]);
        expect(!c.scales[i].is_zero(), "monomial scales must be nonzero");
    }
    return c;
}

Json json_qpl(const QplDecision& d) {
    Json j;
    j["equivalent"] = d.equivalent;
    j["closure_only"] = d.closure_only;
    Json sigma = Json::array();
    for (int i = 0; i < 3; ++i) {
        sigma.push_back(d.sigma[i] + 1);
    }
    j["sigma"] = std::move(sigma);
    j["witness"] = d.witness ? json_monomial(*d.witness) : Json(nullptr);
    Json kernel = Json::array();
    for (const auto& row : d.kernel_checked) {
        Json jr = Json::array();
        for (const Integer& z : row) {
            jr.push_back(z.get_str());
        }
        kernel.push_back(std::move(jr));
    }
    j["kernel_checked"] = std::move(kernel);
    return j;
}

QplDecision qpl_from_json(const Json& j) {
    expect(j.is_object() && j.contains("equivalent"), "qpl decision needs 'equivalent'");
    QplDecision d;
    d.equivalent = j.at("equivalent").get<bool>();
    d.closure_only = j.value("closure_only", false);
    if (j.contains("sigma")) {
        const Json& sigma = j.at("sigma");
        expect(sigma.is_array() && sigma.size() == 3, "sigma must have three entries");
        for (int i = 0; i < 3; ++i) {
            d.sigma[i] = sigma[i].get<int>() - 1;
        }
    }
    if (j.contains("witness") && !j.at("witness").is_null()) {
        d.witness = monomial_from_json(j.at("witness"));
    }
    if (j.contains("kernel_checked")) {
        for (const Json& row : j.at("kernel_checked")) {
            std::vector<Integer> r;
            for (const Json& z : row) {
                r.emplace_back(z.get<std::string>());
            }
            d.kernel_checked.push_back(std::move(r));
        }
    }
    return d;
}

Json json_noncy_witness(const NoncyWitness& w) {
    Json j;
    j["family_matrix"] = json_matrix(w.family_matrix);
    j["transform"] = json_monomial(w.transform);
    j["l"] = Json::array({json_rational(w.l[0]), json_rational(w.l[1])});
    j["m"] = Json::array(
        {json_rational(w.m[0]), json_rational(w.m[1]), json_rational(w.m[2])});
    return j;
}

NoncyWitness noncy_witness_from_json(const Json& j) {
    expect(j.is_object() && j.contains("family_matrix") && j.contains("transform") &&
               j.contains("l") && j.contains("m"),
           "membership witness needs family_matrix, transform, l, m");
    NoncyWitness w;
    w.family_matrix = matrix_from_json(j.at("family_matrix"));
    w.transform = monomial_from_json(j.at("transform"));
    const Json& l = j.at("l");
    const Json& m = j.at("m");
    expect(l.is_array() && l.size() == 2 && m.is_array() && m.size() == 3,
           "witness parameter lists must have sizes 2 and 3");
    for (int i = 0; i < 2; ++i) {
        w.l[i] = rational_from_json(l[i]);
    }
    for (int i = 0; i < 3; ++i) {
        w.m[i] = rational_from_json(m[i]);
    }
    return w;
}

Json json_noncy(const NoncyResult& r) {
    Json j;
    j["member"] = r.member;
    j["witness"] = r.witness ? json_noncy_witness(*r.witness) : Json(nullptr);
    j["w"] = r.w ? json_vec(*r.w) : Json(nullptr);
    return j;
}

NoncyResult noncy_from_json(const Json& j) {
    expect(j.is_object() && j.contains("member"), "membership result needs 'member'");
    NoncyResult r;
    r.member = j.at("member").get<bool>();
    if (j.contains("witness") && !j.at("witness").is_null()) {
        r.witness = noncy_witness_from_json(j.at("witness"));
    }
    if (j.contains("w") && !j.at("w").is_null()) {
        r.w = vec_from_json(j.at("w"));
    }
    return r;
}

Json json_cy(const CyVerdict& v) {
    Json j;
    j["status"] = cy_status_name(v.status);
    j["justification"] = cy_justification_name(v.justification);
    j["witness"] = v.witness ? json_noncy_witness(*v.witness) : Json(nullptr);
    j["diagonal_matrix"] = v.diagonal_matrix ? json_matrix(*v.diagonal_matrix) : Json(nullptr);
    return j;
}

CyVerdict cy_from_json(const Json& j) {
    expect(j.is_object() && j.contains("status") && j.contains("justification"),
           "verdict needs status and justification");
    CyVerdict v;
    v.status = enum_from_name<CyStatus>(
        j.at("status"), cy_status_name,
        {CyStatus::CalabiYau, CyStatus::NotCalabiYau, CyStatus::NotApplicable}, "status");
    v.justification = enum_from_name<CyJustification>(
        j.at("justification"), cy_justification_name,
        {CyJustification::ZeroDifferentialLemma, CyJustification::PolynomialCase,
         CyJustification::TheoremB},
        "justification");
    if (j.contains("witness") && !j.at("witness").is_null()) {
        v.witness = noncy_witness_from_json(j.at("witness"));
    }
    if (j.contains("diagonal_matrix") && !j.at("diagonal_matrix").is_null()) {
        v.diagonal_matrix = matrix_from_json(j.at("diagonal_matrix"));
    }
    return v;
}

namespace {

Json json_vec_list(const std::vector<Vec>& vs) {
    Json j = Json::array();
    for (const Vec& v : vs) {
        j.push_back(json_vec(v));
    }
    return j;
}

std::vector<Vec> vec_list_from_json(const Json& j) {
    expect(j.is_array(), "expected an array of vectors");
    std::vector<Vec> out;
    for (const Json& v : j) {
        out.push_back(vec_from_json(v));
    }
    return out;
}

}  // namespace

Json json_certificate(const SquareCertificate& c) {
    Json rounds = Json::array();
    for (const auto& round : c.rounds) {
        Json jr;
        jr["subspace"] = json_vec_list(round.subspace);
        Json certified = Json::array();
        for (const auto& f : round.certified) {
            Json jf;
            jf["functional"] = json_vec(f.functional);
            jf["combination"] = json_vec(f.combination);
            certified.push_back(std::move(jf));
        }
        jr["certified"] = std::move(certified);
        rounds.push_back(std::move(jr));
    }
    Json j;
    j["rounds"] = std::move(rounds);
    return j;
}

SquareCertificate certificate_from_json(const Json& j) {
    expect(j.is_object() && j.contains("rounds"), "certificate needs rounds");
    SquareCertificate c;
    for (const Json& jr : j.at("rounds")) {
        SquareCertificate::Round round;
        round.subspace = vec_list_from_json(jr.at("subspace"));
        for (const Json& jf : jr.at("certified")) {
            round.certified.push_back(
                {vec_from_json(jf.at("functional")), vec_from_json(jf.at("combination"))});
        }
        c.rounds.push_back(std::move(round));
    }
    return c;
}

Json json_certificate_failure(const CertificateFailure& f) {
    Json j;
    j["unresolved_subspace"] = json_vec_list(f.unresolved_subspace);
    j["reason"] = f.reason;
    return j;
}

CertificateFailure certificate_failure_from_json(const Json& j) {
    expect(j.is_object() && j.contains("reason"), "certificate failure needs a reason");
    CertificateFailure f;
    f.unresolved_subspace = vec_list_from_json(j.at("unresolved_subspace"));
    f.reason = j.at("reason").get<std::string>();
    return f;
}

Json json_classification(const DgClassification& c) {
    Json j;
    j["params"] = json_params(c.params);
    j["case"] = case_tag_name(c.tag);
    j["kind"] = classification_kind_name(c.kind);
    j["solution_dim"] = c.solution_dim;
    j["linear_dim"] = c.linear_dim;
    j["quadratics_vanish_on_linear_space"] = c.quadratics_vanish_on_L;
    Json basis = Json::array();
    for (const DifferentialSpec& d : c.family_basis) {
        basis.push_back(json_spec(d));
    }
    j["family_basis"] = std::move(basis);
    j["certificate"] = c.certificate ? json_certificate(*c.certificate) : Json(nullptr);
    j["certificate_failure"] =
        c.certificate_failure ? json_certificate_failure(*c.certificate_failure) : Json(nullptr);
    j["family_residuals_ok"] = c.family_residuals_ok;
    return j;
}

DgClassification classification_from_json(const Json& j) {
    expect(j.is_object() && j.contains("params") && j.contains("case") && j.contains("kind"),
           "classification needs params, case, kind");
    const Json& jp = j.at("params");
    ParamValidation v = validate(rational_from_json(jp.at("a")), rational_from_json(jp.at("b")),
                                 rational_from_json(jp.at("c")));
    if (!v.ok()) {
        throw std::invalid_argument("classification JSON carries forbidden parameters");
    }
    const auto tag = case_tag_from_name(j.at("case").get<std::string>());
    expect(tag.has_value(), "unknown case tag");
    DgClassification c{*v.params,
                       *tag,
                       enum_from_name<ClassificationKind>(
                           j.at("kind"), classification_kind_name,
                           {ClassificationKind::ZeroOnly, ClassificationKind::AlphaBetaGammaFamily,
                            ClassificationKind::SymmetricMatrixFamily,
                            ClassificationKind::Undecided},
                           "kind"),
                       j.at("solution_dim").get<std::size_t>(),
                       j.at("linear_dim").get<std::size_t>(),
                       j.at("quadratics_vanish_on_linear_space").get<bool>(),
                       {},
                       std::nullopt,
                       std::nullopt,
                       j.at("family_residuals_ok").get<bool>()};
    for (const Json& jd : j.at("family_basis")) {
        c.family_basis.push_back(spec_from_json(jd));
    }
    if (j.contains("certificate") && !j.at("certificate").is_null()) {
        c.certificate = certificate_from_json(j.at("certificate"));
    }
    if (j.contains("certificate_failure") && !j.at("certificate_failure").is_null()) {
        c.certificate_failure = certificate_failure_from_json(j.at("certificate_failure"));
    }
    return c;
}

Json json_cohomology(const CohomologyReport& r, const QuadraticAlgebraModel& alg) {
    Json j;
    j["dims"] = r.dims;
    Json reps = Json::array();
    Json words = Json::array();
    for (std::size_t deg = 0; deg < r.representatives.size(); ++deg) {
        reps.push_back(json_vec_list(r.representatives[deg]));
        Json w = Json::array();
        for (const Vec& v : r.representatives[deg]) {
            w.push_back(alg.lift(v, deg).str());
        }
        words.push_back(std::move(w));
    }
    j["representatives"] = std::move(reps);
    j["representative_words"] = std::move(words);
    return j;
}

CohomologyReport cohomology_from_json(const Json& j) {
    expect(j.is_object() && j.contains("dims") && j.contains("representatives"),
           "cohomology report needs dims and representatives");
    CohomologyReport r;
    for (const Json& d : j.at("dims")) {
        r.dims.push_back(d.get<std::size_t>());
    }
    for (const Json& reps : j.at("representatives")) {
        r.representatives.push_back(vec_list_from_json(reps));
    }
    return r;
}

Json json_sweep(const SweepReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["sample_count"] = r.sample_count;
    j["stratum"] = r.stratum ? Json(case_tag_name(*r.stratum)) : Json(nullptr);
    Json records = Json::array();
    for (const SweepRecord& rec : r.records) {
        Json jr;
        jr["index"] = rec.index;
        jr["stratum"] = case_tag_name(rec.stratum);
        jr["result"] = json_classification(rec.result);
        records.push_back(std::move(jr));
    }
    j["records"] = std::move(records);
    Json counts;
    for (std::size_t t = 0; t < r.case_counts.size(); ++t) {
        counts[case_tag_name(static_cast<CaseTag>(t))] = r.case_counts[t];
    }
    j["case_counts"] = std::move(counts);
    j["anomalies"] = r.anomalies;
    return j;
}

Json versioned(Json payload) {
    payload["schema"] = 1;
    return payload;
}

}  // namespace dgsk
