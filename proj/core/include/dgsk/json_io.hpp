#pragma once

#include <cstddef>

#include "json.hpp"

#include "dgsk/calabi_yau.hpp"
#include "dgsk/classifier.hpp"
#include "dgsk/cohomology.hpp"
#include "dgsk/differential.hpp"
#include "dgsk/linalg.hpp"
#include "dgsk/params.hpp"
#include "dgsk/scalars.hpp"
#include "dgsk/sweep.hpp"

namespace dgsk {

/// All object keys serialize through std::map, so dumps are byte-stable;
/// every scalar is carried as an exact string ("p" or "p/q"), never a float.
using Json = nlohmann::json;

Json json_rational(const Rational& r);
Rational rational_from_json(const Json& j);

/// Rational values collapse to their plain string form; otherwise an object
/// with base, coeff and radicand — lossless in both directions.
Json json_radical(const RadicalScalar& s);
RadicalScalar radical_from_json(const Json& j);

Json json_vec(const Vec& v);
Vec vec_from_json(const Json& j);

Json json_matrix(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json json_params(const SklyaninParams& p);
Json json_validation(const ParamValidation& v);

/// Emits the three generator matrices; parsing also accepts {"diag": M} or a
/// bare 3x3 array for the ∂(x,y,z)ᵀ = M·(x²,y²,z²)ᵀ form.
Json json_spec(const DifferentialSpec& d);
DifferentialSpec spec_from_json(const Json& j);

Json json_validity(const ValidityReport& r);

/// sigma is emitted 1-based (a permutation of {1,2,3}).
Json json_monomial(const MonomialMatrix& c);
MonomialMatrix monomial_from_json(const Json& j);

Json json_qpl(const QplDecision& d);
QplDecision qpl_from_json(const Json& j);

Json json_noncy_witness(const NoncyWitness& w);
NoncyWitness noncy_witness_from_json(const Json& j);
Json json_noncy(const NoncyResult& r);
NoncyResult noncy_from_json(const Json& j);

Json json_cy(const CyVerdict& v);
CyVerdict cy_from_json(const Json& j);

Json json_certificate(const SquareCertificate& c);
SquareCertificate certificate_from_json(const Json& j);
Json json_certificate_failure(const CertificateFailure& f);
CertificateFailure certificate_failure_from_json(const Json& j);

Json json_classification(const DgClassification& c);
DgClassification classification_from_json(const Json& j);

/// Includes readable word expansions of the representatives, lifted through
/// the model's bases.
Json json_cohomology(const CohomologyReport& r, const QuadraticAlgebraModel& alg);
CohomologyReport cohomology_from_json(const Json& j);

Json json_sweep(const SweepReport& r);

/// Wraps a payload with the versioned envelope used on every CLI output.
Json versioned(Json payload);

}  // namespace dgsk
