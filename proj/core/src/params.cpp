#include "dgsk/params.hpp"

#include <sstream>
#include <stdexcept>

namespace dgsk {

const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::TwoNonzeroWithC: return "TwoNonzeroWithC";
        case CaseTag::AllNonzero: return "AllNonzero";
        case CaseTag::CZeroDistinctSquares: return "CZeroDistinctSquares";
        case CaseTag::CZeroAntiDiagonal: return "CZeroAntiDiagonal";
        case CaseTag::CZeroDiagonal: return "CZeroDiagonal";
    }
    return "?";
}

std::optional<CaseTag> case_tag_from_name(const std::string& name) {
    for (CaseTag t : {CaseTag::TwoNonzeroWithC, CaseTag::AllNonzero,
                      CaseTag::CZeroDistinctSquares, CaseTag::CZeroAntiDiagonal,
                      CaseTag::CZeroDiagonal}) {
        if (name == case_tag_name(t)) {
            return t;
        }
    }
    return std::nullopt;
}

const char* param_error_message(ParamError e) {
    switch (e) {
        case ParamError::AllZero: return "all-zero";
        case ParamError::CoordinatePoint: return "coordinate-point";
        case ParamError::EqualCubes: return "equal-cubes";
    }
    return "?";
}

std::string SklyaninParams::str() const {
    std::ostringstream os;
    os << "(" << a_.str() << ", " << b_.str() << ", " << c_.str() << ")";
    return os.str();
}

ParamValidation validate(const Rational& a, const Rational& b, const Rational& c) {
    const int nonzero = !a.is_zero() + !b.is_zero() + !c.is_zero();
    if (nonzero == 0) {
        return ParamValidation::reject(ParamError::AllZero);
    }
    if (nonzero == 1) {
        return ParamValidation::reject(ParamError::CoordinatePoint);
    }
    const Rational a3 = a * a * a;
    const Rational b3 = b * b * b;
    const Rational c3 = c * c * c;
    if (a3 == b3 && b3 == c3) {
        return ParamValidation::reject(ParamError::EqualCubes);
    }
    // Projective normalization: divide by the first nonzero coordinate.
    const Rational& scale = !a.is_zero() ? a : (!b.is_zero() ? b : c);
    return ParamValidation::accept(a / scale, b / scale, c / scale);
}

std::optional<SklyaninParams> validate_quiet(const Rational& a, const Rational& b,
                                             const Rational& c) {
    return validate(a, b, c).params;
}

std::array<NcPoly, 3> relations(const SklyaninParams& p) {
    const Word x = word_x(), y = word_y(), z = word_z();
    NcPoly f1(p.a(), y.concat(z));
    f1.add_term(z.concat(y), p.b());
    f1.add_term(x.concat(x), p.c());
    NcPoly f2(p.a(), z.concat(x));
    f2.add_term(x.concat(z), p.b());
    f2.add_term(y.concat(y), p.c());
    NcPoly f3(p.a(), x.concat(y));
    f3.add_term(y.concat(x), p.b());
    f3.add_term(z.concat(z), p.c());
    return {f1, f2, f3};
}

CaseTag case_of(const SklyaninParams& p) {
    if (p.c().is_zero()) {
        // Validity already rules out a = 0 or b = 0 here.
        if (p.a() == -p.b()) {
            return CaseTag::CZeroAntiDiagonal;
        }
        if (p.a() == p.b()) {
            return CaseTag::CZeroDiagonal;
        }
        return CaseTag::CZeroDistinctSquares;
    }
    if (!p.a().is_zero() && !p.b().is_zero()) {
        return CaseTag::AllNonzero;
    }
    return CaseTag::TwoNonzeroWithC;
}

}  // namespace dgsk
