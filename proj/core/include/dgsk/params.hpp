#pragma once

#include <array>
#include <optional>
#include <string>

#include "dgsk/ncpoly.hpp"
#include "dgsk/scalars.hpp"

namespace dgsk {

/**
 * Refined case partition of the valid parameter space, driven by the shape of
 * the differential classification:
 *   - TwoNonzeroWithC:      c != 0 and exactly one of a, b zero
 *   - AllNonzero:           a, b, c all nonzero
 *   - CZeroDistinctSquares: c = 0 and a^2 != b^2
 *   - CZeroAntiDiagonal:    c = 0 and a = -b
 *   - CZeroDiagonal:        c = 0 and a = b
 * Exactly one tag applies to every valid point (c = 0 forces a, b nonzero,
 * since (1,0,0) and (0,1,0) are excluded).
 */
enum class CaseTag {
    TwoNonzeroWithC,
    AllNonzero,
    CZeroDistinctSquares,
    CZeroAntiDiagonal,
    CZeroDiagonal,
};

const char* case_tag_name(CaseTag t);
std::optional<CaseTag> case_tag_from_name(const std::string& name);

/// Why a parameter triple was rejected.
enum class ParamError {
    AllZero,          // (0,0,0) is not a projective point
    CoordinatePoint,  // (1,0,0), (0,1,0), (0,0,1)
    EqualCubes,       // a^3 = b^3 = c^3
};

const char* param_error_message(ParamError e);

/**
 * A valid parameter triple, stored projectively normalized: the first nonzero
 * coordinate is scaled to 1. Construction only through validate().
 */
class SklyaninParams {
public:
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    std::string str() const;

    bool operator==(const SklyaninParams& o) const = default;

private:
    friend struct ParamValidation;
    friend std::optional<SklyaninParams> validate_quiet(const Rational&, const Rational&,
                                                        const Rational&);
    SklyaninParams(Rational a, Rational b, Rational c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    Rational a_, b_, c_;
};

struct ParamValidation {
    std::optional<SklyaninParams> params;  // set iff accepted
    std::optional<ParamError> error;       // set iff rejected

    bool ok() const { return params.has_value(); }

    static ParamValidation accept(Rational a, Rational b, Rational c) {
        ParamValidation v;
        v.params = SklyaninParams(std::move(a), std::move(b), std::move(c));
        return v;
    }
    static ParamValidation reject(ParamError e) {
        ParamValidation v;
        v.error = e;
        return v;
    }
};

/**
 * Screens (a,b,c) against the forbidden set: the three coordinate points and
 * every point with a^3 = b^3 = c^3 (over the rationals that means a = b = c).
 * Accepted points come back projectively normalized. Scale-invariant.
 */
ParamValidation validate(const Rational& a, const Rational& b, const Rational& c);

/// validate() collapsed to an optional, for callers that only need success.
std::optional<SklyaninParams> validate_quiet(const Rational& a, const Rational& b,
                                             const Rational& c);

/// The defining quadratic relations
///   f1 = a yz + b zy + c x^2,  f2 = a zx + b xz + c y^2,  f3 = a xy + b yx + c z^2.
std::array<NcPoly, 3> relations(const SklyaninParams& p);

/// Deterministic tag of the refined case partition.
CaseTag case_of(const SklyaninParams& p);

}  // namespace dgsk
