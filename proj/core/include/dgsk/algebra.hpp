#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "dgsk/linalg.hpp"
#include "dgsk/ncpoly.hpp"
#include "dgsk/params.hpp"

namespace dgsk {

/// Basis and reduction data for one graded piece of the quotient algebra.
struct DegreeBasis {
    std::vector<Word> basis;  // ascending deglex order
    Matrix reducer;           // basis.size() x 3^d: word coordinates -> basis coordinates
};

/**
 * QuadraticAlgebraModel: the quotient of the free algebra on x, y, z by the
 * three quadratic relations of a parameter point, with eagerly cached bases
 * and reduction matrices per degree up to a cap.
 *
 * Degree-d normal forms come from exact elimination: the relation subspace of
 * degree d is spanned by the products w * f_i * w' over all splittings
 * |w| + |w'| = d - 2; reduced row echelon form with pivots preferred at
 * deglex-greatest words leaves the lex-least complement as the monomial
 * basis. No term rewriting and no completion is involved — for the degrees
 * handled here plain linear algebra is both simpler and certifiably exact.
 *
 * Immutable after construction; all queries are const and safe to share.
 */
class QuadraticAlgebraModel {
public:
    static constexpr std::size_t kDefaultDegreeCap = 4;

    explicit QuadraticAlgebraModel(const SklyaninParams& params,
                                   std::size_t degree_cap = kDefaultDegreeCap);

    const SklyaninParams& params() const { return params_; }
    const std::array<NcPoly, 3>& rels() const { return relations_; }
    std::size_t degree_cap() const { return cap_; }

    /// Basis words and reducer for one degree (degree <= cap).
    const DegreeBasis& degree_basis(std::size_t degree) const;

    std::size_t dim(std::size_t degree) const { return degree_basis(degree).basis.size(); }

    /// Coordinates of a homogeneous polynomial in the degree basis.
    Vec coords(const NcPoly& p, std::size_t degree) const;

    /// Basis-coordinate image of every homogeneous component of p.
    std::map<std::size_t, Vec> normal_form(const NcPoly& p) const;

    /// Canonical representative: the basis-word expansion of normal_form(p).
    NcPoly reduce(const NcPoly& p) const;

    /// Basis-coordinate vector back to its canonical representative.
    NcPoly lift(const Vec& coords, std::size_t degree) const;

private:
    SklyaninParams params_;
    std::array<NcPoly, 3> relations_;
    std::size_t cap_;
    std::vector<DegreeBasis> bases_;  // index = degree

    DegreeBasis build_degree(std::size_t degree) const;
};

/// Spec-named free-function forms.
inline const DegreeBasis& degree_basis(const QuadraticAlgebraModel& alg, std::size_t degree) {
    return alg.degree_basis(degree);
}
inline std::map<std::size_t, Vec> normal_form(const NcPoly& p, const QuadraticAlgebraModel& alg) {
    return alg.normal_form(p);
}

}  // namespace dgsk
