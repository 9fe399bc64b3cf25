#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "dgsk/linalg.hpp"
#include "dgsk/scalars.hpp"

namespace dgsk {

/**
 * SymMono: a monomial of degree <= 2 in abstract variables, stored as sorted
 * variable indices with -1 filling unused slots ({-1,-1} is the constant
 * monomial, {-1,i} linear, {i,j} quadratic with i <= j).
 */
struct SymMono {
    int a = -1;
    int b = -1;

    static SymMono unit() { return {}; }
    static SymMono var(int i) { return {-1, i}; }
    static SymMono pair(int i, int j) { return i <= j ? SymMono{i, j} : SymMono{j, i}; }

    int degree() const { return (a >= 0) + (b >= 0); }

    auto operator<=>(const SymMono&) const = default;
};

/**
 * SymPoly: rational polynomial of degree <= 2 in abstract variables (the
 * constraint unknowns). Supports exactly the operations constraint generation
 * needs: linear combination, product of linear factors, evaluation, and
 * linear substitution of the variables.
 */
class SymPoly {
public:
    SymPoly() = default;
    explicit SymPoly(const Rational& c) { add(SymMono::unit(), c); }

    static SymPoly variable(int i) {
        SymPoly p;
        p.add(SymMono::var(i), Rational(1));
        return p;
    }

    const std::map<SymMono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add(const SymMono& m, const Rational& c);

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    SymPoly& operator*=(const Rational& c);

    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
    friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }

    /// Product; throws when the result would exceed degree 2.
    SymPoly operator*(const SymPoly& o) const;

    bool operator==(const SymPoly& o) const = default;

    Rational evaluate(const Vec& values) const;

    /// Substitutes variable i by the linear polynomial images[i].
    SymPoly substitute(const std::vector<SymPoly>& images) const;

    /// Coefficient views for a polynomial known to be homogeneous linear /
    /// quadratic in `nvars` variables.
    Vec linear_coefficients(std::size_t nvars) const;
    Matrix quadratic_form(std::size_t nvars) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::map<SymMono, Rational> terms_;
};

}  // namespace dgsk
