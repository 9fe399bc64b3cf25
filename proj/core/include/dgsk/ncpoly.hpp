#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgsk/scalars.hpp"

namespace dgsk {

/// Number of generators of the free algebra (x, y, z).
inline constexpr int kGenerators = 3;

inline char generator_name(int g) { return g == 0 ? 'x' : (g == 1 ? 'y' : 'z'); }

/// 3^degree: how many words the free algebra has in one degree.
inline std::size_t word_count(std::size_t degree) {
    std::size_t n = 1;
    while (degree-- > 0) {
        n *= kGenerators;
    }
    return n;
}

/**
 * Word: a monomial in the free algebra on x, y, z, stored as generator
 * indices 0, 1, 2. The empty word is the unit. Words of equal degree compare
 * lexicographically with x < y < z, which matches their base-3 rank; the
 * global order is degree-first (deglex).
 */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);

    /// Parse "xxy"; "" and "1" both denote the unit.
    static Word parse(const std::string& text);

    static Word from_rank(std::size_t degree, std::size_t rank);

    std::size_t degree() const { return letters_.size(); }
    const std::vector<int>& letters() const { return letters_; }
    int letter(std::size_t i) const { return letters_[i]; }

    /// Base-3 rank of the word among all words of its degree.
    std::size_t rank() const;

    Word concat(const Word& o) const;
    Word subword(std::size_t pos, std::size_t len) const;

    std::string str() const;  // "1" for the unit

    auto operator<=>(const Word& o) const {
        if (auto c = letters_.size() <=> o.letters_.size(); c != 0) {
            return c;
        }
        return letters_ <=> o.letters_;
    }
    bool operator==(const Word& o) const = default;

private:
    std::vector<int> letters_;
};

inline Word word_x() { return Word({0}); }
inline Word word_y() { return Word({1}); }
inline Word word_z() { return Word({2}); }

/**
 * NcPoly: finite rational linear combination of words. Zero coefficients are
 * never stored, so equality of the term maps is equality of polynomials.
 */
class NcPoly {
public:
    NcPoly() = default;
    NcPoly(const Rational& c, const Word& w) { add_term(w, c); }

    static NcPoly zero() { return NcPoly(); }
    static NcPoly one() { return NcPoly(Rational(1), Word()); }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Homogeneous degree if every word has the same length; nullopt for 0 or
    /// mixed degrees.
    std::optional<std::size_t> homogeneous_degree() const;
    std::size_t max_degree() const;

    void add_term(const Word& w, const Rational& c);
    Rational coeff(const Word& w) const;

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const Rational& c);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
    friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }

    bool operator==(const NcPoly& o) const = default;

    /// Degree-d homogeneous component.
    NcPoly component(std::size_t degree) const;

    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

/// Free-algebra product (words concatenate); exact and bilinear.
NcPoly mul_poly(const NcPoly& p, const NcPoly& q);

}  // namespace dgsk
