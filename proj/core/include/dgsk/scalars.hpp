#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace dgsk {

using Integer = mpz_class;

/**
 * Rational: arbitrary-precision fraction kept in canonical form
 * (denominator > 0, gcd(|num|, den) = 1). All arithmetic is exact;
 * nothing in the core ever touches floating point.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Canonical fraction num/den. Throws std::domain_error when den = 0.
    Rational(const Integer& num, const Integer& den);

    /// Parse "p/q" or "p" (optional sign, arbitrary precision).
    static Rational parse(const std::string& text);

    const Integer numerator() const { return v_.get_num(); }
    const Integer denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// Serialized form: "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Spec entry point: canonical reduced fraction with positive denominator.
Rational normalize(const Integer& num, const Integer& den);

/// Exact square root when r = (p/q)^2; the non-negative root is returned.
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact n-th root when r is a perfect n-th power of a rational.
/// For even n the non-negative root is returned; negative r has no even root.
std::optional<Rational> rational_nth_root(const Rational& r, unsigned long n);

/**
 * RadicalScalar: value base + coeff * sqrt(radicand) in a single quadratic
 * extension of the rationals. Canonical form enforces
 *   - coeff = 0  =>  radicand = 0 (plain rational), and
 *   - radicand never a rational square when coeff != 0
 * so equality is literal field equality. Arithmetic between two genuinely
 * radical values requires compatible radicands (ratio a rational square);
 * products of two *pure* radicals are also representable (radicands multiply).
 * Anything else throws mixed_radicand_error — by design this never happens
 * in the witness arithmetic this type exists for.
 */
class RadicalScalar {
public:
    struct mixed_radicand_error : std::domain_error {
        mixed_radicand_error() : std::domain_error("mixed radicands are not representable") {}
    };

    RadicalScalar() = default;
    RadicalScalar(Rational base) : base_(std::move(base)) {}
    RadicalScalar(Rational base, Rational coeff, Rational radicand);

    const Rational& base() const { return base_; }
    const Rational& coeff() const { return coeff_; }
    const Rational& radicand() const { return radicand_; }

    bool is_rational() const { return coeff_.is_zero(); }
    bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }

    /// The rational value; throws std::domain_error when a radical survives.
    Rational as_rational() const;

    std::string str() const;

    RadicalScalar operator-() const;
    RadicalScalar operator+(const RadicalScalar& o) const;
    RadicalScalar operator-(const RadicalScalar& o) const;
    RadicalScalar operator*(const RadicalScalar& o) const;
    RadicalScalar operator/(const RadicalScalar& o) const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    RadicalScalar inverse() const;

    /// x^k for any integer k (negative powers via inverse).
    RadicalScalar pow(long k) const;

    bool operator==(const RadicalScalar& o) const;
    bool operator!=(const RadicalScalar& o) const { return !(*this == o); }

    friend std::ostream& operator<<(std::ostream& os, const RadicalScalar& s);

private:
    Rational base_;
    Rational coeff_;
    Rational radicand_;

    // Rewrites o's radical part over this->radicand_ when the ratio of
    // radicands is a rational square; nullopt when the fields differ.
    std::optional<Rational> aligned_coeff(const RadicalScalar& o) const;
};

/// Spec entry point: exact square root of a rational, either as a rational or
/// as the formal radical 0 + 1*sqrt(r) (negative r stays formal; consumers
/// decide validity).
std::variant<Rational, RadicalScalar> try_square_root(const Rational& r);

}  // namespace dgsk
