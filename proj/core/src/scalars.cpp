#include "dgsk/scalars.hpp"

#include <ostream>
#include <sstream>

namespace dgsk {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text), Integer(1));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

namespace {

// Exact n-th root of a non-negative integer, when one exists.
std::optional<Integer> integer_nth_root(const Integer& v, unsigned long n) {
    Integer root;
    const int exact = mpz_root(root.get_mpz_t(), v.get_mpz_t(), n);
    if (exact == 0) {
        return std::nullopt;
    }
    return root;
}

}  // namespace

std::optional<Rational> rational_sqrt(const Rational& r) { return rational_nth_root(r, 2); }

std::optional<Rational> rational_nth_root(const Rational& r, unsigned long n) {
    if (n == 0) {
        throw std::invalid_argument("zeroth root");
    }
    if (n == 1) {
        return r;
    }
    const bool negative = r.sign() < 0;
    if (negative && n % 2 == 0) {
        return std::nullopt;
    }
    const Integer num = negative ? Integer(-r.numerator()) : r.numerator();
    const auto num_root = integer_nth_root(num, n);
    if (!num_root) {
        return std::nullopt;
    }
    const auto den_root = integer_nth_root(r.denominator(), n);
    if (!den_root) {
        return std::nullopt;
    }
    Rational out(*num_root, *den_root);
    return negative ? -out : out;
}

RadicalScalar::RadicalScalar(Rational base, Rational coeff, Rational radicand)
    : base_(std::move(base)), coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    if (coeff_.is_zero() || radicand_.is_zero()) {
        coeff_ = Rational(0);
        radicand_ = Rational(0);
        return;
    }
    // Fold perfect-square radicands into the rational part so that the
    // invariant "radicand is never a rational square when coeff != 0" holds.
    if (auto root = rational_sqrt(radicand_)) {
        base_ += coeff_ * *root;
        coeff_ = Rational(0);
        radicand_ = Rational(0);
    }
}

Rational RadicalScalar::as_rational() const {
    if (!is_rational()) {
        throw std::domain_error("radical value is not rational: " + str());
    }
    return base_;
}

std::string RadicalScalar::str() const {
    if (is_rational()) {
        return base_.str();
    }
    std::ostringstream os;
    if (!base_.is_zero()) {
        os << base_.str() << (coeff_.sign() > 0 ? "+" : "");
    }
    if (coeff_.is_one()) {
        os << "sqrt(" << radicand_.str() << ")";
    } else if (coeff_ == Rational(-1)) {
        os << "-sqrt(" << radicand_.str() << ")";
    } else {
        os << coeff_.str() << "*sqrt(" << radicand_.str() << ")";
    }
    return os.str();
}

std::optional<Rational> RadicalScalar::aligned_coeff(const RadicalScalar& o) const {
    // Here both *this and o carry genuine radicals. c*sqrt(s) can be written
    // over sqrt(r) exactly when s/r is a rational square t^2 (t > 0): then
    // sqrt(s) = t*sqrt(r) holds for a consistent branch choice even for
    // negative radicands (i*sqrt(|s|) = t*i*sqrt(|r|)).
    const auto ratio = rational_sqrt(o.radicand_ / radicand_);
    if (!ratio) {
        return std::nullopt;
    }
    return o.coeff_ * *ratio;
}

RadicalScalar RadicalScalar::operator-() const {
    RadicalScalar out;
    out.base_ = -base_;
    out.coeff_ = -coeff_;
    out.radicand_ = radicand_;
    return out;
}

RadicalScalar RadicalScalar::operator+(const RadicalScalar& o) const {
    if (o.is_rational()) {
        RadicalScalar out = *this;
        out.base_ += o.base_;
        return out;
    }
    if (is_rational()) {
        return o + *this;
    }
    const auto c = aligned_coeff(o);
    if (!c) {
        throw mixed_radicand_error();
    }
    return RadicalScalar(base_ + o.base_, coeff_ + *c, radicand_);
}

RadicalScalar RadicalScalar::operator-(const RadicalScalar& o) const { return *this + (-o); }

RadicalScalar RadicalScalar::operator*(const RadicalScalar& o) const {
    if (o.is_rational()) {
        RadicalScalar out;
        out.base_ = base_ * o.base_;
        out.coeff_ = coeff_ * o.base_;
        out.radicand_ = out.coeff_.is_zero() ? Rational(0) : radicand_;
        return out;
    }
    if (is_rational()) {
        return o * *this;
    }
    if (const auto c = aligned_coeff(o)) {
        // Same quadratic field: (b1 + c1*sqrt(r))(b2 + c2*sqrt(r)).
        const Rational c2 = *c;
        return RadicalScalar(base_ * o.base_ + coeff_ * c2 * radicand_,
                             base_ * c2 + coeff_ * o.base_, radicand_);
    }
    if (base_.is_zero() && o.base_.is_zero()) {
        // Pure radicals from different fields: sqrt(r)*sqrt(s) = sqrt(rs),
        // which may even collapse back to a rational.
        return RadicalScalar(Rational(0), coeff_ * o.coeff_, radicand_ * o.radicand_);
    }
    throw mixed_radicand_error();
}

RadicalScalar RadicalScalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    if (is_rational()) {
        return RadicalScalar(Rational(1) / base_);
    }
    // 1/(b + c*sqrt(r)) = (b - c*sqrt(r)) / (b^2 - c^2 r); the norm cannot
    // vanish because r is not a rational square.
    const Rational norm = base_ * base_ - coeff_ * coeff_ * radicand_;
    return RadicalScalar(base_ / norm, -coeff_ / norm, radicand_);
}

RadicalScalar RadicalScalar::operator/(const RadicalScalar& o) const { return *this * o.inverse(); }

RadicalScalar RadicalScalar::pow(long k) const {
    if (k < 0) {
        return inverse().pow(-k);
    }
    RadicalScalar acc{Rational(1)};
    RadicalScalar base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1) {
            acc = acc * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return acc;
}

bool RadicalScalar::operator==(const RadicalScalar& o) const {
    if (is_rational() != o.is_rational()) {
        // rational vs genuinely irrational
        return false;
    }
    if (is_rational()) {
        return base_ == o.base_;
    }
    if (base_ != o.base_) {
        // 1 and sqrt(r) are linearly independent over the rationals
        return false;
    }
    const auto c = aligned_coeff(o);
    // Distinct quadratic fields share no irrational elements.
    return c && *c == coeff_;
}

std::ostream& operator<<(std::ostream& os, const RadicalScalar& s) { return os << s.str(); }

std::variant<Rational, RadicalScalar> try_square_root(const Rational& r) {
    if (auto root = rational_sqrt(r)) {
        return *root;
    }
    return RadicalScalar(Rational(0), Rational(1), r);
}

}  // namespace dgsk
