#include "dgsk/sympoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dgsk {

int SymPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

void SymPoly::add(const SymMono& m, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(m, -c);
    }
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add(m, c);
    }
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add(m, -c);
    }
    return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) {
        coef *= c;
    }
    return *this;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            if (m1.degree() + m2.degree() > 2) {
                throw std::domain_error("symbolic product beyond degree 2");
            }
            SymMono m;
            if (m1.degree() == 0) {
                m = m2;
            } else if (m2.degree() == 0) {
                m = m1;
            } else {
                m = SymMono::pair(m1.b, m2.b);
            }
            out.add(m, c1 * c2);
        }
    }
    return out;
}

Rational SymPoly::evaluate(const Vec& values) const {
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        if (m.a >= 0) {
            t *= values.at(static_cast<std::size_t>(m.a));
        }
        if (m.b >= 0) {
            t *= values.at(static_cast<std::size_t>(m.b));
        }
        out += t;
    }
    return out;
}

SymPoly SymPoly::substitute(const std::vector<SymPoly>& images) const {
    SymPoly out;
    for (const auto& [m, c] : terms_) {
        SymPoly t(c);
        if (m.a >= 0) {
            t = t * images.at(static_cast<std::size_t>(m.a));
        }
        if (m.b >= 0) {
            t = t * images.at(static_cast<std::size_t>(m.b));
        }
        out += t;
    }
    return out;
}

Vec SymPoly::linear_coefficients(std::size_t nvars) const {
    Vec out(nvars, Rational(0));
    for (const auto& [m, c] : terms_) {
        if (m.degree() != 1) {
            throw std::domain_error("not a homogeneous linear polynomial");
        }
        out.at(static_cast<std::size_t>(m.b)) += c;
    }
    return out;
}

Matrix SymPoly::quadratic_form(std::size_t nvars) const {
    Matrix q(nvars, nvars);
    const Rational half(Integer(1), Integer(2));
    for (const auto& [m, c] : terms_) {
        if (m.degree() != 2) {
            throw std::domain_error("not a homogeneous quadratic polynomial");
        }
        const auto i = static_cast<std::size_t>(m.a);
        const auto j = static_cast<std::size_t>(m.b);
        if (i == j) {
            q.at(i, i) += c;
        } else {
            q.at(i, j) += c * half;
            q.at(j, i) += c * half;
        }
    }
    return q;
}

std::string SymPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) {
            os << (c.sign() > 0 ? " + " : " - ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        const bool unit_coeff = mag.is_one() && m.degree() > 0;
        if (!unit_coeff) {
            os << mag.str();
        }
        if (m.a >= 0) {
            os << (unit_coeff ? "" : "*") << names.at(static_cast<std::size_t>(m.a));
        }
        if (m.b >= 0) {
            os << (m.a >= 0 || !unit_coeff ? "*" : "") << names.at(static_cast<std::size_t>(m.b));
        }
        first = false;
    }
    return os.str();
}

}  // namespace dgsk
