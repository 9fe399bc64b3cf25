#include "dgsk/ncpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace dgsk {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int l : letters_) {
        if (l < 0 || l >= kGenerators) {
            throw std::invalid_argument("word letter out of range");
        }
    }
}

Word Word::parse(const std::string& text) {
    if (text == "1" || text.empty()) {
        return Word();
    }
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'x': letters.push_back(0); break;
            case 'y': letters.push_back(1); break;
            case 'z': letters.push_back(2); break;
            default:
                throw std::invalid_argument(std::string("bad word character '") + c + "'");
        }
    }
    return Word(std::move(letters));
}

Word Word::from_rank(std::size_t degree, std::size_t rank) {
    std::vector<int> letters(degree, 0);
    for (std::size_t i = degree; i-- > 0;) {
        letters[i] = static_cast<int>(rank % kGenerators);
        rank /= kGenerators;
    }
    if (rank != 0) {
        throw std::invalid_argument("word rank out of range");
    }
    return Word(std::move(letters));
}

std::size_t Word::rank() const {
    std::size_t r = 0;
    for (int l : letters_) {
        r = r * kGenerators + static_cast<std::size_t>(l);
    }
    return r;
}

Word Word::concat(const Word& o) const {
    std::vector<int> letters = letters_;
    letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
    return Word(std::move(letters));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos + len > letters_.size()) {
        throw std::out_of_range("subword out of range");
    }
    return Word(std::vector<int>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::string Word::str() const {
    if (letters_.empty()) {
        return "1";
    }
    std::string s;
    s.reserve(letters_.size());
    for (int l : letters_) {
        s.push_back(generator_name(l));
    }
    return s;
}

std::optional<std::size_t> NcPoly::homogeneous_degree() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    const std::size_t d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_) {
        if (w.degree() != d) {
            return std::nullopt;
        }
    }
    return d;
}

std::size_t NcPoly::max_degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) {
        d = std::max(d, w.degree());
    }
    return d;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

Rational NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

NcPoly NcPoly::operator-() const {
    NcPoly out;
    for (const auto& [w, c] : terms_) {
        out.terms_.emplace(w, -c);
    }
    return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) {
        add_term(w, c);
    }
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) {
        add_term(w, -c);
    }
    return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coef] : terms_) {
        coef *= c;
    }
    return *this;
}

NcPoly NcPoly::component(std::size_t degree) const {
    NcPoly out;
    for (const auto& [w, c] : terms_) {
        if (w.degree() == degree) {
            out.terms_.emplace(w, c);
        }
    }
    return out;
}

std::string NcPoly::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    const auto emit = [&os](const Rational& magnitude, const Word& w) {
        if (w.degree() == 0) {
            os << magnitude.str();
            return;
        }
        if (!magnitude.is_one()) {
            os << magnitude.str() << "*";
        }
        os << w.str();
    };
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
            emit(c.sign() < 0 ? -c : c, w);
        } else {
            os << (c.sign() > 0 ? " + " : " - ");
            emit(c.sign() > 0 ? c : -c, w);
        }
        first = false;
    }
    return os.str();
}

NcPoly mul_poly(const NcPoly& p, const NcPoly& q) {
    NcPoly out;
    for (const auto& [wp, cp] : p.terms()) {
        for (const auto& [wq, cq] : q.terms()) {
            out.add_term(wp.concat(wq), cp * cq);
        }
    }
    return out;
}

}  // namespace dgsk
