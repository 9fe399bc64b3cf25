#include "dgsk/algebra.hpp"

#include <limits>
#include <stdexcept>

namespace dgsk {

QuadraticAlgebraModel::QuadraticAlgebraModel(const SklyaninParams& params, std::size_t degree_cap)
    : params_(params), relations_(relations(params)), cap_(degree_cap) {
    bases_.reserve(cap_ + 1);
    for (std::size_t d = 0; d <= cap_; ++d) {
        bases_.push_back(build_degree(d));
    }
}

DegreeBasis QuadraticAlgebraModel::build_degree(std::size_t degree) const {
    const std::size_t n = word_count(degree);
    DegreeBasis out;

    if (degree < 2) {
        // No relations reach below degree 2: every word is a basis word.
        out.basis.reserve(n);
        out.reducer = Matrix(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            out.basis.push_back(Word::from_rank(degree, r));
            out.reducer.at(r, r) = Rational(1);
        }
        return out;
    }

    // Rows spanning the degree-d relation subspace: w * f_i * w' over all
    // splittings of d - 2 letters around the relation.
    std::vector<Vec> rows;
    for (std::size_t left = 0; left + 2 <= degree; ++left) {
        const std::size_t right = degree - 2 - left;
        const std::size_t nl = word_count(left);
        const std::size_t nr = word_count(right);
        for (std::size_t wl = 0; wl < nl; ++wl) {
            const Word w = Word::from_rank(left, wl);
            for (std::size_t wr = 0; wr < nr; ++wr) {
                const Word wp = Word::from_rank(right, wr);
                for (const NcPoly& f : relations_) {
                    Vec row(n, Rational(0));
                    for (const auto& [mid, c] : f.terms()) {
                        row[w.concat(mid).concat(wp).rank()] += c;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    Matrix rel(std::move(rows));

    // Eliminate preferring deglex-greatest pivots: the matroid-greedy pivot
    // set is index-greatest, so the surviving basis is the lex-least
    // complement (and reproduces the hand-picked normal forms, e.g.
    // yx -> -xy when a = b, c = 0).
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) {
        order[j] = n - 1 - j;
    }
    const RrefResult r = rref(rel, order);

    constexpr auto npos = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> basis_col_index(n, npos);
    for (std::size_t col = 0; col < n; ++col) {
        if (r.pivot_row_of[col] == npos) {
            basis_col_index[col] = out.basis.size();
            out.basis.push_back(Word::from_rank(degree, col));
        }
    }

    // reducer column w: basis words map to their own unit vector; each pivot
    // word p with row  e_p + sum_j c_j e_j = 0  (j over basis words, since the
    // form is fully reduced) maps to -sum_j c_j e_j.
    out.reducer = Matrix(out.basis.size(), n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t prow = r.pivot_row_of[col];
        if (prow == npos) {
            out.reducer.at(basis_col_index[col], col) = Rational(1);
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j != col && !rel.at(prow, j).is_zero()) {
                out.reducer.at(basis_col_index[j], col) = -rel.at(prow, j);
            }
        }
    }
    return out;
}

const DegreeBasis& QuadraticAlgebraModel::degree_basis(std::size_t degree) const {
    if (degree >= bases_.size()) {
        throw std::out_of_range("degree beyond the model's cap");
    }
    return bases_[degree];
}

Vec QuadraticAlgebraModel::coords(const NcPoly& p, std::size_t degree) const {
    const DegreeBasis& db = degree_basis(degree);
    Vec word_coords(word_count(degree), Rational(0));
    for (const auto& [w, c] : p.terms()) {
        if (w.degree() != degree) {
            throw std::invalid_argument("coords: polynomial not homogeneous of the given degree");
        }
        word_coords[w.rank()] = c;
    }
    return db.reducer * word_coords;
}

std::map<std::size_t, Vec> QuadraticAlgebraModel::normal_form(const NcPoly& p) const {
    std::map<std::size_t, Vec> out;
    for (const auto& [w, c] : p.terms()) {
        const std::size_t d = w.degree();
        auto [it, fresh] = out.try_emplace(d, Vec(word_count(d), Rational(0)));
        it->second[w.rank()] += c;
    }
    for (auto& [d, v] : out) {
        v = degree_basis(d).reducer * v;
    }
    return out;
}

NcPoly QuadraticAlgebraModel::reduce(const NcPoly& p) const {
    NcPoly out;
    for (const auto& [d, v] : normal_form(p)) {
        out += lift(v, d);
    }
    return out;
}

NcPoly QuadraticAlgebraModel::lift(const Vec& v, std::size_t degree) const {
    const DegreeBasis& db = degree_basis(degree);
    if (v.size() != db.basis.size()) {
        throw std::invalid_argument("lift: coordinate size mismatch");
    }
    NcPoly out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.add_term(db.basis[i], v[i]);
    }
    return out;
}

}  // namespace dgsk
