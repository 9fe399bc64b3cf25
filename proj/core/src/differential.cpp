#include "dgsk/differential.hpp"

#include <map>
#include <stdexcept>

namespace dgsk {

DifferentialSpec DifferentialSpec::from_diag(const Mat3& m) {
    DifferentialSpec d;
    for (int g = 0; g < 3; ++g) {
        for (int h = 0; h < 3; ++h) {
            // Row g of m gives ∂(generator g) = Σ_h m[g][h] · (generator h)².
            d.matrix(g)[h][h] = m[g][h];
        }
    }
    return d;
}

DifferentialSpec DifferentialSpec::from_values(const NcPoly& dx, const NcPoly& dy,
                                               const NcPoly& dz) {
    DifferentialSpec d;
    const NcPoly* values[3] = {&dx, &dy, &dz};
    for (int g = 0; g < 3; ++g) {
        for (const auto& [w, c] : values[g]->terms()) {
            if (w.degree() != 2) {
                throw std::invalid_argument("differential value must be homogeneous of degree 2");
            }
            d.matrix(g)[w.letter(0)][w.letter(1)] += c;
        }
    }
    return d;
}

NcPoly DifferentialSpec::value(int g) const {
    NcPoly out;
    const Mat3& m = matrix(g);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            out.add_term(Word({i, j}), m[i][j]);
        }
    }
    return out;
}

std::array<Vec, 3> nf_coords(const DifferentialSpec& d, const QuadraticAlgebraModel& alg) {
    std::array<Vec, 3> out;
    for (int g = 0; g < 3; ++g) {
        out[g] = alg.coords(d.value(g), 2);
    }
    return out;
}

Vec nf_flat(const DifferentialSpec& d, const QuadraticAlgebraModel& alg) {
    const auto parts = nf_coords(d, alg);
    Vec flat;
    flat.reserve(3 * parts[0].size());
    for (const auto& part : parts) {
        flat.insert(flat.end(), part.begin(), part.end());
    }
    return flat;
}

DifferentialSpec spec_from_nf_flat(const Vec& flat, const QuadraticAlgebraModel& alg) {
    const DegreeBasis& db = alg.degree_basis(2);
    const std::size_t b2 = db.basis.size();
    if (flat.size() != 3 * b2) {
        throw std::invalid_argument("nf coordinate vector has the wrong length");
    }
    DifferentialSpec d;
    for (int g = 0; g < 3; ++g) {
        for (std::size_t t = 0; t < b2; ++t) {
            const Word& w = db.basis[t];
            d.matrix(g)[w.letter(0)][w.letter(1)] = flat[g * b2 + t];
        }
    }
    return d;
}

namespace {

/// Canonical degree-2 representatives of ∂x, ∂y, ∂z (basis-word lifts of the
/// nf-coordinates). Everything downstream uses these, never the raw matrix
/// polynomials, so results depend only on the spec's class modulo relations.
std::array<NcPoly, 3> canonical_values(const DifferentialSpec& d,
                                       const QuadraticAlgebraModel& alg) {
    std::array<NcPoly, 3> out;
    for (int g = 0; g < 3; ++g) {
        out[g] = alg.lift(alg.coords(d.value(g), 2), 2);
    }
    return out;
}

NcPoly leibniz_raw(const std::array<NcPoly, 3>& dgen, const NcPoly& p) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.degree(); ++i) {
            const Rational sign_c = (i % 2 == 0) ? c : -c;
            const NcPoly& mid = dgen[static_cast<std::size_t>(w.letter(i))];
            if (mid.is_zero()) {
                continue;
            }
            const Word prefix = w.subword(0, i);
            const Word suffix = w.subword(i + 1, w.degree() - i - 1);
            for (const auto& [mw, mc] : mid.terms()) {
                out.add_term(prefix.concat(mw).concat(suffix), sign_c * mc);
            }
        }
    }
    return out;
}

}  // namespace

NcPoly leibniz_apply(const DifferentialSpec& d, const NcPoly& p,
                     const QuadraticAlgebraModel& alg) {
    if (!p.is_zero() && p.max_degree() + 1 > alg.degree_cap()) {
        throw std::out_of_range("leibniz_apply: image degree beyond the model's cap");
    }
    return alg.reduce(leibniz_raw(canonical_values(d, alg), p));
}

ValidityReport check_differential(const DifferentialSpec& d, const SklyaninParams& p) {
    return check_differential(d, QuadraticAlgebraModel(p, 3));
}

ValidityReport check_differential(const DifferentialSpec& d, const QuadraticAlgebraModel& alg) {
    const auto dgen = canonical_values(d, alg);
    ValidityReport rep;
    rep.valid = true;
    for (int i = 0; i < 3; ++i) {
        rep.relation_residuals[i] = alg.coords(leibniz_raw(dgen, alg.rels()[i]), 3);
        if (!vec_is_zero(rep.relation_residuals[i])) {
            rep.valid = false;
        }
    }
    for (int g = 0; g < 3; ++g) {
        rep.square_residuals[g] = alg.coords(leibniz_raw(dgen, dgen[g]), 3);
        if (!vec_is_zero(rep.square_residuals[g])) {
            rep.valid = false;
        }
    }
    return rep;
}

namespace {

/// Noncommutative polynomial with symbolic coefficients.
using SymNcPoly = std::map<Word, SymPoly>;

void sym_add_term(SymNcPoly& p, const Word& w, const SymPoly& s) {
    if (s.is_zero()) {
        return;
    }
    auto [it, fresh] = p.try_emplace(w, s);
    if (!fresh) {
        it->second += s;
        if (it->second.is_zero()) {
            p.erase(it);
        }
    }
}

/// ∂ of a symbolic polynomial, with ∂(generator g) = Σ_t u_{g,t} · (basis
/// word t) — the symbolic counterpart of canonical_values above.
SymNcPoly sym_leibniz(const SymNcPoly& p, const DegreeBasis& db2, std::size_t b2) {
    SymNcPoly out;
    for (const auto& [w, s] : p) {
        for (std::size_t i = 0; i < w.degree(); ++i) {
            const int g = w.letter(i);
            const Word prefix = w.subword(0, i);
            const Word suffix = w.subword(i + 1, w.degree() - i - 1);
            for (std::size_t t = 0; t < b2; ++t) {
                SymPoly term = s * SymPoly::variable(static_cast<int>(g * b2 + t));
                if (i % 2 == 1) {
                    term = -term;
                }
                sym_add_term(out, prefix.concat(db2.basis[t]).concat(suffix), term);
            }
        }
    }
    return out;
}

/// nf-coordinates of a homogeneous symbolic polynomial.
std::vector<SymPoly> sym_coords(const SymNcPoly& p, const QuadraticAlgebraModel& alg,
                                std::size_t degree) {
    std::vector<SymPoly> word_coords(word_count(degree));
    for (const auto& [w, s] : p) {
        word_coords[w.rank()] += s;
    }
    const Matrix& red = alg.degree_basis(degree).reducer;
    std::vector<SymPoly> out(red.rows());
    for (std::size_t t = 0; t < red.rows(); ++t) {
        for (std::size_t j = 0; j < red.cols(); ++j) {
            if (!red.at(t, j).is_zero() && !word_coords[j].is_zero()) {
                out[t] += word_coords[j] * red.at(t, j);
            }
        }
    }
    return out;
}

}  // namespace

ConstraintSystem build_constraints(const SklyaninParams& p) {
    return build_constraints(QuadraticAlgebraModel(p, 3));
}

ConstraintSystem build_constraints(const QuadraticAlgebraModel& alg) {
    const DegreeBasis& db2 = alg.degree_basis(2);
    const std::size_t b2 = db2.basis.size();

    ConstraintSystem cs{alg.params(), 3 * b2, 27, {}, {}, {}, {}};

    // Linear members: coordinates of ∂f_i (one application of the symbolic ∂
    // to the concrete relations).
    for (const NcPoly& f : alg.rels()) {
        SymNcPoly sym_f;
        for (const auto& [w, c] : f.terms()) {
            sym_add_term(sym_f, w, SymPoly(c));
        }
        for (auto& member : sym_coords(sym_leibniz(sym_f, db2, b2), alg, 3)) {
            cs.linear_nf.push_back(std::move(member));
        }
    }

    // Quadratic members: coordinates of ∂²g, applying ∂ to the symbolic
    // canonical value Σ_t u_{g,t}·(basis word t).
    for (int g = 0; g < 3; ++g) {
        SymNcPoly dg;
        for (std::size_t t = 0; t < b2; ++t) {
            sym_add_term(dg, db2.basis[t], SymPoly::variable(static_cast<int>(g * b2 + t)));
        }
        for (auto& member : sym_coords(sym_leibniz(dg, db2, b2), alg, 3)) {
            cs.quadratic_nf.push_back(std::move(member));
        }
    }

    // Matrix-variable view: substitute u_{g,t} = Σ_j reducer2[t][j] · m^g_j,
    // where rank j of a degree-2 word directly encodes (i1,i2) as 3·i1+i2.
    std::vector<SymPoly> images(cs.nf_vars);
    for (std::size_t g = 0; g < 3; ++g) {
        for (std::size_t t = 0; t < b2; ++t) {
            SymPoly img;
            for (std::size_t j = 0; j < 9; ++j) {
                const Rational& c = db2.reducer.at(t, j);
                if (!c.is_zero()) {
                    img += SymPoly::variable(static_cast<int>(9 * g + j)) * c;
                }
            }
            images[g * b2 + t] = std::move(img);
        }
    }
    cs.linear_matrix.reserve(cs.linear_nf.size());
    for (const SymPoly& m : cs.linear_nf) {
        cs.linear_matrix.push_back(m.substitute(images));
    }
    cs.quadratic_matrix.reserve(cs.quadratic_nf.size());
    for (const SymPoly& m : cs.quadratic_nf) {
        cs.quadratic_matrix.push_back(m.substitute(images));
    }
    return cs;
}

std::vector<Rational> ConstraintSystem::evaluate_nf(const Vec& nf_values) const {
    std::vector<Rational> out;
    out.reserve(linear_nf.size() + quadratic_nf.size());
    for (const SymPoly& m : linear_nf) {
        out.push_back(m.evaluate(nf_values));
    }
    for (const SymPoly& m : quadratic_nf) {
        out.push_back(m.evaluate(nf_values));
    }
    return out;
}

std::vector<Rational> ConstraintSystem::evaluate_matrix(const DifferentialSpec& d) const {
    const Vec values = matrix_flat(d);
    std::vector<Rational> out;
    out.reserve(linear_matrix.size() + quadratic_matrix.size());
    for (const SymPoly& m : linear_matrix) {
        out.push_back(m.evaluate(values));
    }
    for (const SymPoly& m : quadratic_matrix) {
        out.push_back(m.evaluate(values));
    }
    return out;
}

Vec matrix_flat(const DifferentialSpec& d) {
    Vec out;
    out.reserve(27);
    for (int g = 0; g < 3; ++g) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                out.push_back(d.matrix(g)[i][j]);
            }
        }
    }
    return out;
}

}  // namespace dgsk
