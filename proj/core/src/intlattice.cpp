#include "dgsk/intlattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace dgsk {

IntMatrix int_identity(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t m = a.size();
    const std::size_t k = b.size();
    const std::size_t n = k ? b[0].size() : 0;
    IntMatrix c(m, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) {
            throw std::invalid_argument("int matrix shape mismatch");
        }
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                c[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return c;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    IntMatrix d = a;
    SmithForm out;
    out.U = int_identity(m);
    out.V = int_identity(n);

    auto row_sub = [&](std::size_t r, const Integer& q, std::size_t t) {
        for (std::size_t j = 0; j < n; ++j) {
            d[r][j] -= q * d[t][j];
        }
        for (std::size_t j = 0; j < m; ++j) {
            out.U[r][j] -= q * out.U[t][j];
        }
    };
    auto row_add = [&](std::size_t r, std::size_t t) {
        for (std::size_t j = 0; j < n; ++j) {
            d[r][j] += d[t][j];
        }
        for (std::size_t j = 0; j < m; ++j) {
            out.U[r][j] += out.U[t][j];
        }
    };
    auto col_sub = [&](std::size_t c, const Integer& q, std::size_t t) {
        for (std::size_t i = 0; i < m; ++i) {
            d[i][c] -= q * d[i][t];
        }
        for (std::size_t i = 0; i < n; ++i) {
            out.V[i][c] -= q * out.V[i][t];
        }
    };
    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        std::swap(d[r1], d[r2]);
        std::swap(out.U[r1], out.U[r2]);
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < m; ++i) {
            std::swap(d[i][c1], d[i][c2]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(out.V[i][c1], out.V[i][c2]);
        }
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // Pick the submatrix entry of least absolute value as the pivot.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < m; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (d[i][j] == 0) {
                    continue;
                }
                Integer mag = abs(d[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (!found) {
            break;
        }
        if (pi != t) {
            swap_rows(pi, t);
        }
        if (pj != t) {
            swap_cols(pj, t);
        }

        // Euclidean reduction: shrink remainders until the pivot divides its
        // whole row and column, then clear them.
        bool remainder = false;
        for (std::size_t r = t + 1; r < m; ++r) {
            if (d[r][t] == 0) {
                continue;
            }
            Integer q = d[r][t] / d[t][t];  // truncated quotient
            row_sub(r, q, t);
            if (d[r][t] != 0) {
                remainder = true;
            }
        }
        if (remainder) {
            continue;  // a strictly smaller nonzero entry exists; re-pivot
        }
        for (std::size_t c = t + 1; c < n; ++c) {
            if (d[t][c] == 0) {
                continue;
            }
            Integer q = d[t][c] / d[t][t];
            col_sub(c, q, t);
            if (d[t][c] != 0) {
                remainder = true;
            }
        }
        if (remainder) {
            continue;
        }
        // Enforce the divisibility chain: the pivot must divide every entry
        // of the trailing submatrix; otherwise absorb the offending row and
        // restart this step with a smaller eventual pivot.
        bool chain_ok = true;
        for (std::size_t i = t + 1; i < m && chain_ok; ++i) {
            for (std::size_t j = t + 1; j < n && chain_ok; ++j) {
                if (d[i][j] % d[t][t] != 0) {
                    row_add(t, i);
                    chain_ok = false;
                }
            }
        }
        if (!chain_ok) {
            continue;
        }
        ++t;
    }
    out.rank = t;

    // Normalize diagonal signs (negating a row of D negates the U row).
    for (std::size_t i = 0; i < out.rank; ++i) {
        if (d[i][i] < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = -d[i][j];
            }
            for (std::size_t j = 0; j < m; ++j) {
                out.U[i][j] = -out.U[i][j];
            }
        }
    }
    out.diag.clear();
    for (std::size_t i = 0; i < m && i < n; ++i) {
        out.diag.push_back(d[i][i]);
    }
    return out;
}

namespace {

long to_long_exponent(const Integer& e) {
    if (!e.fits_slong_p()) {
        throw std::overflow_error("exponent too large in lattice solve");
    }
    return e.get_si();
}

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) {
        return Rational(1);
    }
    if (base.is_zero()) {
        throw std::domain_error("zero base in multiplicative system");
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (k > 0) {
        if (k & 1) {
            acc *= b;
        }
        k >>= 1;
        if (k > 0) {
            b *= b;
        }
    }
    return acc;
}

}  // namespace

MultiplicativeSolution solve_multiplicative(const IntMatrix& a, const std::vector<Rational>& rhs) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (rhs.size() != m) {
        throw std::invalid_argument("multiplicative system shape mismatch");
    }
    for (const auto& r : rhs) {
        if (r.is_zero()) {
            throw std::invalid_argument("multiplicative system needs nonzero right-hand sides");
        }
    }
    MultiplicativeSolution out;
    if (m == 0) {
        out.solvable = true;
        out.witness.assign(n, RadicalScalar(Rational(1)));
        return out;
    }
    const SmithForm snf = smith_normal_form(a);

    // s = U ". " rhs in multiplicative notation: s_i = prod_t rhs_t^{U_it}.
    std::vector<Rational> s(m, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t t = 0; t < m; ++t) {
            if (snf.U[i][t] != 0) {
                s[i] *= rational_pow(rhs[t], to_long_exponent(snf.U[i][t]));
            }
        }
    }

    // Rows of U beyond the rank span the left kernel; each imposes the
    // consistency condition prod rhs^z = 1.
    for (std::size_t i = snf.rank; i < m; ++i) {
        out.kernel.push_back(snf.U[i]);
        if (s[i] != Rational(1)) {
            out.solvable = false;
            return out;
        }
    }
    out.solvable = true;

    // Materialize eta_i with eta_i^{d_i} = s_i, then e = V eta
    // (multiplicatively). Rational roots first; a single square root when the
    // degree is even and the half-degree root is rational; otherwise the
    // witness only exists over the closure and we return none.
    std::vector<RadicalScalar> eta(n, RadicalScalar(Rational(1)));
    for (std::size_t i = 0; i < snf.rank; ++i) {
        const Integer& deg = snf.diag[i];
        const unsigned long du = deg.fits_ulong_p() ? deg.get_ui() : 0;
        if (du == 0) {
            return out;  // pathological degree; closure-level witness only
        }
        if (auto root = rational_nth_root(s[i], du)) {
            eta[i] = RadicalScalar(*root);
            continue;
        }
        if (du % 2 == 0) {
            if (auto half = rational_nth_root(s[i], du / 2)) {
                eta[i] = RadicalScalar(Rational(0), Rational(1), *half);
                continue;
            }
        }
        return out;  // solvable over the closure, no compact witness
    }
    try {
        std::vector<RadicalScalar> e(n, RadicalScalar(Rational(1)));
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                if (snf.V[j][i] != 0) {
                    e[j] = e[j] * eta[i].pow(to_long_exponent(snf.V[j][i]));
                }
            }
        }
        out.witness = std::move(e);
    } catch (const RadicalScalar::mixed_radicand_error&) {
        // Two incompatible radicals met; keep the closure-level verdict.
    }
    return out;
}

}  // namespace dgsk
