#pragma once

#include <vector>

#include "dgsk/scalars.hpp"

namespace dgsk {

/// Dense integer matrix, row-major.
using IntMatrix = std::vector<std::vector<Integer>>;

/**
 * Smith normal form decomposition U * A * V = D with U, V unimodular and D
 * diagonal with non-negative entries. Rows rank..m-1 of U form a basis of the
 * left kernel {z : z A = 0} — a genuine lattice basis, which is what the
 * multiplicative solvability test needs (a finite-index sublattice could miss
 * a root-of-unity obstruction).
 */
struct SmithForm {
    IntMatrix U;                  // m x m
    IntMatrix V;                  // n x n
    std::vector<Integer> diag;    // min(m,n) entries, zeros trailing
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

IntMatrix int_identity(std::size_t n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);

/**
 * Solves the multiplicative system  prod_i e_i^{A[t][i]} = rhs[t]  for nonzero
 * scalars e_i, over the algebraic closure: solvable iff every left-kernel
 * vector z of A satisfies prod_t rhs[t]^{z_t} = 1. When solvable, a witness is
 * materialized in the rationals, or in a single quadratic extension, whenever
 * the root extractions allow; otherwise `solvable` is still true and
 * `witness` stays empty (existence over the closure is certified by the
 * verified kernel relations, returned for inspection).
 */
struct MultiplicativeSolution {
    bool solvable = false;
    std::vector<RadicalScalar> witness;        // size n when materialized
    std::vector<std::vector<Integer>> kernel;  // verified left-kernel relations
};

MultiplicativeSolution solve_multiplicative(const IntMatrix& a, const std::vector<Rational>& rhs);

}  // namespace dgsk
