#pragma once

#include <optional>
#include <vector>

#include "lca/errors.hpp"
#include "lca/poly.hpp"

namespace lca {

// ---------------------------------------------------------------------------
// Exact linear algebra over Q.
// ---------------------------------------------------------------------------

using QVector = std::vector<Rational>;

struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<QVector> a;  // row-major

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(r, QVector(c, Rational(0))) {}
};

// Exact basis of the right nullspace; empty iff the kernel is trivial.
// Deterministic: RREF pivots chosen left to right, free variables set to 1
// in column order.
std::vector<QVector> nullspace_q(const QMatrix& m);

// In-place reduced row echelon form. Returns the pivot column of each
// surviving (nonzero) row, in order; zero rows are removed.
std::vector<int> rref_rows(std::vector<QVector>& rows);

inline int rank_q(std::vector<QVector> rows) { return static_cast<int>(rref_rows(rows).size()); }

// One exact solution of A x = b, or nullopt if inconsistent.
// kernel_dim, when given, receives the dimension of the solution kernel.
std::optional<QVector> solve_q(const QMatrix& a, const QVector& b, int* kernel_dim = nullptr);

// ---------------------------------------------------------------------------
// Univariate polynomials in D (dense, ascending coefficients) back the
// Euclidean steps of the Q[D] Hermite normal form.
// ---------------------------------------------------------------------------

using UPoly = std::vector<Rational>;  // no trailing zeros; empty = 0

int udeg(const UPoly& p);
UPoly uadd(const UPoly& p, const UPoly& q);
UPoly usub(const UPoly& p, const UPoly& q);
UPoly umul(const UPoly& p, const UPoly& q);
// p = q * quot + rem with deg(rem) < deg(q).
void udivmod(const UPoly& p, const UPoly& q, UPoly& quot, UPoly& rem);

UPoly to_upoly(const Poly& p);     // requires p in D only
Poly from_upoly(const UPoly& p);

// ---------------------------------------------------------------------------
// Submodules of free Q[D]-modules.
// ---------------------------------------------------------------------------

// Column of a PolyMatrix: a length-ambient_rank vector of Poly in D only.
using PolyColumn = std::vector<Poly>;

// Canonical generating set of a Q[D]-submodule of Q[D]^ambient_rank:
// strictly increasing pivot rows, monic pivots, entries of other
// generators at a pivot row reduced below the pivot degree.
struct SubmoduleBasis {
    int ambient_rank = 0;
    std::vector<PolyColumn> gens;

    bool empty() const { return gens.empty(); }
    bool operator==(const SubmoduleBasis& o) const {
        return ambient_rank == o.ambient_rank && gens == o.gens;
    }
};

SubmoduleBasis hnf(int ambient_rank, const std::vector<PolyColumn>& columns);

// True iff v lies in the Q[D]-span of s.gens (successive pivot division).
bool member(const PolyColumn& v, const SubmoduleBasis& s);

SubmoduleBasis intersect(const SubmoduleBasis& s1, const SubmoduleBasis& s2);

}  // namespace lca
