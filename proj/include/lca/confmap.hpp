#pragma once

#include <vector>

#include "lca/confalgebra.hpp"
#include "lca/linalg.hpp"
#include "lca/modelement.hpp"

namespace lca {

using PolyMat = std::vector<std::vector<Poly>>;  // mat[row][col]

// Action of a conformal map matrix with bracket parameter omega:
//   sum_j a_j(D + omega) * (column_j with X renamed to omega).
// This is the single place where the conformal-linearity twist lives.
ModElement conf_act(const PolyMat& mat, const Poly& omega, const ModElement& a);

// Conformal linear endomorphism phi_x of a rank-r module: column j is
// phi_x(e_j), entries polynomial in {D, X}.
struct ConformalMap {
    int rank = 0;
    PolyMat mat;

    ConformalMap() = default;
    explicit ConformalMap(int r) : rank(r), mat(r, std::vector<Poly>(r)) {}

    static ConformalMap identity(int r);
    static ConformalMap scalar(int r, const Poly& p);  // p(D,X) * Id

    ModElement column(int j) const;
    bool is_zero() const;
    int deg_d() const;
    int deg_x() const;

    ConformalMap operator+(const ConformalMap& o) const;
    ConformalMap operator-(const ConformalMap& o) const;
    ConformalMap operator-() const;
    ConformalMap scaled(const Poly& p) const;  // entrywise multiply, e.g. by x^m
    bool operator==(const ConformalMap& o) const { return rank == o.rank && mat == o.mat; }

    // Conformal-linear application; rejects arguments already carrying X.
    ModElement apply(const ModElement& a) const;
};

// Two-parameter element [phi_x psi]_y of gc: entries in {D, X, Y}.
struct ConformalMap2 {
    int rank = 0;
    PolyMat mat;

    bool is_zero() const;
    // Evaluate the X parameter at a rational and rename Y back to X,
    // recovering an ordinary one-parameter map.
    ConformalMap specialize_x(const Rational& x0) const;
};

// ad a: column j = [a_x e_j].
ConformalMap ad_map(const ConformalAlgebra& A, const ModElement& a);

// d^L on a current algebra: (D + X) * Id.
ConformalMap dl_map(const ConformalAlgebra& A);

// [phi_x psi]_y a = phi_x(psi_{y-x} a) - psi_{y-x}(phi_x a).
ConformalMap2 gc_bracket(const ConformalMap& phi, const ConformalMap& psi);

// The same commutator action with arbitrary polynomial parameters, for
// identities that need three or more parameters.
ModElement gc_act(const PolyMat& phi, const PolyMat& psi, const Poly& xp, const Poly& yp,
                  const ModElement& a);

// C[D]-module homomorphism f: A -> B (entries in D only, no twist).
struct ModuleMap {
    int out_rank = 0;
    int in_rank = 0;
    PolyMat mat;

    ModuleMap() = default;
    ModuleMap(int out_r, int in_r) : out_rank(out_r), in_rank(in_r),
                                     mat(out_r, std::vector<Poly>(in_r)) {}

    static ModuleMap identity(int r);

    ModElement apply(const ModElement& a) const;
    PolyColumn column(int j) const;
    std::vector<PolyColumn> columns() const;
    bool is_zero() const;
    int deg_d() const;

    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap operator-(const ModuleMap& o) const;
    ModuleMap scaled(const Rational& c) const;
    bool operator==(const ModuleMap& o) const {
        return out_rank == o.out_rank && in_rank == o.in_rank && mat == o.mat;
    }
};

}  // namespace lca
