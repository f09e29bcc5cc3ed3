#include "lca/confmap.hpp"

namespace lca {

ModElement conf_act(const PolyMat& mat, const Poly& omega, const ModElement& a) {
    const int rank = static_cast<int>(mat.size());
    if (a.rank() != rank)
        throw Error(ErrorCode::RANK_MISMATCH, "conf_act: element rank != map rank");
    const Poly d_plus_omega = pvar(Var::D) + omega;
    ModElement result(rank);
    for (int j = 0; j < rank; ++j) {
        if (a.comps[j].is_zero()) continue;
        Poly coeff = a.comps[j].substitute(Var::D, d_plus_omega);
        for (int i = 0; i < rank; ++i) {
            if (mat[i][j].is_zero()) continue;
            result.comps[i] += coeff * mat[i][j].substitute(Var::X, omega);
        }
    }
    return result;
}

ConformalMap ConformalMap::identity(int r) { return scalar(r, Poly(1L)); }

ConformalMap ConformalMap::scalar(int r, const Poly& p) {
    ConformalMap m(r);
    for (int i = 0; i < r; ++i) m.mat[i][i] = p;
    return m;
}

ModElement ConformalMap::column(int j) const {
    ModElement e(rank);
    for (int i = 0; i < rank; ++i) e.comps[i] = mat[i][j];
    return e;
}

bool ConformalMap::is_zero() const {
    for (const auto& row : mat)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

int ConformalMap::deg_d() const {
    int d = 0;
    for (const auto& row : mat)
        for (const auto& p : row) d = std::max(d, p.degree_in(Var::D));
    return d;
}

int ConformalMap::deg_x() const {
    int d = 0;
    for (const auto& row : mat)
        for (const auto& p : row) d = std::max(d, p.degree_in(Var::X));
    return d;
}

ConformalMap ConformalMap::operator+(const ConformalMap& o) const {
    if (rank != o.rank) throw Error(ErrorCode::RANK_MISMATCH, "map addition");
    ConformalMap r(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r.mat[i][j] = mat[i][j] + o.mat[i][j];
    return r;
}

ConformalMap ConformalMap::operator-(const ConformalMap& o) const { return *this + (-o); }

ConformalMap ConformalMap::operator-() const {
    ConformalMap r(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r.mat[i][j] = -mat[i][j];
    return r;
}

ConformalMap ConformalMap::scaled(const Poly& p) const {
    ConformalMap r(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) r.mat[i][j] = p * mat[i][j];
    return r;
}

ModElement ConformalMap::apply(const ModElement& a) const {
    if (a.contains(Var::X))
        throw Error(ErrorCode::VARIABLE_CLASH, "apply: argument already contains x");
    return conf_act(mat, pvar(Var::X), a);
}

bool ConformalMap2::is_zero() const {
    for (const auto& row : mat)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

ConformalMap ConformalMap2::specialize_x(const Rational& x0) const {
    ConformalMap r(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            r.mat[i][j] = mat[i][j].substitute(Var::X, Poly(x0)).substitute(Var::Y, pvar(Var::X));
    return r;
}

ConformalMap ad_map(const ConformalAlgebra& A, const ModElement& a) {
    if (a.rank() != A.rank())
        throw Error(ErrorCode::RANK_MISMATCH, "ad: element rank != algebra rank");
    ConformalMap m(A.rank());
    for (int j = 0; j < A.rank(); ++j) {
        ModElement col = A.bracket(a, ModElement::unit(A.rank(), j), pvar(Var::X));
        for (int i = 0; i < A.rank(); ++i) m.mat[i][j] = col.comps[i];
    }
    return m;
}

ConformalMap dl_map(const ConformalAlgebra& A) {
    if (!A.is_current())
        throw Error(ErrorCode::NOT_CURRENT_ALGEBRA, "d^L is defined on current algebras");
    return ConformalMap::scalar(A.rank(), pvar(Var::D) + pvar(Var::X));
}

ModElement gc_act(const PolyMat& phi, const PolyMat& psi, const Poly& xp, const Poly& yp,
                  const ModElement& a) {
    const Poly inner = yp - xp;
    return conf_act(phi, xp, conf_act(psi, inner, a)) -
           conf_act(psi, inner, conf_act(phi, xp, a));
}

ConformalMap2 gc_bracket(const ConformalMap& phi, const ConformalMap& psi) {
    if (phi.rank != psi.rank) throw Error(ErrorCode::RANK_MISMATCH, "gc_bracket");
    ConformalMap2 r;
    r.rank = phi.rank;
    r.mat.assign(r.rank, std::vector<Poly>(r.rank));
    for (int j = 0; j < r.rank; ++j) {
        ModElement col = gc_act(phi.mat, psi.mat, pvar(Var::X), pvar(Var::Y),
                                ModElement::unit(r.rank, j));
        for (int i = 0; i < r.rank; ++i) r.mat[i][j] = col.comps[i];
    }
    return r;
}

ModuleMap ModuleMap::identity(int r) {
    ModuleMap m(r, r);
    for (int i = 0; i < r; ++i) m.mat[i][i] = Poly(1L);
    return m;
}

ModElement ModuleMap::apply(const ModElement& a) const {
    if (a.rank() != in_rank)
        throw Error(ErrorCode::RANK_MISMATCH, "modmap_apply: element rank != in_rank");
    ModElement result(out_rank);
    for (int j = 0; j < in_rank; ++j) {
        if (a.comps[j].is_zero()) continue;
        for (int i = 0; i < out_rank; ++i) {
            if (mat[i][j].is_zero()) continue;
            result.comps[i] += a.comps[j] * mat[i][j];
        }
    }
    return result;
}

PolyColumn ModuleMap::column(int j) const {
    PolyColumn c(out_rank);
    for (int i = 0; i < out_rank; ++i) c[i] = mat[i][j];
    return c;
}

std::vector<PolyColumn> ModuleMap::columns() const {
    std::vector<PolyColumn> cs;
    for (int j = 0; j < in_rank; ++j) cs.push_back(column(j));
    return cs;
}

bool ModuleMap::is_zero() const {
    for (const auto& row : mat)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

int ModuleMap::deg_d() const {
    int d = 0;
    for (const auto& row : mat)
        for (const auto& p : row) d = std::max(d, p.degree_in(Var::D));
    return d;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
    if (out_rank != o.out_rank || in_rank != o.in_rank)
        throw Error(ErrorCode::RANK_MISMATCH, "module map addition");
    ModuleMap r(out_rank, in_rank);
    for (int i = 0; i < out_rank; ++i)
        for (int j = 0; j < in_rank; ++j) r.mat[i][j] = mat[i][j] + o.mat[i][j];
    return r;
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const { return *this + o.scaled(Rational(-1)); }

ModuleMap ModuleMap::scaled(const Rational& c) const {
    ModuleMap r(out_rank, in_rank);
    for (int i = 0; i < out_rank; ++i)
        for (int j = 0; j < in_rank; ++j) r.mat[i][j] = mat[i][j].scaled(c);
    return r;
}

}  // namespace lca
