#include "lca/confalgebra.hpp"

namespace lca {

ConformalAlgebra::ConformalAlgebra(std::vector<std::string> gen_names,
                                   std::vector<std::vector<ModElement>> table)
    : rank_(static_cast<int>(gen_names.size())),
      names_(std::move(gen_names)),
      table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != rank_)
        throw Error(ErrorCode::RANK_MISMATCH, "bracket table not rank x rank");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != rank_)
            throw Error(ErrorCode::RANK_MISMATCH, "bracket table not rank x rank");
        for (const auto& e : row) {
            if (e.rank() != rank_)
                throw Error(ErrorCode::RANK_MISMATCH, "bracket table entry has wrong rank");
            for (const auto& p : e.comps)
                for (Var v : {Var::MU, Var::NU, Var::X, Var::Y})
                    if (p.contains(v))
                        throw Error(ErrorCode::VARIABLE_CLASH,
                                    "table entries may only use D and lam");
        }
    }
}

int ConformalAlgebra::table_deg_d() const {
    int d = 0;
    for (const auto& row : table_)
        for (const auto& e : row)
            for (const auto& p : e.comps) d = std::max(d, p.degree_in(Var::D));
    return d;
}

int ConformalAlgebra::table_deg_lam() const {
    int d = 0;
    for (const auto& row : table_)
        for (const auto& e : row)
            for (const auto& p : e.comps) d = std::max(d, p.degree_in(Var::LAM));
    return d;
}

bool ConformalAlgebra::is_current() const {
    for (const auto& row : table_)
        for (const auto& e : row)
            for (const auto& p : e.comps)
                if (!p.is_constant()) return false;
    return true;
}

LieAlgebra ConformalAlgebra::current_lie(const std::vector<std::string>* names) const {
    if (!is_current())
        throw Error(ErrorCode::NOT_CURRENT_ALGEBRA, "bracket table is not constant");
    std::vector<std::vector<QVector>> c(rank_, std::vector<QVector>(rank_, QVector(rank_)));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k) c[i][j][k] = table_[i][j].comps[k].coeff(Mono{});
    return LieAlgebra::make(names ? *names : names_, std::move(c));
}

ModElement ConformalAlgebra::bracket(const ModElement& a, const ModElement& b,
                                     const Poly& omega) const {
    if (a.rank() != rank_ || b.rank() != rank_)
        throw Error(ErrorCode::RANK_MISMATCH, "eval_bracket argument rank != algebra rank");
    const Poly neg_omega = -omega;
    const Poly d_plus_omega = pvar(Var::D) + omega;
    ModElement result(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (a.comps[i].is_zero()) continue;
        Poly p = a.comps[i].substitute(Var::D, neg_omega);
        for (int j = 0; j < rank_; ++j) {
            if (b.comps[j].is_zero() || table_[i][j].is_zero()) continue;
            Poly q = b.comps[j].substitute(Var::D, d_plus_omega);
            ModElement entry = table_[i][j].substitute(Var::LAM, omega);
            result += (p * q) * entry;
        }
    }
    return result;
}

ModElement ConformalAlgebra::bracket(const ModElement& a, const ModElement& b,
                                     Var outer) const {
    if (outer == Var::D)
        throw Error(ErrorCode::VARIABLE_CLASH, "bracket parameter cannot be D");
    if (a.contains(outer) || b.contains(outer))
        throw Error(ErrorCode::VARIABLE_CLASH,
                    std::string("argument already contains ") + var_name(outer));
    return bracket(a, b, pvar(outer));
}

CheckResult ConformalAlgebra::check_skew() const {
    const Poly flip = -pvar(Var::D) - pvar(Var::LAM);
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            ModElement residual = table_[i][j] + table_[j][i].substitute(Var::LAM, flip);
            if (!residual.is_zero())
                return {false, CheckWitness{{i, j}, residual}};
        }
    }
    return {};
}

CheckResult ConformalAlgebra::check_jacobi() const {
    const Poly lam = pvar(Var::LAM), mu = pvar(Var::MU);
    for (int i = 0; i < rank_; ++i) {
        ModElement ei = ModElement::unit(rank_, i);
        for (int j = 0; j < rank_; ++j) {
            ModElement ej = ModElement::unit(rank_, j);
            for (int k = 0; k < rank_; ++k) {
                ModElement ek = ModElement::unit(rank_, k);
                ModElement lhs = bracket(ei, bracket(ej, ek, mu), lam);
                ModElement rhs = bracket(bracket(ei, ej, lam), ek, lam + mu) +
                                 bracket(ej, bracket(ei, ek, lam), mu);
                ModElement residual = lhs - rhs;
                if (!residual.is_zero())
                    return {false, CheckWitness{{i, j, k}, residual}};
            }
        }
    }
    return {};
}

ConformalAlgebra make_vir() {
    ModElement entry(1);
    entry.comps[0] = pvar(Var::D) + pconst(2) * pvar(Var::LAM);
    return ConformalAlgebra({"L"}, {{entry}});
}

ConformalAlgebra make_cur(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<std::vector<ModElement>> table(n, std::vector<ModElement>(n, ModElement(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) table[i][j].comps[k] = Poly(g.c(i, j, k));
    return ConformalAlgebra(g.basis_names(), std::move(table));
}

ConformalAlgebra direct_sum(const ConformalAlgebra& a, const ConformalAlgebra& b) {
    const int ra = a.rank(), rb = b.rank(), n = ra + rb;
    // Keep original generator names when the two summands do not collide;
    // otherwise disambiguate with _1/_2 so the result stays renderable.
    bool collide = false;
    for (const auto& s : a.gen_names())
        for (const auto& t : b.gen_names())
            if (s == t) collide = true;
    std::vector<std::string> names;
    for (const auto& s : a.gen_names()) names.push_back(collide ? s + "_1" : s);
    for (const auto& s : b.gen_names()) names.push_back(collide ? s + "_2" : s);
    std::vector<std::vector<ModElement>> table(n, std::vector<ModElement>(n, ModElement(n)));
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < ra; ++j)
            for (int k = 0; k < ra; ++k) table[i][j].comps[k] = a.table(i, j).comps[k];
    for (int i = 0; i < rb; ++i)
        for (int j = 0; j < rb; ++j)
            for (int k = 0; k < rb; ++k)
                table[ra + i][ra + j].comps[ra + k] = b.table(i, j).comps[k];
    return ConformalAlgebra(std::move(names), std::move(table));
}

}  // namespace lca
