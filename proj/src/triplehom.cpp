#include "lca/triplehom.hpp"

#include <algorithm>
#include <map>

namespace lca {

namespace {

const Poly kLam = pvar(Var::LAM);
const Poly kMu = pvar(Var::MU);

void check_ranks(const ConformalAlgebra& A, const ConformalAlgebra& B, const ModuleMap& f,
                 const char* who) {
    if (f.in_rank != A.rank() || f.out_rank != B.rank())
        throw Error(ErrorCode::RANK_MISMATCH,
                    std::string(who) + ": map is " + std::to_string(f.out_rank) + "x" +
                        std::to_string(f.in_rank) + " against ranks " + std::to_string(B.rank()) +
                        " <- " + std::to_string(A.rank()));
}

CheckResult fail_at(std::vector<int> gens, const ModElement& res) {
    CheckResult out;
    out.ok = false;
    out.witness = CheckWitness{std::move(gens), res};
    return out;
}

// Split an element of B[lam] into its lam-power strata: component polys
// in D only, one column per lam exponent.
std::vector<PolyColumn> lam_strata(const ModElement& w) {
    int max_t = -1;
    for (const auto& p : w.comps) max_t = std::max(max_t, p.degree_in(Var::LAM));
    if (max_t < 0 && !w.is_zero()) max_t = 0;
    std::vector<PolyColumn> out;
    for (int t = 0; t <= max_t; ++t) out.emplace_back(w.rank());
    for (int c = 0; c < w.rank(); ++c)
        for (const auto& [mono, coeff] : w.comps[c].terms()) {
            int t = mono[static_cast<int>(Var::LAM)];
            Mono stripped = mono;
            stripped[static_cast<int>(Var::LAM)] = 0;
            out[t][c] += Poly::term(coeff, stripped);
        }
    return out;
}

ModElement column_elem(const PolyColumn& c) { return ModElement(std::vector<Poly>(c)); }

}  // namespace

const char* map_kind_name(MapKind k) {
    switch (k) {
        case MapKind::HOM: return "HOM";
        case MapKind::ANTIHOM: return "ANTIHOM";
        case MapKind::TRIPLEHOM: return "TRIPLEHOM";
    }
    return "UNKNOWN";
}

const char* split_label_name(SplitLabel l) {
    switch (l) {
        case SplitLabel::HOM: return "HOM";
        case SplitLabel::ANTIHOM: return "ANTIHOM";
        case SplitLabel::DIRECT_SUM: return "DIRECT_SUM";
    }
    return "UNKNOWN";
}

CheckResult modmap_kind(const ConformalAlgebra& A, const ConformalAlgebra& B, const ModuleMap& f,
                        MapKind kind) {
    check_ranks(A, B, f, "modmap_kind");
    int r = A.rank();
    auto fu = [&](int i) { return f.apply(ModElement::unit(r, i)); };

    if (kind != MapKind::TRIPLEHOM) {
        Rational sign = kind == MapKind::HOM ? 1 : -1;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                ModElement a = ModElement::unit(r, i), b = ModElement::unit(r, j);
                ModElement res =
                    f.apply(A.bracket(a, b, kLam)) - sign * Poly(1L) * B.bracket(fu(i), fu(j), kLam);
                if (!res.is_zero()) return fail_at({i, j}, res);
            }
        return {};
    }

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                ModElement a = ModElement::unit(r, i), b = ModElement::unit(r, j);
                ModElement c = ModElement::unit(r, k);
                ModElement res = f.apply(A.bracket(a, A.bracket(b, c, kMu), kLam)) -
                                 B.bracket(fu(i), B.bracket(fu(j), fu(k), kMu), kLam);
                if (!res.is_zero()) return fail_at({i, j, k}, res);
                // Equivalent nested form, cross-validated.
                ModElement res2 =
                    f.apply(A.bracket(A.bracket(a, b, kLam), c, kLam + kMu)) -
                    B.bracket(B.bracket(fu(i), fu(j), kLam), fu(k), kLam + kMu);
                if (!res2.is_zero()) return fail_at({i, j, k}, res2);
            }
    return {};
}

SubmoduleBasis enveloping(const ConformalAlgebra& B, const ModuleMap& f) {
    if (f.out_rank != B.rank())
        throw Error(ErrorCode::RANK_MISMATCH, "enveloping: target rank mismatch");
    SubmoduleBasis basis = hnf(B.rank(), f.columns());
    for (;;) {
        std::vector<PolyColumn> cols = basis.gens;
        for (const auto& u : basis.gens)
            for (const auto& v : basis.gens) {
                ModElement w = B.bracket(column_elem(u), column_elem(v), kLam);
                for (auto& stratum : lam_strata(w)) cols.push_back(std::move(stratum));
            }
        SubmoduleBasis next = hnf(B.rank(), cols);
        if (next == basis) return basis;
        basis = std::move(next);
    }
}

bool center_check(const ConformalAlgebra& B, const SubmoduleBasis& E, int deg_bound) {
    if (E.empty()) return true;
    int n = static_cast<int>(E.gens.size()) * (deg_bound + 1);
    // Rows of [z_lam u] coefficients over the unknowns c_{k,p} with
    // z = sum c_{k,p} D^p g_k; trivial kernel means trivial center.
    std::map<std::tuple<int, int, Mono>, QVector> rows;
    for (size_t gu = 0; gu < E.gens.size(); ++gu) {
        ModElement target = column_elem(E.gens[gu]);
        int unknown = 0;
        for (size_t k = 0; k < E.gens.size(); ++k)
            for (int p = 0; p <= deg_bound; ++p, ++unknown) {
                ModElement z = pvar(Var::D).pow(p) * column_elem(E.gens[k]);
                ModElement res = B.bracket(z, target, kLam);
                for (int c = 0; c < res.rank(); ++c)
                    for (const auto& [mono, coeff] : res.comps[c].terms()) {
                        auto [it, ins] = rows.try_emplace({static_cast<int>(gu), c, mono},
                                                          QVector(n, Rational(0)));
                        it->second[unknown] = coeff;
                    }
            }
    }
    QMatrix m(static_cast<int>(rows.size()), n);
    int i = 0;
    for (auto& [key, row] : rows) m.a[i++] = std::move(row);
    return nullspace_q(m).empty();
}

ModuleMap delta_f(const ConformalAlgebra& A, const ConformalAlgebra& B, const ModuleMap& f) {
    check_ranks(A, B, f, "delta_f");
    if (!modmap_kind(A, B, f, MapKind::TRIPLEHOM).ok)
        throw Error(ErrorCode::NOT_TRIPLEHOM, "delta_f requires a triple homomorphism");
    SubmoduleBasis env = enveloping(B, f);
    int bound = std::max(f.deg_d(), 0) + std::max(B.table_deg_d(), 0) + 2;
    if (!center_check(B, env, bound))
        throw Error(ErrorCode::CENTER_NONZERO, "delta_f: enveloping algebra has a center");

    int ra = A.rank(), rb = B.rank();
    int dd = std::max(f.deg_d(), 0) + std::max(B.table_deg_d(), 0);
    auto fu = [&](int j) { return f.apply(ModElement::unit(ra, j)); };

    for (int attempt = 0; attempt < 2; ++attempt, dd += 2) {
        // Unknowns: delta.mat[i][j] = sum_p c_{i,j,p} D^p.
        int n = rb * ra * (dd + 1);
        auto unknown_index = [&](int i, int j, int p) { return (i * ra + j) * (dd + 1) + p; };

        std::vector<QVector> arows;
        QVector b;
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < ra; ++j) {
                ModElement rhs = f.apply(
                    A.bracket(ModElement::unit(ra, i), ModElement::unit(ra, j), kLam));
                std::vector<ModElement> per_unknown(n, ModElement(rb));
                for (int bi = 0; bi < rb; ++bi)
                    for (int p = 0; p <= dd; ++p) {
                        ModElement col(rb);
                        col.comps[bi] = pvar(Var::D).pow(p);
                        per_unknown[unknown_index(bi, i, p)] = B.bracket(col, fu(j), kLam);
                    }
                std::map<std::pair<int, Mono>, size_t> index;
                auto note = [&](const ModElement& e) {
                    for (int c = 0; c < rb; ++c)
                        for (const auto& [mono, coeff] : e.comps[c].terms())
                            index.emplace(std::pair<int, Mono>{c, mono}, 0);
                };
                note(rhs);
                for (const auto& e : per_unknown) note(e);
                for (auto& [key, idx] : index) {
                    idx = arows.size();
                    arows.emplace_back(n, Rational(0));
                    b.emplace_back(0);
                }
                for (const auto& [key, idx] : index) {
                    for (int u = 0; u < n; ++u)
                        arows[idx][u] = per_unknown[u].comps[key.first].coeff(key.second);
                    b[idx] = rhs.comps[key.first].coeff(key.second);
                }
            }

        QMatrix m(static_cast<int>(arows.size()), n);
        m.a = arows;
        int kernel_dim = 0;
        auto sol = solve_q(m, b, &kernel_dim);
        if (!sol) continue;
        if (kernel_dim > 0)
            throw Error(ErrorCode::CENTER_NONZERO, "delta_f: solution not unique");
        ModuleMap delta(rb, ra);
        for (int i = 0; i < rb; ++i)
            for (int j = 0; j < ra; ++j)
                for (int p = 0; p <= dd; ++p) {
                    const Rational& c = (*sol)[unknown_index(i, j, p)];
                    if (c != 0) delta.mat[i][j] += c * pvar(Var::D).pow(p);
                }
        if (modmap_kind(A, B, delta, MapKind::HOM).ok) return delta;
        break;
    }
    throw Error(ErrorCode::NO_SOLUTION, "delta_f: defining relation has no homomorphism solution");
}

Decomposition split_decompose(const ConformalAlgebra& A, const ConformalAlgebra& B,
                              const ModuleMap& f) {
    ModuleMap delta = delta_f(A, B, f);
    ModuleMap f_I = (f + delta).scaled(Rational(1, 2));
    ModuleMap f_J = (f - delta).scaled(Rational(1, 2));
    SubmoduleBasis e_plus = hnf(B.rank(), f_I.columns());
    SubmoduleBasis e_minus = hnf(B.rank(), f_J.columns());

    auto guard = [](bool ok, const char* what) {
        if (!ok) throw Error(ErrorCode::SPLIT_VERIFICATION_FAILED, what);
    };
    guard(f_I + f_J == f, "f_I + f_J != f");
    guard(modmap_kind(A, B, f_I, MapKind::HOM).ok, "f_I is not a homomorphism");
    guard(modmap_kind(A, B, f_J, MapKind::ANTIHOM).ok, "f_J is not an anti-homomorphism");
    for (const auto& u : e_plus.gens)
        for (const auto& v : e_minus.gens)
            guard(B.bracket(column_elem(u), column_elem(v), kLam).is_zero(),
                  "[E+_lam E-] != 0");
    guard(intersect(e_plus, e_minus).empty(), "E+ meets E-");
    for (const auto& c : f_I.columns()) guard(member(c, e_plus), "Im f_I outside E+");
    for (const auto& c : f_J.columns()) guard(member(c, e_minus), "Im f_J outside E-");

    SplitLabel label = f_J.is_zero()   ? SplitLabel::HOM
                       : f_I.is_zero() ? SplitLabel::ANTIHOM
                                       : SplitLabel::DIRECT_SUM;
    return Decomposition{std::move(f_I), std::move(f_J), std::move(e_plus), std::move(e_minus),
                         std::move(delta), label};
}

}  // namespace lca
