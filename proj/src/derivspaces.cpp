#include "lca/derivspaces.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "lca/linalg.hpp"

namespace lca {

namespace {

const Poly kLam = pvar(Var::LAM);
const Poly kMu = pvar(Var::MU);
const Poly kX = pvar(Var::X);

ModElement act(const PolyMat& m, const ModElement& a) { return conf_act(m, kX, a); }

// The building blocks of the triple identities, for generators a = e_i,
// b = e_j, c = e_k and a map matrix F:
//   lhs(F) = F_x([[a_lam b]_{lam+mu} c])
//   ta(F)  = [[F_x(a)_{lam+x} b]_{lam+mu+x} c]
//   tb(F)  = [[a_lam F_x(b)]_{lam+mu+x} c]
//   tc_(F) = [[a_lam b]_{lam+mu} F_x(c)]
struct TripleCtx {
    const ConformalAlgebra& A;
    ModElement a, b, c;
    ModElement inner;  // [a_lam b]
    ModElement outer;  // [[a_lam b]_{lam+mu} c]

    TripleCtx(const ConformalAlgebra& alg, int i, int j, int k)
        : A(alg),
          a(ModElement::unit(alg.rank(), i)),
          b(ModElement::unit(alg.rank(), j)),
          c(ModElement::unit(alg.rank(), k)),
          inner(alg.bracket(a, b, kLam)),
          outer(alg.bracket(inner, c, kLam + kMu)) {}

    ModElement lhs(const PolyMat& f) const { return act(f, outer); }
    ModElement ta(const PolyMat& f) const {
        return A.bracket(A.bracket(act(f, a), b, kLam + kX), c, kLam + kMu + kX);
    }
    ModElement tb(const PolyMat& f) const {
        return A.bracket(A.bracket(a, act(f, b), kLam), c, kLam + kMu + kX);
    }
    ModElement tc_(const PolyMat& f) const { return A.bracket(inner, act(f, c), kLam + kMu); }
};

ModElement cder_residual(const ConformalAlgebra& A, const PolyMat& f, int i, int j) {
    ModElement a = ModElement::unit(A.rank(), i), b = ModElement::unit(A.rank(), j);
    return act(f, A.bracket(a, b, kLam)) - A.bracket(act(f, a), b, kLam + kX) -
           A.bracket(a, act(f, b), kLam);
}

// Residual blocks of one equation kind on one generator triple; a solution
// makes every block vanish identically.
std::vector<ModElement> residual_blocks(const TripleCtx& t, EquationKind kind, const PolyMat& f,
                                        const PolyMat& tau) {
    switch (kind) {
        case EquationKind::CTDER:
            return {t.lhs(f) - t.ta(f) - t.tb(f) - t.tc_(f)};
        case EquationKind::GCTDER:
            return {t.lhs(tau) - t.ta(tau) - t.tb(tau) - t.tc_(tau),
                    t.lhs(f) - t.ta(f) - t.tb(tau) - t.tc_(tau)};
        case EquationKind::TC:
            return {t.lhs(f) - t.ta(f)};
        case EquationKind::TQC:
            return {t.ta(f) - t.tc_(f)};
        case EquationKind::ZTDER:
            return {t.lhs(f), t.ta(f)};
        default:
            throw std::logic_error("residual_blocks: not a triple kind");
    }
}

bool uses_pairs(EquationKind k) { return k == EquationKind::CDER; }

// Incremental reduced-row-echelon accumulator: only independent residual
// rows are kept, so elimination cost scales with the unknown count rather
// than the raw number of coefficient equations.
struct RowReducer {
    int cols;
    std::map<int, QVector> rows;  // pivot column -> fully reduced row, pivot 1

    explicit RowReducer(int c) : cols(c) {}

    void add(QVector r) {
        for (const auto& [p, row] : rows) {
            if (r[p] == 0) continue;
            Rational c = r[p];
            for (int j = p; j < cols; ++j) r[j] -= c * row[j];
        }
        int piv = -1;
        for (int j = 0; j < cols; ++j)
            if (r[j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return;
        Rational inv = r[piv];
        for (int j = piv; j < cols; ++j) r[j] /= inv;
        for (auto& [p, row] : rows) {
            if (row[piv] == 0) continue;
            Rational c = row[piv];
            for (int j = piv; j < cols; ++j) row[j] -= c * r[j];
        }
        rows.emplace(piv, std::move(r));
    }

    QMatrix matrix() const {
        QMatrix m(static_cast<int>(rows.size()), cols);
        int i = 0;
        for (const auto& [p, row] : rows) m.a[i++] = row;
        return m;
    }
};

// Ansatz grid in the fixed order (i, j, p, q); the nullspace basis is
// deterministic relative to this order.
struct AnsatzEntry {
    int i, j, p, q;
};

std::vector<AnsatzEntry> make_ansatz(int rank, int deg_d, int deg_x) {
    std::vector<AnsatzEntry> out;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int p = 0; p <= deg_d; ++p)
                for (int q = 0; q <= deg_x; ++q) out.push_back({i, j, p, q});
    return out;
}

Poly grid_mono(int p, int q) {
    Mono m{};
    m[static_cast<int>(Var::D)] = p;
    m[static_cast<int>(Var::X)] = q;
    return Poly::term(Rational(1), m);
}

ConformalMap assemble_map(int rank, const std::vector<AnsatzEntry>& az, const QVector& v,
                          int offset) {
    ConformalMap m(rank);
    for (size_t u = 0; u < az.size(); ++u) {
        const Rational& c = v[offset + u];
        if (c == 0) continue;
        m.mat[az[u].i][az[u].j] += c * grid_mono(az[u].p, az[u].q);
    }
    return m;
}

// Coordinates of a map on the ansatz grid; false if some term falls
// outside the grid.
bool grid_coords(const ConformalMap& m, const std::vector<AnsatzEntry>& az, QVector* out) {
    std::map<std::tuple<int, int, int, int>, size_t> index;
    for (size_t u = 0; u < az.size(); ++u) index[{az[u].i, az[u].j, az[u].p, az[u].q}] = u;
    QVector v(az.size(), Rational(0));
    for (int i = 0; i < m.rank; ++i)
        for (int j = 0; j < m.rank; ++j)
            for (const auto& [mono, c] : m.mat[i][j].terms()) {
                int p = mono[static_cast<int>(Var::D)];
                int q = mono[static_cast<int>(Var::X)];
                if (total_degree(mono) != p + q) return false;
                auto it = index.find({i, j, p, q});
                if (it == index.end()) return false;
                v[it->second] = c;
            }
    *out = std::move(v);
    return true;
}

// Coefficient rows of a list of residual elements (one per unknown),
// keyed by (component, monomial), fed into the reducer.
void emit_rows(RowReducer& red, const std::vector<ModElement>& per_unknown, int rank) {
    std::map<std::pair<int, Mono>, QVector> table;
    int n = static_cast<int>(per_unknown.size());
    for (int u = 0; u < n; ++u)
        for (int comp = 0; comp < rank; ++comp)
            for (const auto& [mono, c] : per_unknown[u].comps[comp].terms()) {
                auto [it, ins] = table.try_emplace({comp, mono}, QVector(n, Rational(0)));
                it->second[u] = c;
            }
    for (auto& [key, row] : table) red.add(std::move(row));
}

std::vector<QVector> span_rows(const std::vector<ConformalMap>& maps,
                               const std::vector<AnsatzEntry>& az) {
    std::vector<QVector> rows;
    for (const auto& m : maps) {
        QVector v;
        if (!grid_coords(m, az, &v)) throw std::logic_error("span_rows: map outside ansatz grid");
        rows.push_back(std::move(v));
    }
    return rows;
}

// Q-linear coordinates over an explicit key universe; used where no common
// ansatz grid is available.
using MapKey = std::tuple<int, int, Mono>;

// Entry position first, then the canonical term order, so reduced bases
// keep leading D terms (e.g. ad L stays D + 2x, not rescaled around x).
struct MapKeyOrder {
    bool operator()(const MapKey& a, const MapKey& b) const {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return MonoOrder()(std::get<2>(a), std::get<2>(b));
    }
};

std::vector<QVector> key_rows(const std::vector<const ConformalMap*>& maps,
                              std::vector<MapKey>* keys_out) {
    std::map<MapKey, size_t, MapKeyOrder> index;
    for (const ConformalMap* m : maps)
        for (int i = 0; i < m->rank; ++i)
            for (int j = 0; j < m->rank; ++j)
                for (const auto& [mono, c] : m->mat[i][j].terms())
                    index.emplace(MapKey{i, j, mono}, 0);
    size_t n = 0;
    for (auto& [k, idx] : index) idx = n++;
    std::vector<QVector> rows;
    for (const ConformalMap* m : maps) {
        QVector v(n, Rational(0));
        for (int i = 0; i < m->rank; ++i)
            for (int j = 0; j < m->rank; ++j)
                for (const auto& [mono, c] : m->mat[i][j].terms())
                    v[index.at(MapKey{i, j, mono})] = c;
        rows.push_back(std::move(v));
    }
    if (keys_out) {
        keys_out->resize(n);
        for (const auto& [k, idx] : index) (*keys_out)[idx] = k;
    }
    return rows;
}

bool span_contains(const std::vector<ConformalMap>& basis, const ConformalMap& phi) {
    if (phi.is_zero()) return true;
    std::vector<const ConformalMap*> all;
    for (const auto& b : basis) all.push_back(&b);
    all.push_back(&phi);
    auto rows = key_rows(all, nullptr);
    std::vector<QVector> basis_rows(rows.begin(), rows.end() - 1);
    return rank_q(rows) == rank_q(basis_rows);
}

void post_verify(const ConformalAlgebra& A, const SolutionSpace& s) {
    for (size_t k = 0; k < s.basis.size(); ++k) {
        std::optional<ConformalMap> tau;
        if (s.kind == EquationKind::GCTDER) tau = s.tau_basis[k];
        if (!satisfies(A, s.basis[k], s.kind, tau).ok)
            throw std::logic_error("solve_space: post-verification failed");
    }
}

SolutionSpace solve_joint_gctder(const ConformalAlgebra& A, int deg_d, int deg_x);

}  // namespace

const char* equation_kind_name(EquationKind k) {
    switch (k) {
        case EquationKind::CDER: return "cder";
        case EquationKind::CTDER: return "ctder";
        case EquationKind::GCTDER: return "gctder";
        case EquationKind::TC: return "tc";
        case EquationKind::TQC: return "tqc";
        case EquationKind::ZTDER: return "ztder";
        case EquationKind::CINN_MEMBER: return "cinn";
    }
    return "unknown";
}

std::optional<EquationKind> equation_kind_from_string(const std::string& s) {
    for (EquationKind k : {EquationKind::CDER, EquationKind::CTDER, EquationKind::GCTDER,
                           EquationKind::TC, EquationKind::TQC, EquationKind::ZTDER})
        if (s == equation_kind_name(k)) return k;
    return std::nullopt;
}

CheckResult satisfies(const ConformalAlgebra& A, const ConformalMap& phi, EquationKind kind,
                      const std::optional<ConformalMap>& tau) {
    if (phi.rank != A.rank())
        throw Error(ErrorCode::RANK_MISMATCH, "satisfies: map rank " + std::to_string(phi.rank) +
                                                  " vs algebra rank " + std::to_string(A.rank()));
    if (kind == EquationKind::GCTDER && !tau)
        throw Error(ErrorCode::MISSING_TAU, "GCTDER requires the related triple derivation");
    if (tau && tau->rank != A.rank())
        throw Error(ErrorCode::RANK_MISMATCH, "satisfies: tau rank mismatch");
    if (kind == EquationKind::CINN_MEMBER)
        throw std::logic_error("CINN_MEMBER is a membership question; use space_contains");

    int r = A.rank();
    PolyMat zero(r, std::vector<Poly>(r));
    const PolyMat& tmat = tau ? tau->mat : zero;

    auto fail = [&](std::vector<int> gens, const ModElement& res) {
        CheckResult out;
        out.ok = false;
        out.witness = CheckWitness{std::move(gens), res};
        return out;
    };

    if (uses_pairs(kind)) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                ModElement res = cder_residual(A, phi.mat, i, j);
                if (!res.is_zero()) return fail({i, j}, res);
            }
        return {};
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                TripleCtx t(A, i, j, k);
                for (const ModElement& res : residual_blocks(t, kind, phi.mat, tmat))
                    if (!res.is_zero()) return fail({i, j, k}, res);
            }
    return {};
}

SolutionSpace solve_space(const ConformalAlgebra& A, EquationKind kind, int deg_d, int deg_x) {
    if (deg_d < 0 || deg_x < 0) throw std::invalid_argument("solve_space: negative bounds");
    if (kind == EquationKind::CINN_MEMBER)
        throw std::logic_error("CINN_MEMBER is a membership question; use space_contains");
    if (kind == EquationKind::GCTDER) return solve_joint_gctder(A, deg_d, deg_x);

    int r = A.rank();
    auto az = make_ansatz(r, deg_d, deg_x);
    int n = static_cast<int>(az.size());
    PolyMat zero(r, std::vector<Poly>(r));

    auto basis_mat = [&](int u) {
        PolyMat m = zero;
        m[az[u].i][az[u].j] = grid_mono(az[u].p, az[u].q);
        return m;
    };

    RowReducer red(n);
    if (uses_pairs(kind)) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                std::vector<ModElement> per_unknown;
                per_unknown.reserve(n);
                for (int u = 0; u < n; ++u) per_unknown.push_back(cder_residual(A, basis_mat(u), i, j));
                emit_rows(red, per_unknown, r);
            }
    } else {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) {
                    TripleCtx t(A, i, j, k);
                    std::vector<std::vector<ModElement>> blocks;
                    for (int u = 0; u < n; ++u) {
                        auto res = residual_blocks(t, kind, basis_mat(u), zero);
                        blocks.resize(res.size());
                        for (size_t blk = 0; blk < res.size(); ++blk)
                            blocks[blk].push_back(std::move(res[blk]));
                    }
                    for (const auto& blk : blocks) emit_rows(red, blk, r);
                }
    }

    SolutionSpace out{A, kind, deg_d, deg_x, {}, {}};
    for (const QVector& v : nullspace_q(red.matrix())) out.basis.push_back(assemble_map(r, az, v, 0));
    post_verify(A, out);
    return out;
}

namespace {

SolutionSpace solve_joint_gctder(const ConformalAlgebra& A, int deg_d, int deg_x) {
    int r = A.rank();
    auto az = make_ansatz(r, deg_d, deg_x);
    int n = static_cast<int>(az.size());
    PolyMat zero(r, std::vector<Poly>(r));

    RowReducer red(2 * n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                TripleCtx t(A, i, j, k);
                std::vector<std::vector<ModElement>> blocks(2);
                for (int u = 0; u < 2 * n; ++u) {
                    PolyMat f = zero, tau = zero;
                    const auto& e = az[u % n];
                    (u < n ? f : tau)[e.i][e.j] = grid_mono(e.p, e.q);
                    auto res = residual_blocks(t, EquationKind::GCTDER, f, tau);
                    blocks[0].push_back(std::move(res[0]));
                    blocks[1].push_back(std::move(res[1]));
                }
                for (const auto& blk : blocks) emit_rows(red, blk, r);
            }

    // Reduce the joint kernel so pivots land in the phi half first, then
    // drop the pure-tau rows: phi = 0 contributes nothing to the space.
    std::vector<QVector> rows = nullspace_q(red.matrix());
    rref_rows(rows);
    SolutionSpace out{A, EquationKind::GCTDER, deg_d, deg_x, {}, {}};
    for (const QVector& v : rows) {
        ConformalMap phi = assemble_map(r, az, v, 0);
        if (phi.is_zero()) continue;
        out.basis.push_back(phi);
        out.tau_basis.push_back(assemble_map(r, az, v, n));
    }
    post_verify(A, out);

    // Cross-check: the phi span must equal span(CTDER) + span(TC); a
    // discrepancy is a solver bug, not a data condition.
    SolutionSpace ct = solve_space(A, EquationKind::CTDER, deg_d, deg_x);
    SolutionSpace tc = solve_space(A, EquationKind::TC, deg_d, deg_x);
    std::vector<ConformalMap> alt = ct.basis;
    alt.insert(alt.end(), tc.basis.begin(), tc.basis.end());
    auto joint_rows = span_rows(out.basis, az);
    auto alt_rows = span_rows(alt, az);
    int rj = rank_q(joint_rows), ra = rank_q(alt_rows);
    std::vector<QVector> both = joint_rows;
    both.insert(both.end(), alt_rows.begin(), alt_rows.end());
    if (rj != ra || rank_q(both) != rj)
        throw std::logic_error("GCTDER joint solve disagrees with CTDER + TC span");
    return out;
}

}  // namespace

SolutionSpace inner_space(const ConformalAlgebra& A, int deg_x) {
    if (deg_x < 0) throw std::invalid_argument("inner_space: negative bound");
    int r = A.rank();
    std::vector<ConformalMap> candidates;
    for (int m = 0; m <= deg_x; ++m)
        for (int i = 0; i < r; ++i)
            candidates.push_back(ad_map(A, ModElement::unit(r, i)).scaled(kX.pow(m)));

    std::vector<const ConformalMap*> ptrs;
    for (const auto& c : candidates) ptrs.push_back(&c);
    std::vector<MapKey> keys;
    auto rows = key_rows(ptrs, &keys);
    rref_rows(rows);

    SolutionSpace out{A, EquationKind::CINN_MEMBER, 0, 0, {}, {}};
    for (const QVector& v : rows) {
        ConformalMap m(r);
        for (size_t t = 0; t < keys.size(); ++t) {
            if (v[t] == 0) continue;
            auto [i, j, mono] = keys[t];
            m.mat[i][j] += Poly::term(v[t], mono);
        }
        out.deg_d = std::max(out.deg_d, m.deg_d());
        out.deg_x = std::max(out.deg_x, m.deg_x());
        out.basis.push_back(std::move(m));
    }
    return out;
}

bool space_contains(const SolutionSpace& S, const ConformalMap& phi) {
    if (phi.rank != S.algebra.rank()) return false;
    if (phi.deg_d() > S.deg_d || phi.deg_x() > S.deg_x) return false;
    return span_contains(S.basis, phi);
}

bool space_equal(const SolutionSpace& s1, const SolutionSpace& s2) {
    for (const auto& m : s1.basis)
        if (!span_contains(s2.basis, m)) return false;
    for (const auto& m : s2.basis)
        if (!span_contains(s1.basis, m)) return false;
    return true;
}

int quotient_dimension(const SolutionSpace& S, const SolutionSpace& T) {
    std::vector<const ConformalMap*> all;
    for (const auto& m : T.basis) all.push_back(&m);
    for (const auto& m : S.basis) all.push_back(&m);
    auto rows = key_rows(all, nullptr);
    std::vector<QVector> t_rows(rows.begin(),
                                rows.begin() + static_cast<std::ptrdiff_t>(T.basis.size()));
    return rank_q(rows) - rank_q(t_rows);
}

bool center_is_zero(const ConformalAlgebra& A, int deg_bound) {
    int r = A.rank();
    int n = r * (deg_bound + 1);
    RowReducer red(n);
    for (int j = 0; j < r; ++j) {
        std::vector<ModElement> per_unknown;
        per_unknown.reserve(n);
        for (int i = 0; i < r; ++i)
            for (int p = 0; p <= deg_bound; ++p) {
                ModElement z = pvar(Var::D).pow(p) * ModElement::unit(r, i);
                per_unknown.push_back(A.bracket(z, ModElement::unit(r, j), kLam));
            }
        emit_rows(red, per_unknown, r);
    }
    return nullspace_q(red.matrix()).empty();
}

ConformalMap delta_phi(const ConformalAlgebra& A, const ConformalMap& phi) {
    if (phi.rank != A.rank()) throw Error(ErrorCode::RANK_MISMATCH, "delta_phi: rank mismatch");
    if (!center_is_zero(A, A.table_deg_d() + 2))
        throw Error(ErrorCode::CENTER_NONZERO, "delta_phi needs a trivial center");

    int r = A.rank();
    int td = std::max(A.table_deg_d(), 0);
    int dd = std::max(phi.deg_d(), 0) + td;
    int dx = std::max(phi.deg_x(), 0) + td;

    for (int attempt = 0; attempt < 2; ++attempt, dd += 2, dx += 2) {
        auto az = make_ansatz(r, dd, dx);
        int n = static_cast<int>(az.size());

        std::vector<QVector> arows;
        QVector b;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                ModElement ei = ModElement::unit(r, i), ej = ModElement::unit(r, j);
                // [delta(e_i)_{lam+x} e_j] = phi_x([e_i_lam e_j]) - [e_i_lam phi_x(e_j)]
                ModElement rhs = conf_act(phi.mat, kX, A.bracket(ei, ej, kLam)) -
                                 A.bracket(ei, conf_act(phi.mat, kX, ej), kLam);
                std::vector<ModElement> per_unknown;
                per_unknown.reserve(n);
                for (int u = 0; u < n; ++u) {
                    if (az[u].j != i) {
                        per_unknown.emplace_back(r);
                        continue;
                    }
                    ModElement col(r);
                    col.comps[az[u].i] = grid_mono(az[u].p, az[u].q);
                    per_unknown.push_back(A.bracket(col, ej, kLam + kX));
                }
                std::map<std::pair<int, Mono>, size_t> index;
                auto note = [&](const ModElement& e) {
                    for (int comp = 0; comp < r; ++comp)
                        for (const auto& [mono, c] : e.comps[comp].terms())
                            index.emplace(std::pair<int, Mono>{comp, mono}, 0);
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
        if (kernel_dim > 0) throw Error(ErrorCode::CENTER_NONZERO, "delta_phi: solution not unique");
        ConformalMap delta = assemble_map(r, az, *sol, 0);
        if (satisfies(A, delta, EquationKind::CDER).ok) return delta;
    }
    throw Error(ErrorCode::NO_SOLUTION,
                "delta_phi: no conformal derivation matches the defining relation");
}

}  // namespace lca
