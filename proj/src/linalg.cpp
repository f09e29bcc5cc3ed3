#include "lca/linalg.hpp"

#include <algorithm>

namespace lca {

namespace {

Integer pivot_weight(const Rational& r) {
    Integer w = num(r) * den(r);
    return w < 0 ? Integer(-w) : w;
}

}  // namespace

std::vector<int> rref_rows(std::vector<QVector>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int cols = static_cast<int>(rows[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c] == 0) continue;
            if (sel < 0 || pivot_weight(rows[i][c]) < pivot_weight(rows[sel][c])) sel = i;
        }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][c];
        for (auto& e : rows[r]) e *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::vector<QVector> nullspace_q(const QMatrix& m) {
    std::vector<QVector> rows = m.a;
    std::vector<int> pivots = rref_rows(rows);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve_q(const QMatrix& a, const QVector& b, int* kernel_dim) {
    std::vector<QVector> rows(a.rows, QVector(a.cols + 1, Rational(0)));
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) rows[i][j] = a.a[i][j];
        rows[i][a.cols] = b[i];
    }
    std::vector<int> pivots = rref_rows(rows);
    if (kernel_dim) {
        int rank = 0;
        for (int c : pivots)
            if (c < a.cols) ++rank;
        *kernel_dim = a.cols - rank;
    }
    QVector x(a.cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols) return std::nullopt;  // 0 = 1 row
        x[pivots[r]] = rows[r][a.cols];
    }
    return x;
}

// ---------------------------------------------------------------------------
// Univariate helpers.
// ---------------------------------------------------------------------------

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

static void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly uadd(const UPoly& p, const UPoly& q) {
    UPoly r = p;
    if (r.size() < q.size()) r.resize(q.size(), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    utrim(r);
    return r;
}

UPoly usub(const UPoly& p, const UPoly& q) {
    UPoly r = p;
    if (r.size() < q.size()) r.resize(q.size(), Rational(0));
    for (size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
    utrim(r);
    return r;
}

UPoly umul(const UPoly& p, const UPoly& q) {
    if (p.empty() || q.empty()) return {};
    UPoly r(p.size() + q.size() - 1, Rational(0));
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    utrim(r);
    return r;
}

void udivmod(const UPoly& p, const UPoly& q, UPoly& quot, UPoly& rem) {
    rem = p;
    quot.clear();
    if (q.empty()) throw std::invalid_argument("udivmod: division by zero polynomial");
    if (udeg(rem) >= udeg(q)) quot.assign(udeg(rem) - udeg(q) + 1, Rational(0));
    while (udeg(rem) >= udeg(q)) {
        int shift = udeg(rem) - udeg(q);
        Rational f = rem.back() / q.back();
        quot[shift] = f;
        for (size_t i = 0; i < q.size(); ++i) rem[i + shift] -= f * q[i];
        utrim(rem);
    }
}

UPoly to_upoly(const Poly& p) {
    UPoly r(p.degree_in(Var::D) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        for (int i = 1; i < kNumVars; ++i)
            if (m[i] != 0)
                throw std::invalid_argument("to_upoly: entry not univariate in D: " + p.to_string());
        r[m[static_cast<int>(Var::D)]] = c;
    }
    utrim(r);
    return r;
}

Poly from_upoly(const UPoly& p) {
    Poly r;
    for (size_t i = 0; i < p.size(); ++i) {
        Mono m{};
        m[static_cast<int>(Var::D)] = static_cast<int>(i);
        r += Poly::term(p[i], m);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hermite normal form over Q[D].
// ---------------------------------------------------------------------------

namespace {

using URow = std::vector<UPoly>;  // one generator, length = ambient rank

void row_axpy(URow& target, const URow& src, const UPoly& q) {
    // target -= q * src
    for (size_t i = 0; i < target.size(); ++i)
        target[i] = usub(target[i], umul(q, src[i]));
}

bool row_zero(const URow& r) {
    for (const auto& p : r)
        if (!p.empty()) return false;
    return true;
}

// Echelonizes gens in place; ops, when nonnull, receives the same row
// operations (used for syzygy extraction in intersect).
void hnf_rows(std::vector<URow>& gens, std::vector<URow>* ops, int ambient_rank) {
    int r = 0;
    const int n = ambient_rank;
    for (int col = 0; col < n && r < static_cast<int>(gens.size()); ++col) {
        // Euclidean elimination below row r at this column.
        while (true) {
            int sel = -1;
            int others = 0;
            for (int i = r; i < static_cast<int>(gens.size()); ++i) {
                if (gens[i][col].empty()) continue;
                ++others;
                if (sel < 0 || udeg(gens[i][col]) < udeg(gens[sel][col])) sel = i;
            }
            if (sel < 0) break;
            std::swap(gens[r], gens[sel]);
            if (ops) std::swap((*ops)[r], (*ops)[sel]);
            if (others == 1) break;
            for (int i = r + 1; i < static_cast<int>(gens.size()); ++i) {
                if (gens[i][col].empty()) continue;
                UPoly q, rem;
                udivmod(gens[i][col], gens[r][col], q, rem);
                row_axpy(gens[i], gens[r], q);
                if (ops) row_axpy((*ops)[i], (*ops)[r], q);
            }
        }
        if (gens[r][col].empty()) continue;
        // Monic pivot.
        Rational lead = gens[r][col].back();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            for (auto& p : gens[r])
                for (auto& c : p) c *= inv;
            if (ops)
                for (auto& p : (*ops)[r])
                    for (auto& c : p) c *= inv;
        }
        // Reduce earlier generators at this pivot row below the pivot degree.
        for (int i = 0; i < r; ++i) {
            if (udeg(gens[i][col]) < udeg(gens[r][col])) continue;
            UPoly q, rem;
            udivmod(gens[i][col], gens[r][col], q, rem);
            row_axpy(gens[i], gens[r], q);
            if (ops) row_axpy((*ops)[i], (*ops)[r], q);
        }
        ++r;
    }
}

URow to_urow(const PolyColumn& c) {
    URow r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = to_upoly(c[i]);
    return r;
}

PolyColumn from_urow(const URow& r) {
    PolyColumn c(r.size());
    for (size_t i = 0; i < r.size(); ++i) c[i] = from_upoly(r[i]);
    return c;
}

}  // namespace

SubmoduleBasis hnf(int ambient_rank, const std::vector<PolyColumn>& columns) {
    std::vector<URow> gens;
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != ambient_rank)
            throw Error(ErrorCode::RANK_MISMATCH, "hnf column length != ambient rank");
        URow r = to_urow(col);
        if (!row_zero(r)) gens.push_back(std::move(r));
    }
    hnf_rows(gens, nullptr, ambient_rank);
    SubmoduleBasis out;
    out.ambient_rank = ambient_rank;
    for (const auto& g : gens)
        if (!row_zero(g)) out.gens.push_back(from_urow(g));
    return out;
}

bool member(const PolyColumn& v, const SubmoduleBasis& s) {
    if (static_cast<int>(v.size()) != s.ambient_rank)
        throw Error(ErrorCode::RANK_MISMATCH, "member: vector length != ambient rank");
    URow rem = to_urow(v);
    for (const auto& gen : s.gens) {
        URow g = to_urow(gen);
        int pivot = 0;
        while (pivot < s.ambient_rank && g[pivot].empty()) ++pivot;
        if (pivot == s.ambient_rank) continue;
        if (rem[pivot].empty()) continue;
        UPoly q, r;
        udivmod(rem[pivot], g[pivot], q, r);
        row_axpy(rem, g, q);
    }
    return row_zero(rem);
}

SubmoduleBasis intersect(const SubmoduleBasis& s1, const SubmoduleBasis& s2) {
    if (s1.ambient_rank != s2.ambient_rank)
        throw Error(ErrorCode::RANK_MISMATCH, "intersect: ambient ranks differ");
    const int n = s1.ambient_rank;
    const int k1 = static_cast<int>(s1.gens.size());
    const int k2 = static_cast<int>(s2.gens.size());

    // Syzygies of the stacked generators: coefficient rows u with
    // sum_l u_l * gen_l = 0 yield intersection elements via the s1 part.
    std::vector<URow> stacked;
    std::vector<URow> ops;
    for (int l = 0; l < k1 + k2; ++l) {
        stacked.push_back(to_urow(l < k1 ? s1.gens[l] : s2.gens[l - k1]));
        URow e(k1 + k2);
        e[l] = UPoly{Rational(1)};
        ops.push_back(std::move(e));
    }
    hnf_rows(stacked, &ops, n);

    std::vector<PolyColumn> elems;
    for (size_t i = 0; i < stacked.size(); ++i) {
        if (!row_zero(stacked[i])) continue;
        URow elem(n);
        for (int l = 0; l < k1; ++l) {
            URow scaled = to_urow(s1.gens[l]);
            for (auto& p : scaled) p = umul(p, ops[i][l]);
            for (int j = 0; j < n; ++j) elem[j] = uadd(elem[j], scaled[j]);
        }
        if (!row_zero(elem)) elems.push_back(from_urow(elem));
    }
    return hnf(n, elems);
}

}  // namespace lca
