#include "lca/liealgebra.hpp"

#include "lca/errors.hpp"

namespace lca {

LieAlgebra LieAlgebra::make(std::vector<std::string> basis_names,
                            std::vector<std::vector<QVector>> constants) {
    const int n = static_cast<int>(basis_names.size());
    if (static_cast<int>(constants.size()) != n)
        throw Error(ErrorCode::RANK_MISMATCH, "structure constant table not dim x dim");
    for (const auto& row : constants) {
        if (static_cast<int>(row.size()) != n)
            throw Error(ErrorCode::RANK_MISMATCH, "structure constant table not rectangular");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != n)
                throw Error(ErrorCode::RANK_MISMATCH, "structure constant vector length != dim");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (constants[i][j][k] != -constants[j][i][k])
                    throw Error(ErrorCode::NOT_ANTISYMMETRIC,
                                "c[" + std::to_string(i) + "][" + std::to_string(j) + "]");

    LieAlgebra g;
    g.dim_ = n;
    g.names_ = std::move(basis_names);
    g.c_ = std::move(constants);

    // Jacobi on basis triples: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                QVector ei(n, Rational(0)), ej(n, Rational(0)), ek(n, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                QVector s = g.bracket(g.bracket(ei, ej), ek);
                QVector t = g.bracket(g.bracket(ej, ek), ei);
                QVector u = g.bracket(g.bracket(ek, ei), ej);
                for (int l = 0; l < n; ++l) {
                    if (s[l] + t[l] + u[l] != 0)
                        throw Error(ErrorCode::JACOBI_FAILS,
                                    "triple (" + std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
                }
            }
        }
    }
    return g;
}

QVector LieAlgebra::bracket(const QVector& u, const QVector& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw Error(ErrorCode::RANK_MISMATCH, "lie_bracket: vector length != dim");
    QVector r(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j] == 0) continue;
            for (int k = 0; k < dim_; ++k) r[k] += u[i] * v[j] * c_[i][j][k];
        }
    }
    return r;
}

std::vector<QVector> LieAlgebra::center() const {
    // Stack the ad-matrices: z central iff ad(z) e_j = 0 for all j.
    QMatrix m(dim_ * dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
            for (int i = 0; i < dim_; ++i) m.a[j * dim_ + k][i] = c_[i][j][k];
    return nullspace_q(m);
}

bool LieAlgebra::is_perfect() const {
    std::vector<QVector> rows;
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j) rows.push_back(c_[i][j]);
    return rank_q(rows) == dim_;
}

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

Mat3 commutator(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return r;
}

}  // namespace

LieAlgebra make_sl2() {
    // Basis e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    const int E = 0, F = 1, H = 2;
    std::vector<std::vector<QVector>> c(3, std::vector<QVector>(3, QVector(3, Rational(0))));
    c[E][F][H] = 1;
    c[F][E][H] = -1;
    c[H][E][E] = 2;
    c[E][H][E] = -2;
    c[H][F][F] = -2;
    c[F][H][F] = 2;
    return LieAlgebra::make({"e", "f", "h"}, std::move(c));
}

LieAlgebra make_sl3() {
    // Chevalley basis realized by matrix units in sl(3).
    auto unit = [](int i, int j) {
        Mat3 m{};
        m[i][j] = 1;
        return m;
    };
    std::vector<Mat3> basis(8);
    std::vector<std::string> names = {"e1", "e2", "e12", "f1", "f2", "f12", "h1", "h2"};
    basis[0] = unit(0, 1);
    basis[1] = unit(1, 2);
    basis[2] = unit(0, 2);
    basis[3] = unit(1, 0);
    basis[4] = unit(2, 1);
    basis[5] = unit(2, 0);
    Mat3 h1{}, h2{};
    h1[0][0] = 1;
    h1[1][1] = -1;
    h2[1][1] = 1;
    h2[2][2] = -1;
    basis[6] = h1;
    basis[7] = h2;

    auto coords = [&](const Mat3& m) {
        QVector v(8, Rational(0));
        v[0] = m[0][1];
        v[1] = m[1][2];
        v[2] = m[0][2];
        v[3] = m[1][0];
        v[4] = m[2][1];
        v[5] = m[2][0];
        v[6] = m[0][0];
        v[7] = -m[2][2];
        return v;
    };

    std::vector<std::vector<QVector>> c(8, std::vector<QVector>(8, QVector(8, Rational(0))));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) c[i][j] = coords(commutator(basis[i], basis[j]));
    return LieAlgebra::make(std::move(names), std::move(c));
}

LieAlgebra make_abelian(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i + 1));
    std::vector<std::vector<QVector>> c(dim,
                                        std::vector<QVector>(dim, QVector(dim, Rational(0))));
    return LieAlgebra::make(std::move(names), std::move(c));
}

LieAlgebra make_heisenberg() {
    std::vector<std::vector<QVector>> c(3, std::vector<QVector>(3, QVector(3, Rational(0))));
    c[0][1][2] = 1;
    c[1][0][2] = -1;
    return LieAlgebra::make({"p", "q", "z"}, std::move(c));
}

}  // namespace lca
