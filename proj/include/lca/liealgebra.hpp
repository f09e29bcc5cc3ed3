#pragma once

#include <string>
#include <vector>

#include "lca/linalg.hpp"
#include "lca/rational.hpp"

namespace lca {

// Finite-dimensional Lie algebra by structure constants:
// [e_i, e_j] = sum_k c[i][j][k] e_k. Antisymmetry and the Jacobi identity
// are verified at construction.
class LieAlgebra {
public:
    static LieAlgebra make(std::vector<std::string> basis_names,
                           std::vector<std::vector<QVector>> constants);

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Rational& c(int i, int j, int k) const { return c_[i][j][k]; }

    // Bilinear extension of the structure constants.
    QVector bracket(const QVector& u, const QVector& v) const;

    // Basis of {z : [z, e_i] = 0 for all i}.
    std::vector<QVector> center() const;

    // True iff the span of all [e_i, e_j] is the whole algebra.
    bool is_perfect() const;

private:
    LieAlgebra() = default;
    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<QVector>> c_;
};

// Chevalley-basis constructors used throughout the test corpus.
LieAlgebra make_sl2();
LieAlgebra make_sl3();
LieAlgebra make_abelian(int dim);
LieAlgebra make_heisenberg();  // h3: [x, y] = z

}  // namespace lca
