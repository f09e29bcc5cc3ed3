#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lca/liealgebra.hpp"
#include "lca/modelement.hpp"

namespace lca {

// Witness of a failed axiom check: the offending generator tuple and the
// nonzero residual.
struct CheckWitness {
    std::vector<int> generators;
    ModElement residual;
};

struct CheckResult {
    bool ok = true;
    std::optional<CheckWitness> witness;
    explicit operator bool() const { return ok; }
};

// Finite Lie conformal algebra as a rank-r free Q[D]-module with a
// lambda-bracket table on generators; all other brackets follow from
// sesquilinearity: [p(D)a_w q(D)b] = p(-w) q(w+D) [a_w b].
class ConformalAlgebra {
public:
    ConformalAlgebra(std::vector<std::string> gen_names,
                     std::vector<std::vector<ModElement>> table);

    int rank() const { return rank_; }
    const std::vector<std::string>& gen_names() const { return names_; }
    const ModElement& table(int i, int j) const { return table_[i][j]; }

    // Max D / LAM degree appearing across the table (used for solver bounds).
    int table_deg_d() const;
    int table_deg_lam() const;

    // True iff every table entry is constant (no D, no LAM): a current algebra.
    bool is_current() const;
    // The underlying Lie algebra of a current-shaped table.
    LieAlgebra current_lie(const std::vector<std::string>* names = nullptr) const;

    // [a_omega b] for an arbitrary polynomial bracket parameter omega.
    // Callers are responsible for avoiding variable capture; the public
    // Var overload rejects it.
    ModElement bracket(const ModElement& a, const ModElement& b, const Poly& omega) const;
    ModElement bracket(const ModElement& a, const ModElement& b, Var outer) const;

    CheckResult check_skew() const;
    CheckResult check_jacobi() const;

private:
    int rank_;
    std::vector<std::string> names_;
    std::vector<std::vector<ModElement>> table_;
};

ConformalAlgebra make_vir();
ConformalAlgebra make_cur(const LieAlgebra& g);
ConformalAlgebra direct_sum(const ConformalAlgebra& a, const ConformalAlgebra& b);

}  // namespace lca
