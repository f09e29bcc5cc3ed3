#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lca/confalgebra.hpp"
#include "lca/confmap.hpp"

namespace lca {

// The six derivation-like equation kinds. CINN_MEMBER is a membership
// question against inner_space, not a solvable equation of its own.
enum class EquationKind { CDER, CTDER, GCTDER, TC, TQC, ZTDER, CINN_MEMBER };

const char* equation_kind_name(EquationKind k);
std::optional<EquationKind> equation_kind_from_string(const std::string& s);

// Truncated solution space of one equation kind under ansatz degree bounds.
// basis elements are linearly independent and each one has been re-verified
// against the defining equation. For GCTDER, tau_basis[k] is the triple
// derivation paired with basis[k].
struct SolutionSpace {
    ConformalAlgebra algebra;
    EquationKind kind;
    int deg_d = 0;
    int deg_x = 0;
    std::vector<ConformalMap> basis;
    std::vector<ConformalMap> tau_basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

// Exact check of the defining identity on all generator tuples; on failure
// the witness names the first offending tuple and its residual.
CheckResult satisfies(const ConformalAlgebra& A, const ConformalMap& phi, EquationKind kind,
                      const std::optional<ConformalMap>& tau = std::nullopt);

// Coefficient-comparison solver: ansatz entries sum_{p<=deg_d, q<=deg_x}
// u_pq D^p X^q, homogeneous system over the residual monomials, exact
// nullspace, then mandatory post-verification of every basis element.
// GCTDER is solved jointly in (phi, tau) and cross-checked against the
// span of CTDER + TC.
SolutionSpace solve_space(const ConformalAlgebra& A, EquationKind kind, int deg_d, int deg_x);

// Span of {X^m ad(e_i) : m <= deg_x}, linearly reduced. kind is CINN_MEMBER.
SolutionSpace inner_space(const ConformalAlgebra& A, int deg_x);

// True iff phi is a Q-linear combination of S.basis; degree bounds are
// checked first and exceeding them returns false.
bool space_contains(const SolutionSpace& S, const ConformalMap& phi);

// Mutual containment of spans (bounds-free).
bool space_equal(const SolutionSpace& s1, const SolutionSpace& s2);

// dim(span(S) + span(T)) - dim(span(T)): the part of S not explained by T.
int quotient_dimension(const SolutionSpace& S, const SolutionSpace& T);

// Bounded center check: the only z with D-degree <= deg_bound and
// [z_lam e_j] = 0 for all j is z = 0.
bool center_is_zero(const ConformalAlgebra& A, int deg_bound);

// The conformal derivation delta with [delta(e_i)_{lam+x} e_j] =
// phi_x([e_i_lam e_j]) - [e_i_lam phi_x(e_j)] for all i, j. Requires a
// (bounded-verified) zero center; bounds inherited from phi and the table,
// auto-raised once before giving up.
ConformalMap delta_phi(const ConformalAlgebra& A, const ConformalMap& phi);

}  // namespace lca
