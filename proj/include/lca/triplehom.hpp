#pragma once

#include "lca/confalgebra.hpp"
#include "lca/confmap.hpp"
#include "lca/linalg.hpp"

namespace lca {

enum class MapKind { HOM, ANTIHOM, TRIPLEHOM };

const char* map_kind_name(MapKind k);

// Exact check of f([a_lam b]) = [f(a)_lam f(b)] (HOM), its negative
// (ANTIHOM), or the triple identity f([a_lam [b_mu c]]) =
// [f(a)_lam [f(b)_mu f(c)]] (TRIPLEHOM, cross-validated in the nested
// double-bracket form) on all generator tuples.
CheckResult modmap_kind(const ConformalAlgebra& A, const ConformalAlgebra& B, const ModuleMap& f,
                        MapKind kind);

// Smallest conformal subalgebra of B containing the image of f: bracket
// closure of the column span, stratified by lam powers, re-normalized
// until stable.
SubmoduleBasis enveloping(const ConformalAlgebra& B, const ModuleMap& f);

// True iff the only z in E's span with multiplier D-degree <= deg_bound
// and [z_lam u] = 0 for every basis column u is z = 0.
bool center_check(const ConformalAlgebra& B, const SubmoduleBasis& E, int deg_bound);

// The homomorphism delta with [delta(e_i)_lam f(e_j)] = f([e_i_lam e_j])
// for all generator pairs. Requires f to be a triple homomorphism with a
// centerless enveloping algebra.
ModuleMap delta_f(const ConformalAlgebra& A, const ConformalAlgebra& B, const ModuleMap& f);

enum class SplitLabel { HOM, ANTIHOM, DIRECT_SUM };

const char* split_label_name(SplitLabel l);

struct Decomposition {
    ModuleMap f_I;  // 1/2 (f + delta), a homomorphism
    ModuleMap f_J;  // 1/2 (f - delta), an anti-homomorphism
    SubmoduleBasis E_plus;
    SubmoduleBasis E_minus;
    ModuleMap delta;
    SplitLabel label;
};

// Constructive hom + anti-hom split of a triple homomorphism, with every
// claimed property re-verified exactly before returning.
Decomposition split_decompose(const ConformalAlgebra& A, const ConformalAlgebra& B,
                              const ModuleMap& f);

}  // namespace lca
