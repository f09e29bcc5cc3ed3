#pragma once

#include <random>
#include <vector>

#include "lca/modelement.hpp"
#include "lca/poly.hpp"

namespace lca::testutil {

// Deterministic generators for property-style tests.
struct Gen {
    std::mt19937 rng;
    explicit Gen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Rational rational(int num_range = 6) {
        int n = uniform(-num_range, num_range);
        int d = uniform(1, 4);
        return Rational(n, d);
    }

    // Random polynomial in the given variables with per-variable degree
    // bound and a handful of terms.
    Poly poly(const std::vector<Var>& vars, int max_deg, int max_terms = 4) {
        Poly p;
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            Mono m{};
            for (Var v : vars) m[static_cast<int>(v)] = uniform(0, max_deg);
            p += Poly::term(rational(), m);
        }
        return p;
    }

    ModElement element(int rank, const std::vector<Var>& vars, int max_deg) {
        ModElement e(rank);
        for (int i = 0; i < rank; ++i) e.comps[i] = poly(vars, max_deg, 3);
        return e;
    }
};

}  // namespace lca::testutil
