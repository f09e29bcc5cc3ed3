#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "lca/rational.hpp"

namespace lca {

// The closed set of formal variables. Every polynomial in the engine lives
// in Q[D, lam, mu, nu, x, y]; D plays the role of the module generator
// variable, the rest are bracket / map parameters.
enum class Var : int { D = 0, LAM = 1, MU = 2, NU = 3, X = 4, Y = 5 };

inline constexpr int kNumVars = 6;

const char* var_name(Var v);

// Exponent vector over the fixed variable order.
using Mono = std::array<int, kNumVars>;

inline int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Graded-lexicographic order, leading terms first: higher total degree
// precedes lower, ties broken by higher exponent on the earlier variable.
struct MonoOrder {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        for (int i = 0; i < kNumVars; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

// Sparse multivariate polynomial over Q. Invariant: no zero coefficient is
// stored, so structural equality is ring equality.
class Poly {
public:
    using TermMap = std::map<Mono, Rational, MonoOrder>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);

    static Poly var(Var v);
    static Poly term(const Rational& c, const Mono& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;

    // Replaces every occurrence of v by repl (a ring homomorphism).
    Poly substitute(Var v, const Poly& repl) const;

    Rational coeff(const Mono& m) const;
    // -1 for the zero polynomial.
    int degree_in(Var v) const;
    int total_deg() const;
    bool contains(Var v) const { return degree_in(v) > 0; }

    std::string to_string() const;

private:
    void add_term(const Mono& m, const Rational& c);
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

// Convenience factories used all over the engine.
inline Poly pvar(Var v) { return Poly::var(v); }
inline Poly pconst(long c) { return Poly(c); }

}  // namespace lca
