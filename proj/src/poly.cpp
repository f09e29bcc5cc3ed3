#include "lca/poly.hpp"

#include <vector>

namespace lca {

const char* var_name(Var v) {
    static const char* names[kNumVars] = {"D", "lam", "mu", "nu", "x", "y"};
    return names[static_cast<int>(v)];
}

Poly::Poly(const Rational& c) {
    if (c != 0) terms_[Mono{}] = c;
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly Poly::var(Var v) {
    Poly p;
    Mono m{};
    m[static_cast<int>(v)] = 1;
    p.terms_[m] = 1;
    return p;
}

Poly Poly::term(const Rational& c, const Mono& m) {
    Poly p;
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

void Poly::add_term(const Mono& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Mono m;
            for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
    return r;
}

Poly Poly::pow(int e) const {
    Poly r(1L);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

Poly Poly::substitute(Var v, const Poly& repl) const {
    const int vi = static_cast<int>(v);
    // Cache powers of the replacement up to the max exponent seen.
    std::vector<Poly> powers = {Poly(1L)};
    Poly result;
    for (const auto& [m, c] : terms_) {
        int e = m[vi];
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * repl);
        Mono rest = m;
        rest[vi] = 0;
        result += Poly::term(c, rest) * powers[e];
    }
    return result;
}

Rational Poly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree_in(Var v) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
    return d;
}

int Poly::total_deg() const {
    if (terms_.empty()) return -1;
    // Map order is graded, so the first key has maximal total degree.
    return total_degree(terms_.begin()->first);
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(static_cast<Var>(i));
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            out += lca::to_string(a);
        } else {
            if (a != 1) out += lca::to_string(a) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

}  // namespace lca
