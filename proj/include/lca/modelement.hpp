#pragma once

#include <string>
#include <vector>

#include "lca/errors.hpp"
#include "lca/poly.hpp"

namespace lca {

// Element of a rank-r free Q[D]-module: an r-vector of Poly. D is stored
// as an ordinary commuting variable; sesquilinearity is applied at bracket
// evaluation time, never here.
struct ModElement {
    std::vector<Poly> comps;

    ModElement() = default;
    explicit ModElement(int rank) : comps(rank) {}
    explicit ModElement(std::vector<Poly> c) : comps(std::move(c)) {}

    int rank() const { return static_cast<int>(comps.size()); }

    static ModElement unit(int rank, int i) {
        ModElement e(rank);
        e.comps[i] = Poly(1L);
        return e;
    }

    bool is_zero() const {
        for (const auto& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }

    bool contains(Var v) const {
        for (const auto& p : comps)
            if (p.contains(v)) return true;
        return false;
    }

    ModElement operator+(const ModElement& o) const {
        if (rank() != o.rank())
            throw Error(ErrorCode::RANK_MISMATCH, "elem_add on ranks " +
                        std::to_string(rank()) + " and " + std::to_string(o.rank()));
        ModElement r(rank());
        for (int i = 0; i < rank(); ++i) r.comps[i] = comps[i] + o.comps[i];
        return r;
    }

    ModElement operator-(const ModElement& o) const { return *this + (-o); }

    ModElement operator-() const {
        ModElement r(rank());
        for (int i = 0; i < rank(); ++i) r.comps[i] = -comps[i];
        return r;
    }

    ModElement& operator+=(const ModElement& o) {
        *this = *this + o;
        return *this;
    }

    bool operator==(const ModElement& o) const { return comps == o.comps; }
    bool operator!=(const ModElement& o) const { return !(*this == o); }

    ModElement substitute(Var v, const Poly& repl) const {
        ModElement r(rank());
        for (int i = 0; i < rank(); ++i) r.comps[i] = comps[i].substitute(v, repl);
        return r;
    }

    std::string to_string(const std::vector<std::string>& gen_names) const;
};

inline ModElement operator*(const Poly& p, const ModElement& v) {
    ModElement r(v.rank());
    for (int i = 0; i < v.rank(); ++i) r.comps[i] = p * v.comps[i];
    return r;
}

inline std::string ModElement::to_string(const std::vector<std::string>& gen_names) const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
        if (comps[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string p = comps[i].to_string();
        if (p == "1")
            out += gen_names[i];
        else
            out += "(" + p + ") " + gen_names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace lca
