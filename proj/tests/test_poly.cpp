#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/poly.hpp"
#include "testutil.hpp"

using namespace lca;

namespace {
const Poly D = pvar(Var::D);
const Poly lam = pvar(Var::LAM);
const Poly mu = pvar(Var::MU);
const Poly x = pvar(Var::X);
const Poly y = pvar(Var::Y);
}  // namespace

TEST_CASE("addition identities") {
    Poly p = D + pconst(2) * lam;
    CHECK(p + Poly() == p);
    CHECK((p + (-p)).is_zero());
    CHECK((D + x) + (D + x) == pconst(2) * D + pconst(2) * x);
}

TEST_CASE("multiplication identities") {
    Poly p = D + pconst(2) * lam;
    CHECK(p * Poly(1L) == p);
    CHECK(lam * p == lam * D + pconst(2) * lam * lam);
    Poly sq = (D + x) * (D + x);
    CHECK(sq == D * D + pconst(2) * D * x + x * x);
}

TEST_CASE("substitute") {
    Poly p = D + pconst(2) * mu;
    CHECK(p.substitute(Var::MU, -D - lam) == -D - pconst(2) * lam);
    Poly q = D * D + lam * x;
    CHECK(q.substitute(Var::X, x) == q);
    CHECK((mu * mu).substitute(Var::MU, y - x) == y * y - pconst(2) * x * y + x * x);
}

TEST_CASE("coeff read-off") {
    Poly p = D + pconst(2) * lam;
    Mono d1{};
    d1[static_cast<int>(Var::D)] = 1;
    Mono l1{};
    l1[static_cast<int>(Var::LAM)] = 1;
    Mono dl{};
    dl[static_cast<int>(Var::D)] = 1;
    dl[static_cast<int>(Var::LAM)] = 1;
    CHECK(p.coeff(d1) == 1);
    CHECK(p.coeff(l1) == 2);
    CHECK(p.coeff(dl) == 0);
}

TEST_CASE("degree_in") {
    CHECK((D + pconst(2) * lam).degree_in(Var::D) == 1);
    CHECK(Poly().degree_in(Var::X) == -1);
    CHECK(((D + x) * (D + x)).degree_in(Var::X) == 2);
}

TEST_CASE("ring axioms on random polynomials") {
    testutil::Gen gen(42);
    std::vector<Var> vars = {Var::D, Var::LAM, Var::X};
    for (int it = 0; it < 200; ++it) {
        Poly a = gen.poly(vars, 3), b = gen.poly(vars, 3), c = gen.poly(vars, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    testutil::Gen gen(7);
    std::vector<Var> vars = {Var::D, Var::MU};
    for (int it = 0; it < 100; ++it) {
        Poly a = gen.poly(vars, 2), b = gen.poly(vars, 2);
        Poly repl = gen.poly({Var::X, Var::LAM}, 2);
        CHECK((a * b).substitute(Var::MU, repl) ==
              a.substitute(Var::MU, repl) * b.substitute(Var::MU, repl));
        CHECK((a + b).substitute(Var::MU, repl) ==
              a.substitute(Var::MU, repl) + b.substitute(Var::MU, repl));
    }
}

TEST_CASE("coeff-monomial reconstruction") {
    testutil::Gen gen(11);
    for (int it = 0; it < 50; ++it) {
        Poly p = gen.poly({Var::D, Var::LAM, Var::MU, Var::X}, 3, 6);
        Poly rebuilt;
        for (const auto& [m, c] : p.terms()) rebuilt += Poly::term(p.coeff(m), m);
        CHECK(rebuilt == p);
    }
}

TEST_CASE("canonical rendering") {
    CHECK((D + pconst(2) * lam).to_string() == "D + 2*lam");
    CHECK(Poly().to_string() == "0");
    CHECK((Poly(Rational(1, 2)) * x - D).to_string() == "-D + 1/2*x");
    CHECK(((D + x) * (D + x)).to_string() == "D^2 + 2*D*x + x^2");
}
