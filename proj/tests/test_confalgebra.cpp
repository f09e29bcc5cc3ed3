#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/confalgebra.hpp"
#include "testutil.hpp"

using namespace lca;

namespace {
const Poly D = pvar(Var::D);
const Poly lam = pvar(Var::LAM);
const Poly mu = pvar(Var::MU);
}  // namespace

TEST_CASE("Vir bracket table") {
    ConformalAlgebra vir = make_vir();
    CHECK(vir.rank() == 1);
    CHECK(vir.table(0, 0).comps[0] == D + pconst(2) * lam);
    CHECK(vir.check_skew().ok);
    CHECK(vir.check_jacobi().ok);
}

TEST_CASE("eval_bracket on Vir") {
    ConformalAlgebra vir = make_vir();
    ModElement L = ModElement::unit(1, 0);
    CHECK(vir.bracket(L, L, Var::LAM).comps[0] == D + pconst(2) * lam);
    // Sesquilinearity forces [dL_lam L] = -lam (D + 2 lam) L.
    ModElement dL = D * L;
    CHECK(vir.bracket(dL, L, Var::LAM).comps[0] == -lam * (D + pconst(2) * lam));
}

TEST_CASE("current algebra of sl2") {
    ConformalAlgebra cur = make_cur(make_sl2());
    CHECK(cur.rank() == 3);
    ModElement e = ModElement::unit(3, 0), f = ModElement::unit(3, 1);
    ModElement h = ModElement::unit(3, 2);
    CHECK(cur.bracket(e, f, Var::LAM) == h);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(cur.table(i, j).contains(Var::D) == false);
            CHECK(cur.table(i, j).contains(Var::LAM) == false);
        }
    CHECK(cur.check_skew().ok);
    CHECK(cur.check_jacobi().ok);
    CHECK(make_cur(make_sl3()).check_skew().ok);
    CHECK(make_cur(make_sl3()).check_jacobi().ok);
}

TEST_CASE("axiom checkers report witnesses") {
    // Rank-1 table [e lam e] = e: fails skew-symmetry and Jacobi.
    ModElement entry(1);
    entry.comps[0] = Poly(1L);
    ConformalAlgebra bad({"e"}, {{entry}});
    auto skew = bad.check_skew();
    CHECK(!skew.ok);
    CHECK(skew.witness->generators == std::vector<int>{0, 0});
    auto jac = bad.check_jacobi();
    CHECK(!jac.ok);
}

TEST_CASE("direct sum") {
    ConformalAlgebra cc = direct_sum(make_cur(make_sl2()), make_cur(make_sl2()));
    CHECK(cc.rank() == 6);
    ModElement e1 = ModElement::unit(6, 0), e2 = ModElement::unit(6, 3);
    CHECK(cc.bracket(e1, e2, Var::LAM).is_zero());
    CHECK(direct_sum(make_vir(), make_vir()).check_jacobi().ok);
}

TEST_CASE("variable clash is rejected") {
    ConformalAlgebra vir = make_vir();
    ModElement a(1);
    a.comps[0] = lam;
    CHECK_THROWS_AS(vir.bracket(a, ModElement::unit(1, 0), Var::LAM), Error);
}

TEST_CASE("sesquilinearity holds structurally on random elements") {
    testutil::Gen gen(13);
    ConformalAlgebra cur = make_cur(make_sl2());
    for (int it = 0; it < 50; ++it) {
        ModElement a = gen.element(3, {Var::D}, 2);
        ModElement b = gen.element(3, {Var::D}, 2);
        ModElement da = D * a, db = D * b;
        CHECK(cur.bracket(da, b, Var::LAM) == (-lam) * cur.bracket(a, b, Var::LAM));
        CHECK(cur.bracket(a, db, Var::LAM) == (D + lam) * cur.bracket(a, b, Var::LAM));
    }
}

TEST_CASE("skew and Jacobi extend to random elements") {
    testutil::Gen gen(29);
    for (const ConformalAlgebra& A : {make_vir(), make_cur(make_sl2())}) {
        for (int it = 0; it < 30; ++it) {
            ModElement a = gen.element(A.rank(), {Var::D}, 2);
            ModElement b = gen.element(A.rank(), {Var::D}, 2);
            ModElement c = gen.element(A.rank(), {Var::D}, 2);
            ModElement lhs = A.bracket(a, b, Var::LAM);
            ModElement rhs = A.bracket(b, a, Var::LAM).substitute(Var::LAM, -D - lam);
            CHECK(lhs == -rhs);
            ModElement jac_lhs = A.bracket(a, A.bracket(b, c, Var::MU), pvar(Var::LAM));
            ModElement jac_rhs = A.bracket(A.bracket(a, b, Var::LAM), c, lam + mu) +
                                 A.bracket(b, A.bracket(a, c, Var::LAM), mu);
            CHECK(jac_lhs == jac_rhs);
        }
    }
}
