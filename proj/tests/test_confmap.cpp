#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/confmap.hpp"
#include "testutil.hpp"

using namespace lca;

namespace {
const Poly D = pvar(Var::D);
const Poly x = pvar(Var::X);
const Poly y = pvar(Var::Y);
}  // namespace

TEST_CASE("d^L on Cur(sl2)") {
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalMap dl = dl_map(cur);
    ModElement e = ModElement::unit(3, 0);
    CHECK(dl.apply(e) == (D + x) * e);
    CHECK(dl.mat[0][0] == D + x);
    CHECK(dl.mat[0][1].is_zero());
    CHECK(dl_map(make_cur(make_abelian(1))).mat[0][0] == D + x);
    CHECK_THROWS_AS(dl_map(make_vir()), Error);
}

TEST_CASE("zero map and conformal-linearity rule") {
    ConformalAlgebra vir = make_vir();
    ConformalMap zero(1);
    ModElement L = ModElement::unit(1, 0);
    CHECK(zero.apply(L).is_zero());

    ConformalMap adL = ad_map(vir, L);
    CHECK(adL.mat[0][0] == D + pconst(2) * x);
    // apply to dL: the (D + x) twist.
    CHECK(adL.apply(D * L).comps[0] == (D + x) * (D + pconst(2) * x));
}

TEST_CASE("ad is sesquilinear") {
    ConformalAlgebra vir = make_vir();
    ModElement L = ModElement::unit(1, 0);
    ConformalMap adL = ad_map(vir, L);
    ConformalMap ad_dL = ad_map(vir, D * L);
    CHECK(ad_dL == adL.scaled(-x));

    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalMap adh = ad_map(cur, ModElement::unit(3, 2));
    CHECK(adh.mat[0][0] == pconst(2));
    CHECK(adh.mat[1][1] == pconst(-2));
    CHECK(adh.mat[2][2].is_zero());
}

TEST_CASE("apply respects the twist on random elements") {
    testutil::Gen gen(19);
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalMap dl = dl_map(cur);
    ConformalMap adh = ad_map(cur, ModElement::unit(3, 2));
    for (int it = 0; it < 40; ++it) {
        ModElement a = gen.element(3, {Var::D}, 2);
        for (const ConformalMap& m : {dl, adh})
            CHECK(m.apply(D * a) == (D + x) * m.apply(a));
    }
}

TEST_CASE("gc bracket basics") {
    ConformalAlgebra vir = make_vir();
    ConformalMap adL = ad_map(vir, ModElement::unit(1, 0));
    ConformalMap zero(1);
    CHECK(gc_bracket(zero, adL).is_zero());

    // Skew: [phi_x psi]_y + ([psi_x phi]_y with x -> y - x) = 0.
    ConformalMap2 b1 = gc_bracket(adL, adL.scaled(x));
    ConformalMap2 b2 = gc_bracket(adL.scaled(x), adL);
    for (int i = 0; i < 1; ++i)
        for (int j = 0; j < 1; ++j) {
            Poly swapped = b2.mat[i][j].substitute(Var::X, y - x);
            CHECK((b1.mat[i][j] + swapped).is_zero());
        }
}

TEST_CASE("ad is a gc homomorphism") {
    for (const ConformalAlgebra& A : {make_vir(), make_cur(make_sl2())}) {
        testutil::Gen gen(37);
        for (int it = 0; it < 10; ++it) {
            ModElement a = gen.element(A.rank(), {Var::D}, 1);
            ModElement b = gen.element(A.rank(), {Var::D}, 1);
            ConformalMap2 lhs = gc_bracket(ad_map(A, a), ad_map(A, b));
            // ad([a_x b]) evaluated at parameter y.
            ModElement c = A.bracket(a, b, pvar(Var::X));
            for (int j = 0; j < A.rank(); ++j) {
                ModElement rhs = A.bracket(c, ModElement::unit(A.rank(), j), pvar(Var::Y));
                for (int i = 0; i < A.rank(); ++i) CHECK(lhs.mat[i][j] == rhs.comps[i]);
            }
        }
    }
}

TEST_CASE("gc Jacobi identity on random small maps") {
    testutil::Gen gen(41);
    ConformalAlgebra cur = make_cur(make_sl2());
    const Poly lam = pvar(Var::LAM), mu = pvar(Var::MU), nu = pvar(Var::NU);
    auto random_map = [&] {
        ConformalMap m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.mat[i][j] = gen.poly({Var::D, Var::X}, 1, 2);
        return m;
    };
    for (int it = 0; it < 8; ++it) {
        ConformalMap phi = random_map(), psi = random_map(), chi = random_map();
        for (int j = 0; j < 3; ++j) {
            ModElement a = ModElement::unit(3, j);
            // [phi_lam [psi_mu chi]]_nu a
            ModElement lhs = conf_act(phi.mat, lam, gc_act(psi.mat, chi.mat, mu, nu - lam, a)) -
                             gc_act(psi.mat, chi.mat, mu, nu - lam, conf_act(phi.mat, lam, a));
            // [[phi_lam psi]_{lam+mu} chi]_nu a, with [phi_lam psi]_{lam+mu}
            // acting as gc_act(phi, psi, lam, lam+mu, .).
            ModElement rhs1 =
                gc_act(phi.mat, psi.mat, lam, lam + mu, conf_act(chi.mat, nu - lam - mu, a)) -
                conf_act(chi.mat, nu - lam - mu, gc_act(phi.mat, psi.mat, lam, lam + mu, a));
            // [psi_mu [phi_lam chi]]_nu a
            ModElement rhs2 = conf_act(psi.mat, mu, gc_act(phi.mat, chi.mat, lam, nu - mu, a)) -
                              gc_act(phi.mat, chi.mat, lam, nu - mu, conf_act(psi.mat, mu, a));
            CHECK(lhs == rhs1 + rhs2);
        }
    }
}
