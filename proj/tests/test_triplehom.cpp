#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/triplehom.hpp"
#include "testutil.hpp"

using namespace lca;

namespace {

// f: Cur(sl2) -> Cur(sl2) (+) Cur(sl2), a |-> (a, -a).
ModuleMap antidiag() {
    ModuleMap f(6, 3);
    for (int j = 0; j < 3; ++j) {
        f.mat[j][j] = Poly(1L);
        f.mat[j + 3][j] = Poly(-1L);
    }
    return f;
}

}  // namespace

TEST_CASE("modmap_kind on the reference maps") {
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalAlgebra cc = direct_sum(cur, cur);

    ModuleMap id = ModuleMap::identity(3);
    CHECK(modmap_kind(cur, cur, id, MapKind::HOM).ok);
    CHECK(!modmap_kind(cur, cur, id, MapKind::ANTIHOM).ok);
    CHECK(modmap_kind(cur, cur, id, MapKind::TRIPLEHOM).ok);

    ModuleMap neg = id.scaled(Rational(-1));
    CHECK(modmap_kind(cur, cur, neg, MapKind::ANTIHOM).ok);
    CHECK(!modmap_kind(cur, cur, neg, MapKind::HOM).ok);
    CHECK(modmap_kind(cur, cur, neg, MapKind::TRIPLEHOM).ok);

    ModuleMap f = antidiag();
    CHECK(modmap_kind(cur, cc, f, MapKind::TRIPLEHOM).ok);
    CHECK(!modmap_kind(cur, cc, f, MapKind::HOM).ok);
    CHECK(!modmap_kind(cur, cc, f, MapKind::ANTIHOM).ok);

    auto bad = modmap_kind(cur, cc, f, MapKind::HOM);
    REQUIRE(bad.witness.has_value());
    CHECK(!bad.witness->residual.is_zero());

    CHECK_THROWS_AS(modmap_kind(cur, cur, f, MapKind::HOM), Error);
}

TEST_CASE("enveloping closure") {
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalAlgebra cc = direct_sum(cur, cur);

    CHECK(enveloping(cur, ModuleMap::identity(3)).gens.size() == 3);
    CHECK(enveloping(cc, antidiag()).gens.size() == 6);
    CHECK(enveloping(cur, ModuleMap(3, 3)).empty());

    // Vir brackets introduce D coefficients; the closure of the image of
    // the identity stays the full rank-1 module.
    auto vb = enveloping(make_vir(), ModuleMap::identity(1));
    REQUIRE(vb.gens.size() == 1);
    CHECK(vb.gens[0][0] == Poly(1L));
}

TEST_CASE("center_check") {
    ConformalAlgebra cur = make_cur(make_sl2());
    CHECK(center_check(cur, enveloping(cur, ModuleMap::identity(3)), 2));
    ConformalAlgebra ab = make_cur(make_abelian(2));
    CHECK(!center_check(ab, enveloping(ab, ModuleMap::identity(2)), 2));
    CHECK(center_check(cur, SubmoduleBasis{3, {}}, 2));
}

TEST_CASE("delta_f on the reference maps") {
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalAlgebra cc = direct_sum(cur, cur);
    ModuleMap id = ModuleMap::identity(3);

    CHECK(delta_f(cur, cur, id) == id);
    CHECK(delta_f(cur, cur, id.scaled(Rational(-1))) == id);

    // a |-> (a, -a) has delta a |-> (a, a).
    ModuleMap expected(6, 3);
    for (int j = 0; j < 3; ++j) {
        expected.mat[j][j] = Poly(1L);
        expected.mat[j + 3][j] = Poly(1L);
    }
    CHECK(delta_f(cur, cc, antidiag()) == expected);

    ModuleMap notth(3, 3);
    notth.mat[0][0] = Poly(1L);
    CHECK_THROWS_AS(delta_f(cur, cur, notth), Error);

    ConformalAlgebra ab = make_cur(make_abelian(2));
    CHECK_THROWS_AS(delta_f(ab, ab, ModuleMap::identity(2)), Error);
}

TEST_CASE("split_decompose labels and postconditions") {
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalAlgebra cc = direct_sum(cur, cur);
    ModuleMap id = ModuleMap::identity(3);

    Decomposition dh = split_decompose(cur, cur, id);
    CHECK(dh.label == SplitLabel::HOM);
    CHECK(dh.f_I == id);
    CHECK(dh.f_J.is_zero());
    CHECK(dh.E_minus.empty());

    Decomposition da = split_decompose(cur, cur, id.scaled(Rational(-1)));
    CHECK(da.label == SplitLabel::ANTIHOM);
    CHECK(da.f_I.is_zero());
    CHECK(da.f_J == id.scaled(Rational(-1)));

    Decomposition ds = split_decompose(cur, cc, antidiag());
    CHECK(ds.label == SplitLabel::DIRECT_SUM);
    for (int j = 0; j < 3; ++j) {
        CHECK(ds.f_I.mat[j][j] == Poly(1L));
        CHECK(ds.f_J.mat[j + 3][j] == Poly(-1L));
    }
    CHECK(ds.f_I + ds.f_J == antidiag());
    CHECK(ds.E_plus.gens.size() == 3);
    CHECK(ds.E_minus.gens.size() == 3);
    CHECK(intersect(ds.E_plus, ds.E_minus).empty());
}

TEST_CASE("hom plus antihom into orthogonal ideals is a triple hom") {
    testutil::Gen gen(61);
    ConformalAlgebra cur = make_cur(make_sl2());
    ConformalAlgebra cc = direct_sum(cur, cur);
    for (int it = 0; it < 10; ++it) {
        // Torus automorphism of sl2: e |-> t e, f |-> t^-1 f, h |-> h.
        // g embeds it into the first summand, h its negative into the
        // second; images land in bracket-orthogonal ideals.
        Rational t = 0, s = 0;
        while (t == 0) t = gen.rational();
        while (s == 0) s = gen.rational();
        ModuleMap g(6, 3), h(6, 3);
        g.mat[0][0] = Poly(t);
        g.mat[1][1] = Poly(Rational(1) / t);
        g.mat[2][2] = Poly(1L);
        h.mat[3][0] = Poly(-s);
        h.mat[4][1] = Poly(-(Rational(1) / s));
        h.mat[5][2] = Poly(-1L);
        CHECK(modmap_kind(cur, cc, g, MapKind::HOM).ok);
        CHECK(modmap_kind(cur, cc, h, MapKind::ANTIHOM).ok);
        CHECK(modmap_kind(cur, cc, g + h, MapKind::TRIPLEHOM).ok);
    }
}
