#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/liealgebra.hpp"
#include "testutil.hpp"

using namespace lca;

TEST_CASE("sl2 constructs and brackets match") {
    LieAlgebra g = make_sl2();
    CHECK(g.dim() == 3);
    QVector e{Rational(1), Rational(0), Rational(0)};
    QVector f{Rational(0), Rational(1), Rational(0)};
    QVector h{Rational(0), Rational(0), Rational(1)};
    CHECK(g.bracket(e, f) == h);
    QVector two_e{Rational(2), Rational(0), Rational(0)};
    CHECK(g.bracket(h, e) == two_e);
    CHECK(g.bracket(e, e) == QVector(3, Rational(0)));
}

TEST_CASE("constructor rejects bad tables") {
    // [e,f] = h but [f,e] = h as well: not antisymmetric.
    std::vector<std::vector<QVector>> c(3, std::vector<QVector>(3, QVector(3, Rational(0))));
    c[0][1][2] = 1;
    c[1][0][2] = 1;
    CHECK_THROWS_WITH_AS(LieAlgebra::make({"e", "f", "h"}, c), doctest::Contains("NOT_ANTISYMMETRIC"),
                         Error);

    // Antisymmetric but Jacobi fails: [a,b]=c, [b,c]=a, [c,a]=a gives
    // cyclic sum [a,b] = c on the triple (a,b,c).
    std::vector<std::vector<QVector>> j(3, std::vector<QVector>(3, QVector(3, Rational(0))));
    j[0][1][2] = 1;
    j[1][0][2] = -1;
    j[1][2][0] = 1;
    j[2][1][0] = -1;
    j[2][0][0] = 1;
    j[0][2][0] = -1;
    CHECK_THROWS_WITH_AS(LieAlgebra::make({"a", "b", "c"}, j), doctest::Contains("JACOBI_FAILS"),
                         Error);

    CHECK_NOTHROW(make_abelian(2));
    CHECK_NOTHROW(make_sl3());
}

TEST_CASE("center") {
    CHECK(make_sl2().center().empty());
    CHECK(make_abelian(2).center().size() == 2);
    auto z = make_heisenberg().center();
    REQUIRE(z.size() == 1);
    CHECK(z[0][2] != 0);
    CHECK(z[0][0] == 0);
    CHECK(z[0][1] == 0);
}

TEST_CASE("center vectors commute with every basis element") {
    for (const LieAlgebra& g : {make_sl2(), make_sl3(), make_heisenberg(), make_abelian(3)}) {
        for (const auto& z : g.center()) {
            for (int i = 0; i < g.dim(); ++i) {
                QVector ei(g.dim(), Rational(0));
                ei[i] = 1;
                CHECK(g.bracket(z, ei) == QVector(g.dim(), Rational(0)));
            }
        }
    }
}

TEST_CASE("perfectness") {
    CHECK(make_sl2().is_perfect());
    CHECK(make_sl3().is_perfect());
    CHECK(!make_abelian(2).is_perfect());
    CHECK(!make_heisenberg().is_perfect());
}

TEST_CASE("bilinear antisymmetry and Jacobi on random vectors") {
    testutil::Gen gen(5);
    LieAlgebra g = make_sl3();
    auto rnd = [&] {
        QVector v(g.dim());
        for (auto& e : v) e = gen.rational();
        return v;
    };
    for (int it = 0; it < 50; ++it) {
        QVector u = rnd(), v = rnd(), w = rnd();
        QVector uv = g.bracket(u, v), vu = g.bracket(v, u);
        for (int k = 0; k < g.dim(); ++k) CHECK(uv[k] == -vu[k]);
        QVector jac = g.bracket(g.bracket(u, v), w);
        QVector t2 = g.bracket(g.bracket(v, w), u);
        QVector t3 = g.bracket(g.bracket(w, u), v);
        for (int k = 0; k < g.dim(); ++k) CHECK(jac[k] + t2[k] + t3[k] == 0);
    }
}
