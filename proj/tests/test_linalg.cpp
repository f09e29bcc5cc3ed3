#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/linalg.hpp"
#include "testutil.hpp"

using namespace lca;

namespace {

const Poly D = pvar(Var::D);

PolyColumn col(std::initializer_list<Poly> ps) { return PolyColumn(ps); }

// Independent span check: v lies in span(cols) iff adjoining it does not
// change the canonical basis.
bool in_span(int rank, const std::vector<PolyColumn>& cols, const PolyColumn& v) {
    auto base = hnf(rank, cols);
    auto ext = cols;
    ext.push_back(v);
    return hnf(rank, ext) == base;
}

}  // namespace

TEST_CASE("nullspace_q basics") {
    QMatrix id(2, 2);
    id.a[0][0] = 1;
    id.a[1][1] = 1;
    CHECK(nullspace_q(id).empty());

    QMatrix z(1, 2);
    CHECK(nullspace_q(z).size() == 2);

    QMatrix m(1, 2);
    m.a[0][0] = 1;
    m.a[0][1] = 1;
    auto basis = nullspace_q(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == -basis[0][1]);
}

TEST_CASE("nullspace vectors are exact kernel elements") {
    testutil::Gen gen(3);
    for (int it = 0; it < 50; ++it) {
        int rows = gen.uniform(1, 5), cols = gen.uniform(1, 5);
        QMatrix m(rows, cols);
        for (auto& r : m.a)
            for (auto& e : r) e = gen.rational();
        auto basis = nullspace_q(m);
        // rank-nullity
        CHECK(static_cast<int>(basis.size()) == cols - rank_q(m.a));
        for (const auto& v : basis) {
            for (int i = 0; i < rows; ++i) {
                Rational s(0);
                for (int j = 0; j < cols; ++j) s += m.a[i][j] * v[j];
                CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("solve_q") {
    QMatrix m(2, 2);
    m.a[0][0] = 1;
    m.a[0][1] = 2;
    m.a[1][0] = 3;
    m.a[1][1] = 4;
    auto x = solve_q(m, {Rational(5), Rational(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);

    QMatrix s(2, 1);
    s.a[0][0] = 1;
    s.a[1][0] = 1;
    CHECK(!solve_q(s, {Rational(0), Rational(1)}).has_value());
}

TEST_CASE("hnf normalizes unit gcd") {
    auto b = hnf(1, {col({D}), col({Poly(1L)})});
    REQUIRE(b.gens.size() == 1);
    CHECK(b.gens[0][0] == Poly(1L));
}

TEST_CASE("hnf keeps monic generator") {
    Poly p = D * D + D;
    auto b = hnf(1, {col({p})});
    REQUIRE(b.gens.size() == 1);
    CHECK(b.gens[0][0] == p);
}

TEST_CASE("hnf column reduction in rank 2") {
    auto b = hnf(2, {col({D, Poly()}), col({Poly(), Poly(1L)}), col({D * D, Poly()})});
    REQUIRE(b.gens.size() == 2);
    CHECK(b.gens[0] == col({D, Poly()}));
    CHECK(b.gens[1] == col({Poly(), Poly(1L)}));
}

TEST_CASE("hnf is idempotent and span preserving") {
    testutil::Gen gen(17);
    for (int it = 0; it < 40; ++it) {
        int rank = gen.uniform(1, 3);
        std::vector<PolyColumn> cols;
        int n = gen.uniform(1, 4);
        for (int k = 0; k < n; ++k) {
            PolyColumn c(rank);
            for (int i = 0; i < rank; ++i) c[i] = gen.poly({Var::D}, 3);
            cols.push_back(c);
        }
        auto b = hnf(rank, cols);
        CHECK(hnf(rank, b.gens) == b);
        for (const auto& c : cols) CHECK(member(c, b));
        for (const auto& g : b.gens) CHECK(in_span(rank, cols, g));
    }
}

TEST_CASE("member") {
    auto unit = hnf(1, {col({Poly(1L)})});
    CHECK(member(col({D * D}), unit));
    auto dd = hnf(1, {col({D})});
    CHECK(!member(col({Poly(1L)}), dd));
    CHECK(member(col({D * D + D}), dd));
}

TEST_CASE("member invariant under hnf recomputation") {
    testutil::Gen gen(23);
    for (int it = 0; it < 30; ++it) {
        int rank = 2;
        std::vector<PolyColumn> cols;
        for (int k = 0; k < 3; ++k) {
            PolyColumn c(rank);
            for (int i = 0; i < rank; ++i) c[i] = gen.poly({Var::D}, 2);
            cols.push_back(c);
        }
        auto b = hnf(rank, cols);
        PolyColumn probe(rank);
        for (int i = 0; i < rank; ++i) probe[i] = gen.poly({Var::D}, 3);
        CHECK(member(probe, b) == member(probe, hnf(rank, b.gens)));
    }
}

TEST_CASE("intersect") {
    auto e1 = hnf(2, {col({Poly(1L), Poly()})});
    auto e2 = hnf(2, {col({Poly(), Poly(1L)})});
    CHECK(intersect(e1, e2).empty());

    auto s = hnf(2, {col({D, Poly()}), col({Poly(), Poly(1L)})});
    CHECK(intersect(s, s) == s);

    auto t = hnf(2, {col({Poly(1L), Poly()})});
    auto meet = intersect(s, t);
    REQUIRE(meet.gens.size() == 1);
    CHECK(meet.gens[0] == col({D, Poly()}));
}

TEST_CASE("intersect is contained in both spans") {
    testutil::Gen gen(31);
    for (int it = 0; it < 25; ++it) {
        int rank = 2;
        auto mk = [&] {
            std::vector<PolyColumn> cols;
            for (int k = 0; k < 2; ++k) {
                PolyColumn c(rank);
                for (int i = 0; i < rank; ++i) c[i] = gen.poly({Var::D}, 2);
                cols.push_back(c);
            }
            return hnf(rank, cols);
        };
        auto s1 = mk(), s2 = mk();
        auto meet = intersect(s1, s2);
        for (const auto& g : meet.gens) {
            CHECK(member(g, s1));
            CHECK(member(g, s2));
        }
    }
}
