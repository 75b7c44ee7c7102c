#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "korb/lattice.hpp"

using namespace korb;

namespace {

GramLattice u3_minus6() {
    GramLattice u = hyperbolic_u();
    return direct_sum(direct_sum(direct_sum(u, u), u), rank_one(-6));
}

}  // namespace

TEST_CASE("gram constructors and pairings") {
    GramLattice u = hyperbolic_u();
    CHECK(u.rank() == 2);
    CHECK(u.gram().at(0, 0) == 0);
    CHECK(u.gram().at(0, 1) == 1);
    CHECK(u.inner(ZVec{1, 0}, ZVec{0, 1}) == 1);
    CHECK(u.q(ZVec{1, 0}) == 0);
    CHECK(u.inner(ZVec{3, -2}, ZVec{0, 0}) == 0);

    GramLattice L = u3_minus6();
    CHECK(L.rank() == 7);
    ZVec en{0, 0, 0, 0, 0, 0, 1};
    CHECK(L.q(en) == -6);
    CHECK(L.inner(en, ZVec{1, 1, 1, 1, 1, 1, 0}) == 0);

    CHECK(direct_sum(rank_one(-6), u).rank() == 3);
    CHECK_THROWS_AS(rank_one(-5), std::invalid_argument);
    CHECK_THROWS_AS(rank_one(0), std::invalid_argument);
    // asymmetric, odd diagonal and singular grams are all rejected
    CHECK_THROWS_AS(GramLattice(ZMat{{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(GramLattice(ZMat{{2, 0}, {0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(GramLattice(ZMat{{2, 2}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(L.inner(ZVec{1, 0}, en), std::invalid_argument);
}

TEST_CASE("signatures") {
    CHECK(hyperbolic_u().signature() == std::pair<int, int>(1, 1));
    CHECK(u3_minus6().signature() == std::pair<int, int>(3, 4));
    CHECK(rank_one(-6).signature() == std::pair<int, int>(0, 1));
    CHECK(rank_one(4).signature() == std::pair<int, int>(1, 0));
}

TEST_CASE("divisibility and primitivity") {
    GramLattice L = u3_minus6();
    CHECK(L.divisibility(ZVec{1, 0, 0, 0, 0, 0, 0}) == 1);
    CHECK(L.divisibility(ZVec{0, 0, 0, 0, 0, 0, 1}) == 6);
    CHECK(L.divisibility(ZVec{3, 0, 0, 0, 0, 0, 1}) == 3);
    CHECK_THROWS_AS(L.divisibility(ZVec(7, 0)), std::invalid_argument);

    CHECK_FALSE(is_primitive(ZVec{2, 4, 6}));
    CHECK(is_primitive(ZVec{3, 3, 1}));
    CHECK(is_primitive(ZVec{1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("smith normal form") {
    SmithDecomposition s = smith_normal_form(ZMat{{2, 0}, {0, 3}});
    CHECK(s.diag == ZMat{{1, 0}, {0, 6}});
    CHECK(s.left * ZMat{{2, 0}, {0, 3}} * s.right == s.diag);

    CHECK(smith_normal_form(ZMat::identity(3)).diag == ZMat::identity(3));
    CHECK(smith_normal_form(ZMat{{0, 1}, {1, 0}}).diag == ZMat::identity(2));

    // random rectangular round trips
    std::mt19937_64 rng(417);
    std::uniform_int_distribution<long> coord(-20, 20);
    for (int it = 0; it < 200; ++it) {
        ZMat m(3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = coord(rng);
        SmithDecomposition d = smith_normal_form(m);
        CHECK(d.left * m * d.right == d.diag);
        Int dl = d.left.det(), dr = d.right.det();
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));
        Int prev = 0;
        for (int i = 0; i < 3; ++i) {
            const Int& e = d.diag.at(i, i);
            CHECK(e >= 0);
            if (prev > 0 && e != 0) CHECK(divides(prev, e));
            prev = e;
        }
    }
}

TEST_CASE("discriminant groups") {
    CHECK(hyperbolic_u().disc_group().order == 1);
    CHECK(hyperbolic_u().disc_group().invariant_factors.empty());

    GramLattice L = u3_minus6();
    const DiscriminantGroup& d = L.disc_group();
    CHECK(d.order == 6);
    REQUIRE(d.invariant_factors == std::vector<Int>{6});
    REQUIRE(d.generators.size() == 1);
    CHECK(normalize_mod2(L.q_q(d.generators[0])) == Rat(11, 6));
    // 6 * generator lands back in L
    for (const Rat& c : d.generators[0]) {
        Rat scaled = rat_of(6) * c;
        scaled.canonicalize();
        CHECK(scaled.get_den() == 1);
    }

    CHECK(rank_one(-8).disc_group().order == 8);

    // group order always matches |det|
    for (const GramLattice& M :
         {direct_sum(rank_one(-4), rank_one(6)), direct_sum(hyperbolic_u(), rank_one(-12)),
          GramLattice(ZMat{{2, 1}, {1, 4}})}) {
        Int det = M.gram().det();
        CHECK(M.disc_group().order == (det < 0 ? Int(-det) : det));
    }
}

TEST_CASE("disc classes") {
    GramLattice L = u3_minus6();
    const DiscriminantGroup& d = L.disc_group();

    DiscClass zero = disc_class(L, ZVec{1, 0, 0, 0, 0, 0, 0});
    CHECK(zero.is_trivial());
    CHECK(zero.q_value == 0);

    DiscClass gen = disc_class(L, ZVec{0, 0, 0, 0, 0, 0, 1});
    CHECK(d.order_of(gen) == 6);
    CHECK(gen.q_value == Rat(11, 6));

    DiscClass third = disc_class(L, ZVec{3, 3, 0, 0, 0, 0, 1});
    CHECK(d.order_of(third) == 3);
    CHECK(third.q_value == Rat(4, 3));

    CHECK_THROWS_AS(disc_class(L, ZVec{2, 0, 0, 0, 0, 0, 0}), std::invalid_argument);

    // representative / class round trip, negation, scaling
    DiscClass back = d.class_of_dual(L, d.representative(third.components));
    CHECK(back == third);
    CHECK(d.negate(L, d.negate(L, third)) == third);
    CHECK(d.scale(L, gen, d.order).is_trivial());
    CHECK(d.scale(L, gen, 2) == third);
}

TEST_CASE("saturation") {
    GramLattice u = hyperbolic_u();
    std::vector<ZVec> sat = saturate(u, {ZVec{2, 0}});
    REQUIRE(sat.size() == 1);
    CHECK(sat[0] == ZVec{1, 0});

    sat = saturate(u, {ZVec{1, 1}, ZVec{1, -1}});
    REQUIRE(sat.size() == 2);
    CHECK(sat[0] == ZVec{1, 0});
    CHECK(sat[1] == ZVec{0, 1});

    GramLattice L = u3_minus6();
    std::vector<ZVec> span{ZVec{2, 3, 0, 1, 0, 0, 4}, ZVec{0, 0, 5, 1, 2, 0, 1}};
    std::vector<ZVec> once = saturate(L, span);
    CHECK(saturate(L, once) == once);
    for (const ZVec& v : span) CHECK(integer_coords_in(once, v).has_value());
    // a primitive vector lies in the saturation of its own span
    ZVec v{3, 1, 4, 1, 5, 9, 2};
    CHECK(integer_coords_in(saturate(L, {v}), v).has_value());

    CHECK_THROWS_AS(saturate(u, {ZVec{1, 1}, ZVec{2, 2}}), std::invalid_argument);
}

TEST_CASE("dual denominators divide the exponent") {
    GramLattice L = u3_minus6();
    Int expo = L.disc_group().exponent();
    std::mt19937_64 rng(98);
    std::uniform_int_distribution<long> coord(-9, 9);
    int done = 0;
    while (done < 100) {
        ZVec v(7);
        for (auto& c : v) c = coord(rng);
        if (is_zero(v)) continue;
        Int content_v = content(v);
        for (auto& c : v) c = exact_div(c, content_v);
        Rat r(L.q(v), L.divisibility(v) * L.divisibility(v));
        r.canonicalize();
        CHECK(divides(Int(r.get_den()), expo));
        ++done;
    }
}
