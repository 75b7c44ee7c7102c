#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "korb/kummer.hpp"

using namespace korb;

namespace {

ZVec k7(long a, long b, long c, long d, long e, long f, long g) {
    return ZVec{a, b, c, d, e, f, g};
}

}  // namespace

TEST_CASE("ambient lattices") {
    GramLattice mukai = mukai_lattice();
    CHECK(mukai.rank() == 8);
    CHECK(mukai.gram().det() == 1);
    CHECK(mukai.signature() == std::pair<int, int>(4, 4));
    CHECK(mukai.disc_group().order == 1);

    GramLattice L = kummer_lattice(2);
    CHECK(L.rank() == 7);
    CHECK(L.signature() == std::pair<int, int>(3, 4));
    CHECK(L.q(k7(0, 0, 0, 0, 0, 0, 1)) == -6);
    CHECK(L.disc_group().order == 6);
    CHECK(kummer_lattice(1).q(k7(0, 0, 0, 0, 0, 0, 1)) == -4);
    CHECK_THROWS_AS(kummer_lattice(0), std::invalid_argument);
}

TEST_CASE("mukai vectors and the embedding") {
    MukaiVector vn = mukai_vn(2);
    CHECK(vn.r == 1);
    CHECK(vn.s == -3);
    CHECK(vn.square() == 6);
    CHECK(mukai_coords(vn) == ZVec{0, 0, 0, 0, 0, 0, 1, 3});
    CHECK(from_mukai_coords(mukai_coords(vn)) == vn);

    MukaiVector en = embed_h2(2, k7(0, 0, 0, 0, 0, 0, 1));
    CHECK(en.r == 1);
    CHECK(en.d == ZVec(6, 0));
    CHECK(en.s == 3);

    MukaiVector pure = embed_h2(2, k7(1, -2, 3, 0, 0, 1, 0));
    CHECK(pure.r == 0);
    CHECK(pure.s == 0);
    CHECK(pure.d == ZVec{1, -2, 3, 0, 0, 1});

    MukaiVector img = embed_h2(2, k7(3, 3, 0, 0, 0, 0, 1));
    CHECK(img == MukaiVector{1, ZVec{3, 3, 0, 0, 0, 0}, 3});
    CHECK(img.square() == 12);

    // embedding is isometric onto the orthogonal complement of v_n
    GramLattice mukai = mukai_lattice();
    GramLattice L = kummer_lattice(3);
    std::mt19937_64 rng(7001);
    std::uniform_int_distribution<long> coord(-5, 5);
    for (int it = 0; it < 50; ++it) {
        ZVec h(7);
        for (auto& c : h) c = coord(rng);
        ZVec img8 = mukai_coords(embed_h2(3, h));
        CHECK(mukai.q(img8) == L.q(h));
        CHECK(mukai.inner(img8, mukai_coords(mukai_vn(3))) == 0);
    }
}

TEST_CASE("monodromy predicate") {
    GramLattice L = kummer_lattice(2);
    CHECK(is_monodromy(make_isometry(L, ZMat::identity(7))));
    CHECK(is_monodromy(make_isometry(L, -ZMat::identity(7))));

    Isometry refl = reflection_en(2);
    CHECK(refl.det == -1);
    CHECK(refl.disc_action.scalar == ScalarAction::minus_one);
    CHECK(refl.orientation == 1);
    CHECK(is_monodromy(refl));

    // swapping u1 and f1 has det -1 but fixes the discriminant group
    ZMat swap01 = ZMat::identity(7);
    swap01.at(0, 0) = swap01.at(1, 1) = 0;
    swap01.at(0, 1) = swap01.at(1, 0) = 1;
    CHECK_FALSE(is_monodromy(make_isometry(L, swap01)));

    ZVec e = k7(1, 0, 0, 0, 0, 0, 0), a = k7(0, 0, 2, -1, 0, 1, 0);
    CHECK(is_monodromy(transvection(L, e, a)));
}

TEST_CASE("discriminant class coefficient") {
    CHECK(disc_class_coefficient(2, k7(1, 2, 0, 0, 0, 0, 0)) == 0);
    CHECK(disc_class_coefficient(2, k7(0, 0, 0, 0, 0, 0, 1)) == 1);
    CHECK(disc_class_coefficient(2, k7(3, 3, 0, 0, 0, 0, 1)) == 2);

    // against the generator arithmetic of the discriminant group
    GramLattice L = kummer_lattice(2);
    const DiscriminantGroup& d = L.disc_group();
    DiscClass gamma = disc_class(L, k7(0, 0, 0, 0, 0, 0, 1));
    std::mt19937_64 rng(88);
    std::uniform_int_distribution<long> coord(-6, 6);
    int done = 0;
    while (done < 30) {
        ZVec h(7);
        for (auto& c : h) c = coord(rng);
        if (is_zero(h) || !is_primitive(h)) continue;
        CHECK(disc_class(L, h) == d.scale(L, gamma, disc_class_coefficient(2, h)));
        ++done;
    }
}

TEST_CASE("normal form goldens") {
    PolarizationType p = normal_form(2, k7(1, 2, 0, 0, 0, 0, 0));
    CHECK(p.t == 1);
    CHECK(p.beta == 0);
    CHECK(p.m == 6);
    CHECK(p.d_prime == 2);
    CHECK(p.square == 4);

    p = normal_form(2, k7(3, 3, 0, 0, 0, 0, 1));
    CHECK(p.t == 3);
    CHECK(p.beta == 2);
    CHECK(p.m == 2);
    CHECK(p.d_prime == 1);
    CHECK(p.square == 12);

    p = normal_form(3, k7(2, 4, 0, 0, 0, 0, 1));
    CHECK(p.t == 2);
    CHECK(p.beta == 4);
    CHECK(p.m == 4);
    CHECK(p.d_prime == 2);
    CHECK(p.square == 8);

    // the reflected vector folds onto the same type
    CHECK(normal_form(2, k7(3, 3, 0, 0, 0, 0, -1)) == normal_form(2, k7(3, 3, 0, 0, 0, 0, 1)));

    CHECK_THROWS_AS(normal_form(2, k7(2, 4, 0, 0, 0, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(normal_form(2, k7(1, -2, 0, 0, 0, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(normal_form(1, k7(1, 2, 0, 0, 0, 0, 0)), std::invalid_argument);
    CHECK(normal_form(1, k7(1, 2, 0, 0, 0, 0, 0), /*allow_n1=*/true).d_prime == 2);
}

TEST_CASE("type validation") {
    PolarizationType good{2, 12, 3, 2, 2, 1};
    validate_polarization_type(good);

    PolarizationType bad_t{2, 12, 4, 2, 2, 1};
    CHECK_THROWS_AS(validate_polarization_type(bad_t), std::invalid_argument);
    PolarizationType bad_beta{2, 12, 3, 1, 2, 1};
    CHECK_THROWS_AS(validate_polarization_type(bad_beta), std::invalid_argument);
    PolarizationType bad_square{2, 14, 3, 2, 2, 1};
    CHECK_THROWS_AS(validate_polarization_type(bad_square), std::invalid_argument);
}

TEST_CASE("realize round trips") {
    CHECK(realize(PolarizationType{2, 4, 1, 0, 6, 2}) == k7(1, 2, 0, 0, 0, 0, 0));
    CHECK(realize(PolarizationType{2, 12, 3, 2, 2, 1}) == k7(3, 3, 0, 0, 0, 0, 1));
    CHECK(realize(PolarizationType{3, 8, 2, 4, 4, 2}) == k7(2, 4, 0, 0, 0, 0, 1));

    for (int n = 2; n <= 5; ++n) {
        const Int period = 2 * (n + 1);
        for (Int t = 1; t <= period; ++t) {
            if (!divides(t, period)) continue;
            Int m = exact_div(period, t);
            for (Int beta = 0; beta <= n + 1; ++beta) {
                if (beta == 0 ? t != 1 : gcd(beta, period) != m) continue;
                Int bm = beta == 0 ? Int(0) : exact_div(beta, gcd(period, beta));
                for (Int dp = 1; dp <= 12; ++dp) {
                    PolarizationType p;
                    p.n = n;
                    p.t = t;
                    p.beta = beta;
                    p.m = beta == 0 ? period : gcd(period, beta);
                    p.d_prime = dp;
                    p.square = 2 * t * t * dp - bm * bm * period;
                    if (p.square <= 0) continue;
                    validate_polarization_type(p);
                    CHECK(normal_form(n, realize(p)) == p);
                }
            }
        }
    }
}

TEST_CASE("equivalence of polarized classes") {
    CHECK(equivalent(2, k7(1, 2, 0, 0, 0, 0, 0), k7(0, 0, 1, 2, 0, 0, 0)));
    CHECK_FALSE(equivalent(2, k7(1, 6, 0, 0, 0, 0, 0), k7(3, 3, 0, 0, 0, 0, 1)));
    CHECK_FALSE(equivalent(2, k7(1, 2, 0, 0, 0, 0, 0), k7(1, 3, 0, 0, 0, 0, 0)));
}

TEST_CASE("orbit enumeration") {
    std::vector<PolarizationType> sq4 = orbit_enumerate(2, 4);
    REQUIRE(sq4.size() == 1);
    CHECK(sq4[0] == PolarizationType{2, 4, 1, 0, 6, 2});

    std::vector<PolarizationType> sq12 = orbit_enumerate(2, 12);
    REQUIRE(sq12.size() == 2);
    CHECK(sq12[0] == PolarizationType{2, 12, 1, 0, 6, 6});
    CHECK(sq12[1] == PolarizationType{2, 12, 3, 2, 2, 1});

    // square 2 admits divisibility 2 as well: 2u1+2f1+e has square 8-6 = 2
    std::vector<PolarizationType> sq2 = orbit_enumerate(2, 2);
    REQUIRE(sq2.size() == 2);
    CHECK(sq2[0] == PolarizationType{2, 2, 1, 0, 6, 1});
    CHECK(sq2[1] == PolarizationType{2, 2, 2, 3, 3, 1});
    CHECK(normal_form(2, k7(2, 2, 0, 0, 0, 0, 1)) == sq2[1]);

    for (const PolarizationType& p : sq12) {
        validate_polarization_type(p);
        CHECK(normal_form(2, realize(p)) == p);
    }

    CHECK_THROWS_AS(orbit_enumerate(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(orbit_enumerate(2, -4), std::invalid_argument);
    CHECK_THROWS_AS(orbit_enumerate(1, 4), std::invalid_argument);
}

TEST_CASE("orbit enumeration matches brute force at small bound") {
    std::set<long long> wanted{2, 4, 12};
    std::map<long long, std::set<std::array<long, 3>>> found;
    for (long long c0 = -3; c0 <= 3; ++c0)
    for (long long c1 = -3; c1 <= 3; ++c1)
    for (long long c2 = -3; c2 <= 3; ++c2)
    for (long long c3 = -3; c3 <= 3; ++c3)
    for (long long c4 = -3; c4 <= 3; ++c4)
    for (long long c5 = -3; c5 <= 3; ++c5)
    for (long long c6 = -3; c6 <= 3; ++c6) {
        long long q2 = 2 * (c0 * c1 + c2 * c3 + c4 * c5) - 6 * c6 * c6;
        if (!wanted.count(q2)) continue;
        long long g = 0;
        for (long long ci : {c0, c1, c2, c3, c4, c5, c6}) g = std::gcd(g, ci);
        if (g != 1) continue;
        PolarizationType p = normal_form(2, k7(c0, c1, c2, c3, c4, c5, c6));
        found[q2].insert({(long)p.t.get_si(), (long)p.beta.get_si(), (long)p.d_prime.get_si()});
    }
    for (long long sq : wanted) {
        std::set<std::array<long, 3>> expected;
        for (const PolarizationType& p : orbit_enumerate(2, (long)sq))
            expected.insert({(long)p.t.get_si(), (long)p.beta.get_si(), (long)p.d_prime.get_si()});
        CHECK(found[sq] == expected);
    }
}

TEST_CASE("saturation invariant") {
    SaturatedPairInvariant a = saturation_invariant(2, k7(1, 2, 0, 0, 0, 0, 0));
    CHECK(a.gram2 == ZMat{{6, 0}, {0, 4}});
    CHECK(a.v_coords == ZVec{1, 0});
    CHECK(a.h_coords == ZVec{0, 1});

    CHECK(saturation_invariant(2, k7(0, 0, 1, 2, 0, 0, 0)) == a);

    SaturatedPairInvariant b = saturation_invariant(2, k7(3, 3, 0, 0, 0, 0, 1));
    CHECK_FALSE(b == a);

    // v always has square 2n+2 in the canonical basis
    for (const SaturatedPairInvariant& si : {a, b}) {
        Int qv = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) qv += si.v_coords[i] * si.gram2.at(i, j) * si.v_coords[j];
        CHECK(qv == 6);
    }

    // invariance under the reflection fold
    CHECK(saturation_invariant(2, k7(3, 3, 0, 0, 0, 0, -1)) == b);
}

TEST_CASE("saturation invariant is monodromy invariant on samples") {
    GramLattice L = kummer_lattice(2);
    std::mt19937_64 rng(515);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::vector<ZVec> samples{k7(1, 2, 0, 0, 0, 0, 0), k7(3, 3, 0, 0, 0, 0, 1),
                              k7(2, 2, 0, 0, 0, 0, 1), k7(2, 3, 1, 1, 0, 1, 1)};
    for (const ZVec& h0 : samples) {
        ZVec h = h0;
        for (int step = 0; step < 25; ++step) {
            if (step % 7 == 3) {
                h = apply_isometry(reflection_en(2), h);
            } else {
                ZVec e(7, 0), a(7);
                int plane = (int)(rng() % 3);
                e[2 * plane + (rng() % 2)] = 1;
                for (auto& c : a) c = coord(rng);
                if (L.inner(e, a) != 0) continue;
                h = mat_vec(transvection_matrix(L, e, a), h);
            }
            CHECK(saturation_invariant(2, h) == saturation_invariant(2, h0));
            CHECK(normal_form(2, h) == normal_form(2, h0));
        }
    }
}

TEST_CASE("monodromy construction") {
    GramLattice L = kummer_lattice(2);
    for (const ZVec& h : {k7(1, 2, 0, 0, 0, 0, 0), k7(3, 3, 0, 0, 0, 0, -1), k7(2, 2, 0, 0, 0, 0, 1),
                          k7(2, 3, 1, 1, 0, 1, 1)}) {
        Isometry g = monodromy_to_normal_form(2, h);
        CHECK(is_monodromy(g));
        CHECK(apply_isometry(g, h) == realize(normal_form(2, h)));
    }

    std::optional<Isometry> g = monodromy_between(2, k7(1, 2, 0, 0, 0, 0, 0), k7(0, 0, 1, 2, 0, 0, 0));
    REQUIRE(g.has_value());
    CHECK(is_monodromy(*g));
    CHECK(apply_isometry(*g, k7(1, 2, 0, 0, 0, 0, 0)) == k7(0, 0, 1, 2, 0, 0, 0));

    // the fold: same type, opposite discriminant classes, needs det -1
    std::optional<Isometry> f = monodromy_between(2, k7(3, 3, 0, 0, 0, 0, 1), k7(3, 3, 0, 0, 0, 0, -1));
    REQUIRE(f.has_value());
    CHECK(is_monodromy(*f));
    CHECK(f->det == -1);
    CHECK(apply_isometry(*f, k7(3, 3, 0, 0, 0, 0, 1)) == k7(3, 3, 0, 0, 0, 0, -1));

    CHECK_FALSE(monodromy_between(2, k7(1, 6, 0, 0, 0, 0, 0), k7(3, 3, 0, 0, 0, 0, 1)).has_value());
}
