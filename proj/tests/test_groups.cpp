#include "doctest.h"

#include "test_helpers.hpp"

using namespace bct;

namespace {
const FieldRef Q3{3, 1};
}

TEST_CASE("parabolic data derive r") {
    CHECK(sl2_borel().r() == 1);
    CHECK(sp4_siegel().r() == 3);
    CHECK(gl4_22().r() == 4);
    CHECK(sl3_21().r() == 2);
    CHECK(ParabolicDatum::siegel(6).r() == 6);
}

TEST_CASE("invalid parabolic selectors") {
    CHECK_THROWS_AS(ParabolicDatum::make(Family::SL, 3, {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ParabolicDatum::make(Family::GL, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(ParabolicDatum::make(Family::Sp, 4, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(ParabolicDatum::siegel(5), std::invalid_argument);
}

TEST_CASE("group membership validation") {
    CHECK_THROWS_AS(elem(Family::SL, Q3, {{"1", "0"}, {"0", "2"}}), std::invalid_argument);
    CHECK_NOTHROW(elem(Family::SL, Q3, {{"1", "1/3"}, {"0", "1"}}));
    CHECK_THROWS_AS(elem(Family::Sp, Q3,
                         {{"1", "0", "0", "0"},
                          {"0", "1", "0", "0"},
                          {"0", "1", "1", "0"},
                          {"0", "0", "0", "1"}}),
                    std::invalid_argument);   // lower left block must be symmetric
    CHECK_NOTHROW(elem(Family::Sp, Q3,
                       {{"1", "0", "0", "0"},
                        {"0", "1", "0", "0"},
                        {"1", "0", "1", "0"},
                        {"0", "0", "0", "1"}}));
}

TEST_CASE("adjoint of the identity and of torus elements") {
    for (const auto& d : shipped_data()) {
        GroupElement id{d.family(), d.n(), Mat::identity(d.n(), Q3)};
        CHECK(d.adjoint_matrix(id).is_identity());
    }
    // torus acts diagonally on root lines
    auto d = sl3_21();
    Rng rng(31);
    GroupElement t = random_torus(rng, d, Q3, 2);
    Mat ad = d.adjoint_matrix(t);
    for (std::size_t k = 0; k < d.roots().size(); ++k) {
        for (std::size_t l = 0; l < d.roots().size(); ++l)
            if (k != l) CHECK(ad.at(static_cast<int>(k), static_cast<int>(l)).is_zero());
        CHECK(ad.at(static_cast<int>(k), static_cast<int>(k)) ==
              d.alpha_eval(d.roots()[k], t.m));
    }
}

TEST_CASE("explicit adjoint matrix for an SL(2) unipotent") {
    auto d = sl2_borel();
    GroupElement g = elem(Family::SL, Q3, {{"1", "1"}, {"0", "1"}});
    // basis order: X_{(0,1)} = E_12, X_{(1,0)} = E_21, H = diag(1,-1)
    Mat expect = mat(Q3, {{"1", "-1", "-2"}, {"0", "1", "0"}, {"0", "1", "1"}});
    CHECK(d.adjoint_matrix(g) == expect);
}

TEST_CASE("adjoint is a homomorphism") {
    Rng rng(32);
    for (const auto& d : {sl3_21(), sp4_siegel()}) {
        for (int k = 0; k < 25; ++k) {
            GroupElement a = random_group_element(rng, d, Q3, 2);
            GroupElement b = random_group_element(rng, d, Q3, 2);
            CHECK(d.adjoint_matrix(group_mul(a, b)) ==
                  d.adjoint_matrix(a) * d.adjoint_matrix(b));
        }
    }
}

TEST_CASE("weyl constants") {
    auto d = sl2_borel();
    auto weyl = d.weyl_group();
    REQUIRE(weyl.size() == 2);

    // identity: c = 1 on every root
    for (std::size_t k = 0; k < d.roots().size(); ++k)
        CHECK(weyl_constant(weyl[0], static_cast<int>(k), d, {0, 1}) == Scalar(1));

    // the spec representative [[0,-1],[1,0]] sends the positive root vector
    // E_21 to -E_12
    WeylElement w;
    w.rep = mat({0, 1}, {{"0", "-1"}, {"1", "0"}});
    w.perm = {1, 0};
    int positive_index = d.ri_plus()[0];
    auto [img, c] = d.weyl_root_image(w, positive_index, {0, 1});
    CHECK(d.roots()[static_cast<std::size_t>(img)].i == 0);   // lands on E_12
    CHECK(d.roots()[static_cast<std::size_t>(img)].j == 1);
    CHECK(c == Scalar(-1));
}

TEST_CASE("all weyl constants are units for signed-permutation representatives") {
    for (const auto& d : {sl2_borel(), sl3_21(), gl4_22(), sp4_siegel(),
                          ParabolicDatum::make(Family::SL, 4, {2, 2})}) {
        for (const auto& w : d.weyl_group())
            for (std::size_t k = 0; k < d.roots().size(); ++k) {
                Scalar c = weyl_constant(w, static_cast<int>(k), d, {0, 1});
                CHECK((c == Scalar(1) || c == Scalar(-1)));
            }
    }
}

TEST_CASE("levi weyl subgroup sizes") {
    auto count = [](const ParabolicDatum& d) {
        int n = 0;
        for (const auto& w : d.weyl_group())
            if (d.in_levi_weyl(w)) ++n;
        return n;
    };
    CHECK(count(sl2_borel()) == 1);    // W = S_2, W_I trivial
    CHECK(count(sl3_21()) == 2);       // W = S_3, W_I = S_2
    CHECK(count(gl4_22()) == 4);       // W = S_4, W_I = S_2 x S_2
    auto sp = sp4_siegel();
    CHECK(static_cast<int>(sp.weyl_group().size()) == 8);
    CHECK(count(sp) == 2);             // W_I = W(GL_2)
}

TEST_CASE("iwasawa examples") {
    auto check_pair = [](const GroupElement& g, const GroupElement& b, const GroupElement& k) {
        CHECK(b.m * k.m == g.m);
        CHECK(k.m.is_integral());
        CHECK(k.m.det().is_unit());
    };
    GroupElement g1 = elem(Family::SL, Q3, {{"2", "1"}, {"1", "1"}});   // integral
    auto [b1, k1] = iwasawa_factor(g1);
    CHECK(b1.m.is_identity());
    CHECK(k1.m == g1.m);

    GroupElement g2 = elem(Family::SL, Q3, {{"1/3", "0"}, {"0", "3"}});
    auto [b2, k2] = iwasawa_factor(g2);
    CHECK(b2.m == g2.m);
    CHECK(k2.m.is_identity());

    GroupElement g3 = elem(Family::SL, Q3, {{"1", "1/3"}, {"0", "1"}});
    auto [b3, k3] = iwasawa_factor(g3);
    check_pair(g3, b3, k3);
}

TEST_CASE("iwasawa round trips") {
    Rng rng(33);
    auto data = shipped_data();
    for (const auto& d : data) {
        for (int k = 0; k < 250; ++k) {
            GroupElement g = random_group_element(rng, d, Q3, 3);
            auto [b, kk] = iwasawa_factor(g);
            CHECK(b.m * kk.m == g.m);
            CHECK(kk.m.is_integral());
            CHECK(kk.m.det().is_unit());
            CHECK(is_in_family(d.family(), kk.m));
            if (d.family() == Family::Sp) {
                // opposite Borel: lower left block vanishes
                const int m = d.n() / 2;
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) CHECK(b.m.at(m + i, j).is_zero());
            }
        }
    }
}
