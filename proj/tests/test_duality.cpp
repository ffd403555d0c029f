#include "doctest.h"

#include "bigcell/duality.hpp"
#include "test_helpers.hpp"

using namespace bct;

namespace {
const FieldRef Q3{3, 1};
const FieldRef K2{3, 2};

OmegaPoint sl2_point(const Scalar& z) {
    auto d = sl2_borel();
    Mat m = Mat::identity(2, z.field());
    m.at(0, 1) = z;
    return make_omega_point(d, m);
}

OmegaPoint sp4_point(Rng& rng, const ParabolicDatum& d) {
    Mat b(2, 2, Scalar::zero(K2));
    for (int i = 0; i < 2; ++i)
        for (int j = i; j < 2; ++j) {
            Scalar x = random_scalar(rng, K2, 1);
            b.at(i, j) = x;
            b.at(j, i) = x;
        }
    Mat um = Mat::identity(4, K2);
    um.set_block(0, 2, b);
    return make_omega_point(d, um);
}

OmegaPoint sample_point(Rng& rng, const ParabolicDatum& d) {
    if (d.family() == Family::Sp) return sp4_point(rng, d);
    return sl2_point(random_scalar(rng, K2, 1));
}

Mat random_vec(Rng& rng, int dim, FieldRef f) {
    Mat v = Mat::zero(dim, 1, f);
    for (int i = 0; i < dim; ++i) v.at(i, 0) = random_scalar(rng, f, 1);
    return v;
}

std::vector<RationalRep> shipped_sigmas() {
    std::vector<RationalRep> out;
    for (long s : {1L, 2L, 3L}) out.push_back(RationalRep::det_power(sl2_borel(), {0, s}));
    for (long s : {1L, 2L, 3L}) out.push_back(RationalRep::det_power(sp4_siegel(), {0, s}));
    out.push_back(RationalRep::sym_power(sp4_siegel(), 2, 1));
    return out;
}
} // namespace

TEST_CASE("diracs map to the twisted constants") {
    Rng rng(81);
    for (const auto& sigma : shipped_sigmas()) {
        const auto& d = sigma.datum();
        for (int k = 0; k < 6; ++k) {
            GroupElement g = random_group_element(rng, d, Q3, 1);
            Mat v = random_vec(rng, sigma.dim(), K2);
            OmegaPoint u = sample_point(rng, d);
            try {
                FiniteDistribution xi = {DiracTerm{Scalar::one(K2), g, v}};
                CHECK(i_sigma(xi, u, sigma) == psi_function(g, v, u, sigma));
            } catch (const NotInBigCell&) {
                continue;
            }
        }
    }
}

TEST_CASE("linearity in the vector slot") {
    Rng rng(82);
    auto sigma = RationalRep::sym_power(sp4_siegel(), 2, 1);
    const auto& d = sigma.datum();
    GroupElement g = random_group_element(rng, d, Q3, 1);
    Mat v1 = random_vec(rng, 3, K2), v2 = random_vec(rng, 3, K2);
    OmegaPoint u = sp4_point(rng, d);
    FiniteDistribution xi = {DiracTerm{Scalar::one(K2), g, v1},
                            DiracTerm{Scalar::one(K2), g, v2}};
    FiniteDistribution joint = {DiracTerm{Scalar::one(K2), g, v1 + v2}};
    CHECK(i_sigma(xi, u, sigma) == i_sigma(joint, u, sigma));

    FiniteDistribution zero;
    CHECK(i_sigma(zero, u, sigma) == Mat::zero(3, 1, K2));
}

TEST_CASE("evaluation functionals round trip through J") {
    Rng rng(83);
    for (const auto& sigma : shipped_sigmas()) {
        const auto& d = sigma.datum();
        OmegaPoint u = sample_point(rng, d);
        Mat vs = random_vec(rng, sigma.dim(), K2);
        EvaluationFunctional mu{u, vs};
        int done = 0;
        while (done < 8) {
            GroupElement g = random_group_element(rng, d, Q3, 1);
            try {
                CHECK(j_sigma(mu, g, sigma) == phi_function(u, vs, g, sigma));
                ++done;
            } catch (const NotInBigCell&) {
                continue;
            }
        }
        // vstar = 0 gives the zero functional
        EvaluationFunctional zero{u, Mat::zero(sigma.dim(), 1, K2)};
        GroupElement id{d.family(), d.n(), Mat::identity(d.n(), Q3)};
        CHECK(j_sigma(zero, id, sigma) == Mat::zero(sigma.dim(), 1, K2));
    }
}

TEST_CASE("adjointness of the two operators") {
    Rng rng(84);
    for (const auto& sigma : shipped_sigmas()) {
        const auto& d = sigma.datum();
        for (int k = 0; k < 5; ++k) {
            OmegaPoint u = sample_point(rng, d);
            EvaluationFunctional mu{u, random_vec(rng, sigma.dim(), K2)};
            FiniteDistribution xi;
            const int terms = 1 + static_cast<int>(rng.uniform(0, 2));
            for (int t = 0; t < terms; ++t)
                xi.push_back(DiracTerm{random_scalar(rng, K2, 1),
                                       random_group_element(rng, d, Q3, 1),
                                       random_vec(rng, sigma.dim(), K2)});
            try {
                ClassFunction jmu = [&](const GroupElement& ghat) {
                    return j_sigma(mu, ghat, sigma);
                };
                Scalar lhs = pair_distribution(xi, jmu);
                PointFunction ixi = [&](const OmegaPoint& pt) { return i_sigma(xi, pt, sigma); };
                Scalar rhs = pair_functional(mu, ixi);
                CHECK(lhs == rhs);
            } catch (const NotInBigCell&) {
                continue;
            }
        }
    }
}

TEST_CASE("values do not depend on the choice of basis") {
    Rng rng(85);
    auto sigma = RationalRep::sym_power(sp4_siegel(), 2, 1);
    const auto& d = sigma.datum();
    for (int k = 0; k < 5; ++k) {
        OmegaPoint u = sp4_point(rng, d);
        FiniteDistribution xi = {DiracTerm{random_scalar(rng, K2, 1),
                                           random_group_element(rng, d, Q3, 1),
                                           random_vec(rng, 3, K2)}};
        Mat basis(3, 3, Scalar::zero(K2));
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) basis.at(i, j) = random_scalar(rng, K2, 1);
        } while (basis.det().is_zero());
        Mat dual = basis.inverse().transpose();
        try {
            CHECK(i_sigma_in_basis(xi, u, sigma, basis, dual) == i_sigma(xi, u, sigma));
        } catch (const NotInBigCell&) {
            continue;
        }
    }
}

TEST_CASE("dirac bookkeeping is independent of the stored lift") {
    Rng rng(86);
    auto sigma = RationalRep::det_power(sl2_borel(), {0, 2});
    const auto& d = sigma.datum();
    for (int k = 0; k < 10; ++k) {
        GroupElement g = random_group_element(rng, d, Q3, 1);
        GroupElement um = random_radical(rng, d, Q3, 1, /*positive=*/false);
        GroupElement shifted = group_mul(um, g);
        Mat v = random_vec(rng, 1, K2);
        OmegaPoint u = sl2_point(random_scalar(rng, K2, 1));
        try {
            FiniteDistribution a = {DiracTerm{Scalar::one(K2), g, v}};
            FiniteDistribution b = {DiracTerm{Scalar::one(K2), shifted, v}};
            CHECK(i_sigma(a, u, sigma) == i_sigma(b, u, sigma));
        } catch (const NotInBigCell&) {
            continue;
        }
    }
}

TEST_CASE("equivariance over a generating sample") {
    Rng rng(87);
    auto d = sl2_borel();
    std::vector<GroupElement> generators = {
        elem(Family::SL, Q3, {{"2", "0"}, {"0", "1/2"}}),
        elem(Family::SL, Q3, {{"1", "3"}, {"0", "1"}}),
        elem(Family::SL, Q3, {{"1", "0"}, {"3", "1"}}),
        elem(Family::SL, Q3, {{"0", "-1"}, {"1", "0"}}),
    };
    for (long s : {1L, 2L}) {
        auto sigma = RationalRep::det_power(d, {0, s});
        for (const auto& g : generators) {
            FiniteDistribution xi = {
                DiracTerm{Scalar::one(K2), random_group_element(rng, d, Q3, 1),
                          random_vec(rng, 1, K2)},
                DiracTerm{random_scalar(rng, K2, 1), random_group_element(rng, d, Q3, 1),
                          random_vec(rng, 1, K2)}};
            std::vector<OmegaPoint> samples;
            while (samples.size() < 5) {
                OmegaPoint u = sl2_point(random_scalar(rng, K2, 1));
                try {
                    // keep only points where both sides are defined
                    (void)i_sigma(t_star_pullback(g, xi), u, sigma);
                    (void)pi_action(g, [&](const OmegaPoint& q) { return i_sigma(xi, q, sigma); },
                                    u, sigma);
                    samples.push_back(u);
                } catch (const NotInBigCell&) {
                    continue;
                }
            }
            SuiteReport rep = verify_equivariance(g, xi, samples, sigma);
            INFO(rep.checks.front().detail);
            CHECK(rep.pass());
        }
    }
}
