#include "bigcell/duality.hpp"

namespace bigcell {

Scalar pair_distribution(const FiniteDistribution& xi, const ClassFunction& phi) {
    Scalar s(0);
    for (const auto& term : xi) s += term.coeff * pairing(term.v, phi(term.ghat));
    return s;
}

Scalar pair_functional(const EvaluationFunctional& mu, const PointFunction& psi) {
    return pairing(psi(mu.u), mu.vstar);
}

Mat i_sigma(const FiniteDistribution& xi, const OmegaPoint& u, const RationalRep& sigma) {
    const int d = sigma.dim();
    FieldRef f = u.m.field();
    Mat basis = Mat::identity(d, f);
    return i_sigma_in_basis(xi, u, sigma, basis, basis);
}

Mat i_sigma_in_basis(const FiniteDistribution& xi, const OmegaPoint& u, const RationalRep& sigma,
                     const Mat& basis, const Mat& dual_basis) {
    const int d = sigma.dim();
    if (basis.rows() != d || basis.cols() != d || dual_basis.rows() != d || dual_basis.cols() != d)
        throw std::invalid_argument("i_sigma_in_basis: basis shape mismatch");
    FieldRef f = u.m.field();
    Mat out = Mat::zero(d, 1, f);
    for (int k = 0; k < d; ++k) {
        Mat vk = basis.block(0, k, d, 1);
        Mat vkstar = dual_basis.block(0, k, d, 1);
        Scalar c = pair_distribution(xi, phi_closure(u, vkstar, sigma));
        out = out + vk * c;
    }
    return out;
}

Mat j_sigma(const EvaluationFunctional& mu, const GroupElement& ghat, const RationalRep& sigma) {
    const int d = sigma.dim();
    FieldRef f = mu.u.m.field();
    Mat out = Mat::zero(d, 1, f);
    for (int k = 0; k < d; ++k) {
        Mat vk = Mat::zero(d, 1, f);
        vk.at(k, 0) = Scalar::one(f);
        Scalar c = pair_functional(mu, psi_closure(ghat, vk, sigma));
        Mat vkstar = vk;   // standard basis is self-dual under the coordinate pairing
        out = out + vkstar * c;
    }
    return out;
}

FiniteDistribution t_star_pullback(const GroupElement& g, const FiniteDistribution& xi) {
    GroupElement ginv = group_inverse(g);
    FiniteDistribution out;
    out.reserve(xi.size());
    for (const auto& term : xi)
        out.push_back(DiracTerm{term.coeff, group_mul(term.ghat, ginv), term.v});
    return out;
}

namespace {
Mat random_vector(Rng& rng, int dim, FieldRef f) {
    Mat v = Mat::zero(dim, 1, f);
    for (int i = 0; i < dim; ++i) v.at(i, 0) = random_scalar(rng, f, 1);
    return v;
}
} // namespace

SuiteReport duality_suite(const RationalRep& sigma, int samples, Rng& rng, FieldRef f) {
    const ParabolicDatum& d = sigma.datum();
    const FieldRef base{f.p, 1};
    const int dim = sigma.dim();
    SuiteReport report;
    report.suite = "duality:" + d.name();

    // Diracs evaluate to the twisted constants.
    {
        bool ok = true;
        std::string detail;
        int done = 0;
        while (done < samples) {
            GroupElement g = random_group_element(rng, d, base, 1);
            Mat v = random_vector(rng, dim, f);
            OmegaPoint u = random_omega_point(rng, d, f, 1);
            try {
                FiniteDistribution xi = {DiracTerm{Scalar::one(f), g, v}};
                if (i_sigma(xi, u, sigma) != psi_function(g, v, u, sigma) && ok) {
                    ok = false;
                    detail = "I(xi_{g,v}) != psi_{g,v} at sample " + std::to_string(done);
                }
                ++done;
            } catch (const NotInBigCell&) {
                continue;
            }
        }
        report.add("dirac-to-psi", ok, detail);
    }

    // Adjointness of the two operators.
    {
        bool ok = true;
        std::string detail;
        int done = 0;
        while (done < samples) {
            OmegaPoint u = random_omega_point(rng, d, f, 1);
            EvaluationFunctional mu{u, random_vector(rng, dim, f)};
            FiniteDistribution xi;
            const int terms = 1 + static_cast<int>(rng.uniform(0, 2));
            for (int t = 0; t < terms; ++t)
                xi.push_back(DiracTerm{random_scalar(rng, f, 1),
                                       random_group_element(rng, d, base, 1),
                                       random_vector(rng, dim, f)});
            try {
                ClassFunction jmu = [&](const GroupElement& ghat) { return j_sigma(mu, ghat, sigma); };
                PointFunction ixi = [&](const OmegaPoint& pt) { return i_sigma(xi, pt, sigma); };
                if (pair_distribution(xi, jmu) != pair_functional(mu, ixi) && ok) {
                    ok = false;
                    detail = "<J(mu), xi> != <I(xi), mu> at sample " + std::to_string(done);
                }
                ++done;
            } catch (const NotInBigCell&) {
                continue;
            }
        }
        report.add("adjointness", ok, detail);
    }

    // J on evaluation functionals reproduces the phi generators.
    {
        bool ok = true;
        std::string detail;
        int done = 0;
        while (done < samples) {
            OmegaPoint u = random_omega_point(rng, d, f, 1);
            Mat vs = random_vector(rng, dim, f);
            GroupElement g = random_group_element(rng, d, base, 1);
            try {
                EvaluationFunctional mu{u, vs};
                if (j_sigma(mu, g, sigma) != phi_function(u, vs, g, sigma) && ok) {
                    ok = false;
                    detail = "J(mu_{u,v*}) != phi_{u,v*} at sample " + std::to_string(done);
                }
                ++done;
            } catch (const NotInBigCell&) {
                continue;
            }
        }
        report.add("functional-round-trip", ok, detail);
    }

    // Basis independence of I.
    {
        bool ok = true;
        std::string detail;
        int done = 0;
        while (done < samples) {
            OmegaPoint u = random_omega_point(rng, d, f, 1);
            FiniteDistribution xi = {DiracTerm{random_scalar(rng, f, 1),
                                               random_group_element(rng, d, base, 1),
                                               random_vector(rng, dim, f)}};
            Mat basis(dim, dim, Scalar::zero(f));
            do {
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) basis.at(i, j) = random_scalar(rng, f, 1);
            } while (basis.det().is_zero());
            try {
                if (i_sigma_in_basis(xi, u, sigma, basis, basis.inverse().transpose()) !=
                        i_sigma(xi, u, sigma) &&
                    ok) {
                    ok = false;
                    detail = "basis dependence at sample " + std::to_string(done);
                }
                ++done;
            } catch (const NotInBigCell&) {
                continue;
            }
        }
        report.add("basis-independence", ok, detail);
    }

    // Equivariance over torus, root and Weyl generators.
    {
        bool ok = true;
        std::string detail;
        std::vector<GroupElement> generators;
        generators.push_back(random_torus(rng, d, base, 1));
        for (const Root& a : d.roots()) {
            Mat step = Mat::identity(d.n(), base) +
                       d.root_vector(a, base) * Scalar::from_rational(rng.uniform(1, 5), base);
            generators.push_back(GroupElement{d.family(), d.n(), std::move(step)});
        }
        for (const auto& w : d.weyl_group()) {
            if (w.rep.is_identity()) continue;
            generators.push_back(GroupElement{d.family(), d.n(), promote(w.rep, base)});
            break;
        }
        for (const auto& g : generators) {
            FiniteDistribution xi = {DiracTerm{Scalar::one(f),
                                               random_group_element(rng, d, base, 1),
                                               random_vector(rng, dim, f)},
                                     DiracTerm{random_scalar(rng, f, 1),
                                               random_group_element(rng, d, base, 1),
                                               random_vector(rng, dim, f)}};
            std::vector<OmegaPoint> pts;
            int guard = 0;
            while (static_cast<int>(pts.size()) < samples && guard < samples * 50) {
                ++guard;
                OmegaPoint u = random_omega_point(rng, d, f, 1);
                try {
                    (void)i_sigma(t_star_pullback(g, xi), u, sigma);
                    PointFunction ixi = [&](const OmegaPoint& pt) { return i_sigma(xi, pt, sigma); };
                    (void)pi_action(g, ixi, u, sigma);
                    pts.push_back(u);
                } catch (const NotInBigCell&) {
                    continue;
                }
            }
            SuiteReport sub = verify_equivariance(g, xi, pts, sigma);
            if (!sub.pass() && ok) {
                ok = false;
                detail = "equivariance failed for a generator: " + sub.checks.front().detail;
            }
        }
        report.add("equivariance", ok, detail);
    }

    return report;
}

SuiteReport verify_equivariance(const GroupElement& g, const FiniteDistribution& xi,
                                const std::vector<OmegaPoint>& samples, const RationalRep& sigma) {
    SuiteReport report;
    report.suite = "equivariance";
    FiniteDistribution pulled = t_star_pullback(g, xi);
    bool ok = true;
    std::string detail;
    for (std::size_t s = 0; s < samples.size() && ok; ++s) {
        const OmegaPoint& u = samples[s];
        Mat lhs = i_sigma(pulled, u, sigma);
        PointFunction iofxi = [&xi, &sigma](const OmegaPoint& pt) { return i_sigma(xi, pt, sigma); };
        Mat rhs = pi_action(g, iofxi, u, sigma);
        if (lhs != rhs) {
            ok = false;
            detail = "mismatch at sample " + std::to_string(s);
        }
    }
    report.add("I(T*(g)xi) = pi(g) I(xi)", ok, detail);
    return report;
}

} // namespace bigcell
