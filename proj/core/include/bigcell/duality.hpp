#pragma once

#include "bigcell/reps.hpp"

namespace bigcell {

/// Formal combination sum_i c_i xi_{ghat_i, v_i} of Dirac distributions;
/// pairs with a class function through <phi, xi> = sum c_i <v_i, phi(ghat_i)>.
struct DiracTerm {
    Scalar coeff;
    GroupElement ghat;   // stored lift; results are lift independent
    Mat v;               // column vector
};
using FiniteDistribution = std::vector<DiracTerm>;

/// Evaluation functional mu_{u, vstar}: psi -> <psi(u), vstar>.
struct EvaluationFunctional {
    OmegaPoint u;
    Mat vstar;
};

Scalar pair_distribution(const FiniteDistribution& xi, const ClassFunction& phi);
Scalar pair_functional(const EvaluationFunctional& mu, const PointFunction& psi);

/// I(xi)(u) = sum_k <phi_{u, v*_k}, xi> v_k over the standard basis.
Mat i_sigma(const FiniteDistribution& xi, const OmegaPoint& u, const RationalRep& sigma);
/// Same with an arbitrary basis (columns) and its dual basis (columns of
/// the inverse transpose); the value is basis independent.
Mat i_sigma_in_basis(const FiniteDistribution& xi, const OmegaPoint& u, const RationalRep& sigma,
                     const Mat& basis, const Mat& dual_basis);
/// J(mu)(ghat) = sum_k <psi_{ghat, v_k}, mu> v*_k.
Mat j_sigma(const EvaluationFunctional& mu, const GroupElement& ghat, const RationalRep& sigma);

/// Right-translation pullback on Dirac combinations:
/// xi_{ghat, v} -> xi_{ghat g^{-1}, v}.
FiniteDistribution t_star_pullback(const GroupElement& g, const FiniteDistribution& xi);

/// Exact check of I(T*(g) xi) = pi(g) I(xi) at the sampled points.
SuiteReport verify_equivariance(const GroupElement& g, const FiniteDistribution& xi,
                                const std::vector<OmegaPoint>& samples, const RationalRep& sigma);

/**
 * Full duality check battery for one representation: Diracs against the
 * twisted constants, the adjointness of the two operators, the
 * round trip of evaluation functionals, basis independence, and
 * equivariance over torus, root and Weyl generators.
 */
SuiteReport duality_suite(const RationalRep& sigma, int samples, Rng& rng, FieldRef f);

} // namespace bigcell
