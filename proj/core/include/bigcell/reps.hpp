#pragma once

#include <functional>

#include "bigcell/symmspace.hpp"

namespace bigcell {

/**
 * Finite-dimensional rational representation of the Levi, extended to
 * the parabolic through its block-diagonal part (the unipotent radical
 * acts trivially).  Vectors are d x 1 matrices, covectors d x 1 as
 * well; the pairing is the coordinate sum, and the dual representation
 * acts by the transposed inverse.
 *
 * Shipped catalog: per-block determinant powers, symmetric powers of a
 * designated block, the big-cell character itself, and caller-supplied
 * evaluation maps.
 */
class RationalRep {
public:
    /// prod_b det(block_b)^{weights[b]}; one dimensional.
    static RationalRep det_power(const ParabolicDatum& d, std::vector<long> weights);
    /// Sym^k of the standard representation of one block.
    static RationalRep sym_power(const ParabolicDatum& d, int k, int block);
    /// The restriction of the big-cell function, a character of P^+.
    static RationalRep f_character(const ParabolicDatum& d);
    /// Arbitrary evaluation map on Levi elements (homomorphism spot-checked
    /// through spot_check).
    static RationalRep custom(const ParabolicDatum& d, int dim,
                              std::function<Mat(const Mat&)> levi_eval);

    int dim() const { return dim_; }
    const ParabolicDatum& datum() const { return datum_; }

    /// rho at an element of P^+ (or P^-, or L).
    Mat at(const GroupElement& g) const;
    /// Contragredient: transpose of rho(g^{-1}).
    Mat dual_at(const GroupElement& g) const;

    /// Exact homomorphism check on random Levi pairs.
    bool spot_check(Rng& rng, int samples, int p, int window) const;

private:
    RationalRep(ParabolicDatum d, int dim, std::function<Mat(const Mat&)> eval, bool via_levi)
        : datum_(std::move(d)), dim_(dim), eval_(std::move(eval)), via_levi_(via_levi) {}

    ParabolicDatum datum_;
    int dim_;
    std::function<Mat(const Mat&)> eval_;   // takes the Levi part (or the full element)
    bool via_levi_;
};

Scalar pairing(const Mat& v, const Mat& vstar);

/// psi_{ghat, v}(u) = sigma(j(ghat, u))^{-1} v.
Mat psi_function(const GroupElement& ghat, const Mat& v, const OmegaPoint& u,
                 const RationalRep& sigma);
/// phi_{u, vstar}(ghat) = sigma^*(j(ghat, u)) vstar.
Mat phi_function(const OmegaPoint& u, const Mat& vstar, const GroupElement& ghat,
                 const RationalRep& sigma);

using PointFunction = std::function<Mat(const OmegaPoint&)>;    // V valued on Omega
using ClassFunction = std::function<Mat(const GroupElement&)>;  // V* valued on classes

/// (pi_sigma(g) psi)(u) = sigma(j(g^{-1}, u))^{-1} psi(g^{-1} * u).
Mat pi_action(const GroupElement& g, const PointFunction& psi, const OmegaPoint& u,
              const RationalRep& sigma);
/// (T(g) phi)(g') = phi(g' g).
Mat t_action(const GroupElement& g, const ClassFunction& phi, const GroupElement& gprime);

/// The function u -> psi_{ghat, v}(u) as a closure.
PointFunction psi_closure(const GroupElement& ghat, const Mat& v, const RationalRep& sigma);
/// The function ghat -> phi_{u, vstar}(ghat) as a closure.
ClassFunction phi_closure(const OmegaPoint& u, const Mat& vstar, const RationalRep& sigma);

} // namespace bigcell
