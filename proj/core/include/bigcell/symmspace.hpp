#pragma once

#include <optional>
#include <vector>

#include "bigcell/bigcell.hpp"

namespace bigcell {

/// Point of the symmetric space: a block upper unipotent element of U^-
/// over the base field or a ramified extension.
struct OmegaPoint {
    Mat m;
};

/// Validates the unipotent shape against the datum.
OmegaPoint make_omega_point(const ParabolicDatum& d, Mat m);

/// f(ghat, u) := f(g u).  Well defined on the class of g by left
/// invariance; zero is a legal value.
Scalar f_pair(const GroupElement& ghat, const OmegaPoint& u, const ParabolicDatum& d);

/// g * u: the U^- component of g u.  Throws NotInBigCell when f(g u) = 0.
OmegaPoint star_action(const GroupElement& g, const OmegaPoint& u, const ParabolicDatum& d);

/// j(g, u) = (g * u)^{-1} g u, the P^+ component of g u.
GroupElement automorphy_factor(const GroupElement& g, const OmegaPoint& u, const ParabolicDatum& d);

/**
 * N: the homogeneity degree of det(x)^r f(x) as a polynomial in the
 * matrix entries (f read through its closed form); M: an integer with
 * all coefficients bounded by |pi|^{NM}; M = 0 holds for the shipped
 * data because the construction keeps every coefficient integral.
 */
struct CoveringConstants {
    long N = 0;
    long M = 0;
    long r = 0;
};
CoveringConstants covering_constants(const ParabolicDatum& d, int p);

/// log-form of |u| = max{1, |u_ij|}: min(0, min valuation of the entries).
Valuation sup_norm_valuation(const OmegaPoint& u);

/// u lies in B(m; ghat): |f(ghat, u)| < |u|^N |pi|^{N(M+m)}.
bool in_ball(const OmegaPoint& u, long m, const GroupElement& ghat, const ParabolicDatum& d);

/// u lies in Omega(m) relative to the supplied representatives.
bool in_omega_m(const OmegaPoint& u, long m, const std::vector<GroupElement>& reps,
                const ParabolicDatum& d);

/**
 * Representative lifts for the classes of integral elements modulo the
 * congruence level N m + 1 (one lift per bottom-row class; the identity
 * class comes first).  Supported for SL(2) with p <= 5 and m <= 1.
 */
std::vector<GroupElement> enumerate_reps(const ParabolicDatum& d, int p, long m);

/// Degree and coefficient data of the U^- projection written with the
/// denominators cleared: entries of det(x)^t f(x)^s (x_12 x_22^{-1}).
struct ProjectionConstants {
    long D = 0;   // highest entry degree
    long L = 0;   // coefficient bound exponent
    long s = 1;
    long t = 0;
};
ProjectionConstants projection_constants(const ParabolicDatum& d, int p);

/// The certified level with g * Omega(m) inside Omega(m') for integral g:
/// m' = max(0, -M - L + max(D, N s)(M + m)).
long translate_bound(long m, const ParabolicDatum& d, int p);

/// Hunts for a class with f(ghat, u) = 0: structured candidates first,
/// then random integral samples.  Empty when nothing was found.
std::optional<GroupElement> omega_falsify(const OmegaPoint& u, int trials, Rng& rng,
                                          const ParabolicDatum& d, int p);

/// Random point of U^- with entries over the given field.
OmegaPoint random_omega_point(Rng& rng, const ParabolicDatum& d, FieldRef f, int window);

/// Exact checks of the automorphy identities on random triples: the
/// cocycle law, the action law, f o j = f, multiplicativity, and the
/// two Levi twists.
SuiteReport verify_cocycle_suite(const ParabolicDatum& d, int samples, Rng& rng, FieldRef f);

} // namespace bigcell
