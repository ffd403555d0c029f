#pragma once

#include <stdexcept>

#include "bigcell/groups.hpp"
#include "bigcell/rand.hpp"
#include "bigcell/report.hpp"

namespace bigcell {

/// Requested a factorization or projection at a point where the
/// big-cell function vanishes.
class NotInBigCell : public std::runtime_error {
public:
    explicit NotInBigCell(const std::string& what) : std::runtime_error(what) {}
};

/// Exact triple with u_minus * levi * u_plus equal to the factored element.
struct BigCellFactorization {
    Mat u_minus;   // block upper unipotent
    Mat levi;      // block diagonal
    Mat u_plus;    // block lower unipotent
};

/**
 * The big-cell function: the coefficient of Y = /\_{a in R_I^+} X_a in
 * Ad(g) Y, computed as the r x r minor of the adjoint matrix on the
 * rows and columns indexed by R_I^+.  Vanishes exactly off the big cell.
 */
Scalar f_minor(const GroupElement& g, const ParabolicDatum& d);

/// Closed determinant formulas: GL/SL with a two-part composition and
/// the Siegel parabolic of Sp.  Throws std::invalid_argument elsewhere.
bool f_closed_form_supported(const ParabolicDatum& d);
Scalar f_closed_form(const GroupElement& g, const ParabolicDatum& d);

/// The closed form read as a function of an arbitrary square matrix over
/// the field (the polynomial representative used for degree bookkeeping).
Scalar f_ambient(const Mat& x, const ParabolicDatum& d);

/// Exact block elimination; throws NotInBigCell when a trailing block
/// is singular (equivalently, when f vanishes).
BigCellFactorization big_cell_factor(const GroupElement& g, const ParabolicDatum& d);

/**
 * Randomized-plus-exhaustive verification of the structure of f:
 *  (1) multiplicativity on P^+,
 *  (2) f(v- w t v+) = sign(w) prod c_{w,a} prod a(t) for w in W_I,
 *  (3) f = 0 on the cells of w outside W_I,
 *  (5) left U^- and right U^+ invariance.
 * Weyl elements are enumerated exhaustively; v-, t, v+ are sampled.
 */
SuiteReport verify_lemma_f(const ParabolicDatum& d, int samples, Rng& rng, int p);

} // namespace bigcell
