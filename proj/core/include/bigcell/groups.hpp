#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bigcell/matrix.hpp"

namespace bigcell {

enum class Family { GL, SL, Sp };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Element of GL(n), SL(n) or Sp(n) (n even for Sp), realized as an
/// exact n x n matrix.  The torus is diagonal and the positive Borel
/// is lower triangular throughout.
struct GroupElement {
    Family family;
    int n;
    Mat m;
};

/// Validates membership (GL: det != 0; SL: det = 1; Sp: tg J g = J).
GroupElement make_group_element(Family family, int n, Mat m);
bool is_in_family(Family family, const Mat& m);

/// The alternating form [[0, I], [-I, 0]] defining Sp(n), n = 2m.
Mat symplectic_form(int n, FieldRef f);
GroupElement group_inverse(const GroupElement& g);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);

/**
 * One root of the ambient group, carrying its weight vector in the
 * standard character basis of the diagonal torus together with the
 * indices realizing the root vector X_alpha as an integer matrix.
 *
 * Matrix realizations (entries 0, +-1):
 *   GL/SL   (i,j), i != j:  X = E_ij, weight eps_i - eps_j,
 *                           positive iff i > j (lower triangular).
 *   Sp(2m)  tag A, (i,j):   X = E_ij - E_{m+j, m+i}, weight eps_j - eps_i,
 *                           positive iff i > j.
 *   Sp(2m)  tag C, (i<=j):  X = E_{m+i, j} + E_{m+j, i} (or E_{m+i, i}),
 *                           weight eps_i + eps_j, positive.
 *   Sp(2m)  tag B, (i<=j):  X = E_{i, m+j} + E_{j, m+i} (or E_{i, m+i}),
 *                           weight -(eps_i + eps_j), negative.
 */
struct Root {
    enum Tag { GLEntry, SpA, SpC, SpB };
    Tag tag;
    int i, j;                  // 0-based defining indices
    std::vector<int> weight;   // length = torus rank
    bool positive;
};

/// Weyl group element with a fixed signed-permutation representative.
struct WeylElement {
    Mat rep;
    std::vector<int> perm;     // GL/SL: images of 0..n-1; Sp: images of 0..m-1
    std::vector<bool> flips;   // Sp only: sign flips per index
    std::string name() const;
};

/**
 * A group family together with a standard parabolic choice: an ordered
 * composition of n for GL/SL, or the Siegel parabolic for Sp.  Derives
 * the root system, the ordered set R_I^+ cut out by the parabolic,
 * r = |R_I^+| = dim U^+, and the block structure.
 *
 * The unipotent radical U^+ is block lower triangular, U^- block upper
 * triangular, and the Levi block diagonal.
 */
class ParabolicDatum {
public:
    static ParabolicDatum make(Family family, int n, const std::vector<int>& composition);
    static ParabolicDatum siegel(int n);   // Sp(n), n even

    Family family() const { return family_; }
    int n() const { return n_; }
    FieldRef base_field(int p) const { return {p, 1}; }
    bool is_siegel() const { return family_ == Family::Sp; }

    const std::vector<int>& composition() const { return comp_; }
    int blocks() const { return static_cast<int>(comp_.size()); }
    int block_start(int b) const { return starts_[static_cast<std::size_t>(b)]; }
    int block_size(int b) const { return comp_[static_cast<std::size_t>(b)]; }
    int block_of(int row) const { return block_of_[static_cast<std::size_t>(row)]; }

    const std::vector<Root>& roots() const { return roots_; }
    int rank() const { return rank_; }
    int cartan_dim() const { return cartan_dim_; }
    /// Indices into roots() of R_I^+, in the fixed lexicographic order.
    const std::vector<int>& ri_plus() const { return ri_plus_; }
    int r() const { return static_cast<int>(ri_plus_.size()); }

    Mat root_vector(const Root& a, FieldRef f) const;
    /// Coefficient of X_alpha in an element of the Lie algebra.
    Scalar root_coeff(const Mat& y, const Root& a) const;
    /// alpha(t) for a diagonal torus element, via Ad(t) X_alpha = alpha(t) X_alpha.
    Scalar alpha_eval(const Root& a, const Mat& t) const;

    /// Full matrix of Ad(g) in the basis (X_alpha)_{alpha in R} + Cartan basis.
    Mat adjoint_matrix(const GroupElement& g) const;

    std::vector<WeylElement> weyl_group() const;
    /// Image root index and constant: Ad(w) X_alpha = c X_{w alpha}.
    std::pair<int, Scalar> weyl_root_image(const WeylElement& w, int root_index, FieldRef f) const;
    /// w lies in the Weyl group of the Levi iff it preserves R_I^+.
    bool in_levi_weyl(const WeylElement& w) const;
    /// Sign of the permutation induced by w on the ordered set R_I^+.
    int sign_on_ri(const WeylElement& w) const;

    // Shape predicates for the parabolic pieces.
    bool in_uminus(const Mat& m) const;
    bool in_uplus(const Mat& m) const;
    bool in_levi(const Mat& m) const;
    bool is_diagonal(const Mat& m) const;
    /// Block-diagonal part (the Levi component of an element of P^+ or P^-).
    Mat levi_part(const Mat& m) const;

    std::string name() const;

private:
    ParabolicDatum() = default;
    void finish();

    Family family_ = Family::GL;
    int n_ = 0;
    std::vector<int> comp_;
    std::vector<int> starts_;
    std::vector<int> block_of_;
    int rank_ = 0;
    int cartan_dim_ = 0;
    std::vector<Root> roots_;
    std::vector<int> ri_plus_;
};

/// The constant c_{w,alpha} with Ad(w) X_alpha = c_{w,alpha} X_{w alpha}.
Scalar weyl_constant(const WeylElement& w, int root_index, const ParabolicDatum& datum, FieldRef f);

/**
 * Iwasawa decomposition g = b k with b in the opposite Borel (upper
 * triangular under the fixed realization) and k integral with unit
 * determinant (symplectic integral for Sp).  Requires g over the base
 * field Q_p.
 */
std::pair<GroupElement, GroupElement> iwasawa_factor(const GroupElement& g);

} // namespace bigcell
