#include "bigcell/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bigcell {

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "GL";
        case Family::SL: return "SL";
        case Family::Sp: return "Sp";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "GL" || name == "gl") return Family::GL;
    if (name == "SL" || name == "sl") return Family::SL;
    if (name == "Sp" || name == "sp" || name == "SP") return Family::Sp;
    throw std::invalid_argument("unknown group family: " + name);
}

Mat symplectic_form(int n, FieldRef f) {
    if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even size");
    const int m = n / 2;
    Mat j = Mat::zero(n, n, f);
    for (int i = 0; i < m; ++i) {
        j.at(i, m + i) = Scalar::one(f);
        j.at(m + i, i) = -Scalar::one(f);
    }
    return j;
}

bool is_in_family(Family family, const Mat& m) {
    if (m.rows() != m.cols()) return false;
    switch (family) {
        case Family::GL:
            return !m.det().is_zero();
        case Family::SL:
            return m.det() == Scalar(1);
        case Family::Sp: {
            if (m.rows() % 2 != 0) return false;
            Mat j = symplectic_form(m.rows(), m.field());
            return m.transpose() * j * m == j;
        }
    }
    return false;
}

GroupElement make_group_element(Family family, int n, Mat m) {
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("group element: wrong matrix size");
    if (!is_in_family(family, m))
        throw std::invalid_argument("matrix is not in " + family_name(family) +
                                    "(" + std::to_string(n) + ")");
    return GroupElement{family, n, std::move(m)};
}

GroupElement group_inverse(const GroupElement& g) {
    return GroupElement{g.family, g.n, g.m.inverse()};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
    if (a.family != b.family || a.n != b.n)
        throw std::invalid_argument("group product: mismatched groups");
    return GroupElement{a.family, a.n, a.m * b.m};
}

std::string WeylElement::name() const {
    std::ostringstream os;
    os << "w[";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) os << ",";
        os << perm[i];
        if (i < flips.size() && flips[i]) os << "-";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// ParabolicDatum

ParabolicDatum ParabolicDatum::make(Family family, int n, const std::vector<int>& composition) {
    if (family == Family::Sp) {
        if (!(composition.empty() ||
              (composition.size() == 2 && composition[0] == n / 2 && composition[1] == n / 2)))
            throw std::invalid_argument("Sp supports only the Siegel parabolic");
        return siegel(n);
    }
    if (n < 1) throw std::invalid_argument("group size must be positive");
    int sum = 0;
    for (int c : composition) {
        if (c < 1) throw std::invalid_argument("composition parts must be positive");
        sum += c;
    }
    if (composition.empty() || sum != n)
        throw std::invalid_argument("composition must be a nonempty ordered partition of n");
    ParabolicDatum d;
    d.family_ = family;
    d.n_ = n;
    d.comp_ = composition;
    d.rank_ = n;
    d.cartan_dim_ = family == Family::SL ? n - 1 : n;
    d.finish();
    return d;
}

ParabolicDatum ParabolicDatum::siegel(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("Sp needs even size >= 2");
    ParabolicDatum d;
    d.family_ = Family::Sp;
    d.n_ = n;
    d.comp_ = {n / 2, n / 2};
    d.rank_ = n / 2;
    d.cartan_dim_ = n / 2;
    d.finish();
    return d;
}

void ParabolicDatum::finish() {
    starts_.assign(comp_.size(), 0);
    for (std::size_t b = 1; b < comp_.size(); ++b) starts_[b] = starts_[b - 1] + comp_[b - 1];
    block_of_.assign(static_cast<std::size_t>(n_), 0);
    for (std::size_t b = 0; b < comp_.size(); ++b)
        for (int k = 0; k < comp_[b]; ++k) block_of_[static_cast<std::size_t>(starts_[b] + k)] = static_cast<int>(b);

    roots_.clear();
    if (family_ != Family::Sp) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j) continue;
                Root r;
                r.tag = Root::GLEntry;
                r.i = i; r.j = j;
                r.weight.assign(static_cast<std::size_t>(rank_), 0);
                r.weight[static_cast<std::size_t>(i)] = 1;
                r.weight[static_cast<std::size_t>(j)] = -1;
                r.positive = i > j;
                roots_.push_back(std::move(r));
            }
        ri_plus_.clear();
        for (std::size_t k = 0; k < roots_.size(); ++k) {
            const Root& r = roots_[k];
            if (r.positive && block_of_[static_cast<std::size_t>(r.i)] != block_of_[static_cast<std::size_t>(r.j)])
                ri_plus_.push_back(static_cast<int>(k));
        }
        return;
    }
    const int m = n_ / 2;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            Root r;
            r.tag = Root::SpA;
            r.i = i; r.j = j;
            r.weight.assign(static_cast<std::size_t>(m), 0);
            r.weight[static_cast<std::size_t>(j)] = 1;
            r.weight[static_cast<std::size_t>(i)] = -1;
            r.positive = i > j;
            roots_.push_back(std::move(r));
        }
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Root r;
            r.tag = Root::SpC;
            r.i = i; r.j = j;
            r.weight.assign(static_cast<std::size_t>(m), 0);
            r.weight[static_cast<std::size_t>(i)] += 1;
            r.weight[static_cast<std::size_t>(j)] += 1;
            r.positive = true;
            roots_.push_back(std::move(r));
        }
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Root r;
            r.tag = Root::SpB;
            r.i = i; r.j = j;
            r.weight.assign(static_cast<std::size_t>(m), 0);
            r.weight[static_cast<std::size_t>(i)] -= 1;
            r.weight[static_cast<std::size_t>(j)] -= 1;
            r.positive = false;
            roots_.push_back(std::move(r));
        }
    ri_plus_.clear();
    for (std::size_t k = 0; k < roots_.size(); ++k)
        if (roots_[k].tag == Root::SpC) ri_plus_.push_back(static_cast<int>(k));
}

Mat ParabolicDatum::root_vector(const Root& a, FieldRef f) const {
    Mat x = Mat::zero(n_, n_, f);
    const Scalar one = Scalar::one(f);
    const int m = n_ / 2;
    switch (a.tag) {
        case Root::GLEntry:
            x.at(a.i, a.j) = one;
            break;
        case Root::SpA:
            x.at(a.i, a.j) = one;
            x.at(m + a.j, m + a.i) = -one;
            break;
        case Root::SpC:
            x.at(m + a.i, a.j) = one;
            if (a.i != a.j) x.at(m + a.j, a.i) = one;
            break;
        case Root::SpB:
            x.at(a.i, m + a.j) = one;
            if (a.i != a.j) x.at(a.j, m + a.i) = one;
            break;
    }
    return x;
}

Scalar ParabolicDatum::root_coeff(const Mat& y, const Root& a) const {
    const int m = n_ / 2;
    switch (a.tag) {
        case Root::GLEntry: return y.at(a.i, a.j);
        case Root::SpA:     return y.at(a.i, a.j);
        case Root::SpC:     return y.at(m + a.i, a.j);
        case Root::SpB:     return y.at(a.i, m + a.j);
    }
    throw std::logic_error("unreachable");
}

Scalar ParabolicDatum::alpha_eval(const Root& a, const Mat& t) const {
    if (!is_diagonal(t)) throw std::invalid_argument("alpha_eval: torus element must be diagonal");
    Mat x = root_vector(a, t.field());
    Mat y = t * x * t.inverse();
    Scalar c = root_coeff(y, a);
    if (c.is_zero() || y != x * c)
        throw std::logic_error("alpha_eval: adjoint action is not a scaling (broken invariant)");
    return c;
}

Mat ParabolicDatum::adjoint_matrix(const GroupElement& g) const {
    const FieldRef f = g.m.field();
    const int m = n_ / 2;
    const int dim = static_cast<int>(roots_.size()) + cartan_dim_;
    Mat ad = Mat::zero(dim, dim, f);
    Mat ginv = g.m.inverse();

    auto cartan_vector = [&](int k) {
        Mat h = Mat::zero(n_, n_, f);
        const Scalar one = Scalar::one(f);
        switch (family_) {
            case Family::GL: h.at(k, k) = one; break;
            case Family::SL: h.at(k, k) = one; h.at(k + 1, k + 1) = -one; break;
            case Family::Sp: h.at(k, k) = one; h.at(m + k, m + k) = -one; break;
        }
        return h;
    };
    auto expand = [&](const Mat& y, int col) {
        for (std::size_t rk = 0; rk < roots_.size(); ++rk)
            ad.at(static_cast<int>(rk), col) = root_coeff(y, roots_[rk]);
        for (int k = 0; k < cartan_dim_; ++k) {
            Scalar c(0);
            switch (family_) {
                case Family::GL: c = y.at(k, k); break;
                case Family::SL:
                    for (int q = 0; q <= k; ++q) c += y.at(q, q);
                    break;
                case Family::Sp: c = y.at(k, k); break;
            }
            ad.at(static_cast<int>(roots_.size()) + k, col) = c;
        }
    };

    for (std::size_t rk = 0; rk < roots_.size(); ++rk) {
        Mat y = g.m * root_vector(roots_[rk], f) * ginv;
        expand(y, static_cast<int>(rk));
    }
    for (int k = 0; k < cartan_dim_; ++k) {
        Mat y = g.m * cartan_vector(k) * ginv;
        expand(y, static_cast<int>(roots_.size()) + k);
    }
    return ad;
}

// ---------------------------------------------------------------------------
// Weyl group

namespace {
int perm_parity(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}
} // namespace

std::vector<WeylElement> ParabolicDatum::weyl_group() const {
    const FieldRef f{0, 1};
    std::vector<WeylElement> out;
    if (family_ != Family::Sp) {
        std::vector<int> perm(static_cast<std::size_t>(n_));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Mat rep = Mat::zero(n_, n_, f);
            for (int j = 0; j < n_; ++j) rep.at(perm[static_cast<std::size_t>(j)], j) = Scalar(1);
            if (family_ == Family::SL && perm_parity(perm) < 0)
                for (int i = 0; i < n_; ++i) rep.at(i, 0) = -rep.at(i, 0);
            out.push_back(WeylElement{std::move(rep), perm, {}});
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }
    const int m = n_ / 2;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do { perms.push_back(perm); } while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& p : perms) {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            Mat rep = Mat::zero(n_, n_, f);
            for (int j = 0; j < m; ++j) {
                rep.at(p[static_cast<std::size_t>(j)], j) = Scalar(1);
                rep.at(m + p[static_cast<std::size_t>(j)], m + j) = Scalar(1);
            }
            std::vector<bool> flips(static_cast<std::size_t>(m), false);
            Mat flip = Mat::identity(n_, f);
            for (int i = 0; i < m; ++i) {
                if (!(mask & (1u << i))) continue;
                flips[static_cast<std::size_t>(i)] = true;
                Mat w = Mat::identity(n_, f);
                w.at(i, i) = Scalar(0);
                w.at(m + i, m + i) = Scalar(0);
                w.at(m + i, i) = Scalar(1);
                w.at(i, m + i) = Scalar(-1);
                flip = flip * w;
            }
            out.push_back(WeylElement{rep * flip, p, std::move(flips)});
        }
    }
    return out;
}

std::pair<int, Scalar> ParabolicDatum::weyl_root_image(const WeylElement& w, int root_index,
                                                       FieldRef f) const {
    Mat x = root_vector(roots_[static_cast<std::size_t>(root_index)], f);
    Mat y = w.rep * x * w.rep.inverse();
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        Scalar c = root_coeff(y, roots_[k]);
        if (c.is_zero()) continue;
        if (y == root_vector(roots_[k], f) * c) return {static_cast<int>(k), c};
    }
    throw std::logic_error("weyl_root_image: Ad(w) X_alpha is not proportional to any X_beta "
                           "(broken representative)");
}

bool ParabolicDatum::in_levi_weyl(const WeylElement& w) const {
    const FieldRef f{0, 1};
    for (int idx : ri_plus_) {
        auto [img, c] = weyl_root_image(w, idx, f);
        if (std::find(ri_plus_.begin(), ri_plus_.end(), img) == ri_plus_.end()) return false;
    }
    return true;
}

int ParabolicDatum::sign_on_ri(const WeylElement& w) const {
    const FieldRef f{0, 1};
    std::vector<int> perm;
    perm.reserve(ri_plus_.size());
    for (int idx : ri_plus_) {
        auto [img, c] = weyl_root_image(w, idx, f);
        auto it = std::find(ri_plus_.begin(), ri_plus_.end(), img);
        if (it == ri_plus_.end())
            throw std::invalid_argument("sign_on_ri: w does not preserve R_I^+");
        perm.push_back(static_cast<int>(it - ri_plus_.begin()));
    }
    return perm_parity(perm);
}

Scalar weyl_constant(const WeylElement& w, int root_index, const ParabolicDatum& datum, FieldRef f) {
    return datum.weyl_root_image(w, root_index, f).second;
}

// ---------------------------------------------------------------------------
// Shape predicates

bool ParabolicDatum::is_diagonal(const Mat& m) const {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && !m.at(i, j).is_zero()) return false;
    return true;
}

Mat ParabolicDatum::levi_part(const Mat& m) const {
    Mat l = Mat::zero(n_, n_, m.field());
    for (int b = 0; b < blocks(); ++b) {
        int s = block_start(b), sz = block_size(b);
        l.set_block(s, s, m.block(s, s, sz, sz));
    }
    return l;
}

bool ParabolicDatum::in_levi(const Mat& m) const {
    if (m != levi_part(m)) return false;
    for (int b = 0; b < blocks(); ++b) {
        int s = block_start(b), sz = block_size(b);
        if (m.block(s, s, sz, sz).det().is_zero()) return false;
    }
    if (family_ == Family::Sp) {
        const int half = n_ / 2;
        Mat d = m.block(half, half, half, half);
        if (m.block(0, 0, half, half) != d.transpose().inverse()) return false;
    }
    return true;
}

namespace {
bool unipotent_with_zero(const ParabolicDatum& d, const Mat& m, bool below) {
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int bi = d.block_of(i), bj = d.block_of(j);
            if (bi == bj) {
                if (i == j && m.at(i, j) != Scalar(1)) return false;
                if (i != j && !m.at(i, j).is_zero()) return false;
            } else if (below ? bi > bj : bi < bj) {
                if (!m.at(i, j).is_zero()) return false;
            }
        }
    return true;
}

bool sym_block(const Mat& b) {
    return b == b.transpose();
}
} // namespace

bool ParabolicDatum::in_uminus(const Mat& m) const {
    // Block upper unipotent; for Sp additionally a symmetric upper block.
    if (!unipotent_with_zero(*this, m, /*below=*/true)) return false;
    if (family_ == Family::Sp) {
        const int half = n_ / 2;
        if (!sym_block(m.block(0, half, half, half))) return false;
    }
    return true;
}

bool ParabolicDatum::in_uplus(const Mat& m) const {
    if (!unipotent_with_zero(*this, m, /*below=*/false)) return false;
    if (family_ == Family::Sp) {
        const int half = n_ / 2;
        if (!sym_block(m.block(half, 0, half, half))) return false;
    }
    return true;
}

std::string ParabolicDatum::name() const {
    std::ostringstream os;
    os << (family_ == Family::GL ? "gl" : family_ == Family::SL ? "sl" : "sp") << n_;
    if (family_ == Family::Sp) {
        os << "-siegel";
    } else {
        os << "-(";
        for (std::size_t b = 0; b < comp_.size(); ++b) {
            if (b) os << ",";
            os << comp_[b];
        }
        os << ")";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Iwasawa decomposition

namespace {

Valuation vval(const Scalar& s) { return s.valuation(); }

// Column reduction over Z_p: returns (b, k) with g = b k, b upper
// triangular and k integral with determinant +-1 (exactly +1 when the
// signed swaps are used, which keeps SL inside SL).
std::pair<Mat, Mat> gl_iwasawa(const Mat& g) {
    const int n = g.rows();
    Mat m = g;
    Mat acc = Mat::identity(n, g.field());
    for (int i = n - 1; i >= 0; --i) {
        int jstar = -1;
        Valuation best = Valuation::infinity();
        for (int j = i; j >= 0; --j) {
            Valuation v = vval(m.at(i, j));
            if (v < best) { best = v; jstar = j; }
        }
        if (jstar < 0 || best.is_infinite())
            throw SingularMatrix("iwasawa: singular matrix");
        if (jstar != i) {
            for (int r = 0; r < n; ++r) {
                std::swap(m.at(r, jstar), m.at(r, i));
                std::swap(acc.at(r, jstar), acc.at(r, i));
                m.at(r, jstar) = -m.at(r, jstar);
                acc.at(r, jstar) = -acc.at(r, jstar);
            }
        }
        Scalar pinv = m.at(i, i).inverse();
        for (int j = 0; j < i; ++j) {
            if (m.at(i, j).is_zero()) continue;
            Scalar q = m.at(i, j) * pinv;
            for (int r = 0; r < n; ++r) {
                m.at(r, j) -= q * m.at(r, i);
                acc.at(r, j) -= q * acc.at(r, i);
            }
        }
    }
    return {m, acc.inverse()};   // g * acc = b  =>  g = b * acc^{-1}
}

// Integral echelon basis with unit pivots in distinct columns spanning
// the same row space; the resulting lattice is a direct summand.
Mat primitive_row_basis(Mat rows, int p) {
    const int k = rows.rows(), n = rows.cols();
    (void)p;
    int done = 0;
    std::vector<bool> used_col(static_cast<std::size_t>(n), false);
    while (done < k) {
        int bi = -1, bj = -1;
        Valuation best = Valuation::infinity();
        for (int i = done; i < k; ++i)
            for (int j = 0; j < n; ++j) {
                Valuation v = vval(rows.at(i, j));
                if (v < best) { best = v; bi = i; bj = j; }
            }
        if (bi < 0 || best.is_infinite())
            throw SingularMatrix("primitive_row_basis: rank-deficient input");
        if (bi != done)
            for (int j = 0; j < n; ++j) std::swap(rows.at(bi, j), rows.at(done, j));
        Scalar pinv = rows.at(done, bj).inverse();
        for (int j = 0; j < n; ++j) rows.at(done, j) *= pinv;
        for (int i = done + 1; i < k; ++i) {
            Scalar q = rows.at(i, bj);
            if (q.is_zero()) continue;
            for (int j = 0; j < n; ++j) rows.at(i, j) -= q * rows.at(done, j);
        }
        used_col[static_cast<std::size_t>(bj)] = true;
        ++done;
    }
    return rows;
}

// For a (2m x m) matrix a with primitive columns, produce integral x
// (m x 2m) with x a = I_m, via unimodular row reduction to [[H],[0]].
Mat integral_left_inverse(Mat a) {
    const int big = a.rows(), small = a.cols();
    Mat r = Mat::identity(big, a.field());
    for (int c = 0; c < small; ++c) {
        int istar = -1;
        Valuation best = Valuation::infinity();
        for (int i = c; i < big; ++i) {
            Valuation v = vval(a.at(i, c));
            if (v < best) { best = v; istar = i; }
        }
        if (istar < 0 || best.is_infinite() || !(best == Valuation(0)))
            throw std::logic_error("integral_left_inverse: column is not primitive");
        if (istar != c)
            for (int j = 0; j < big; ++j) {
                if (j < small) std::swap(a.at(istar, j), a.at(c, j));
                std::swap(r.at(istar, j), r.at(c, j));
            }
        Scalar pinv = a.at(c, c).inverse();
        for (int j = 0; j < small; ++j) a.at(c, j) *= pinv;
        for (int j = 0; j < big; ++j) r.at(c, j) *= pinv;
        for (int i = 0; i < big; ++i) {
            if (i == c) continue;
            Scalar q = a.at(i, c);
            if (q.is_zero()) continue;
            for (int j = 0; j < small; ++j) a.at(i, j) -= q * a.at(c, j);
            for (int j = 0; j < big; ++j) r.at(i, j) -= q * r.at(c, j);
        }
    }
    // now a = [[I],[0]]; the first rows of r form the left inverse
    return r.block(0, 0, small, big);
}

std::pair<Mat, Mat> sp_iwasawa(const Mat& g) {
    const int n = g.rows(), m = n / 2;
    const FieldRef f = g.field();
    const Mat j = symplectic_form(n, f);

    // Primitive integral basis of the Lagrangian spanned by the bottom rows.
    Mat lag = primitive_row_basis(g.block(m, 0, m, n), f.p);

    // Complete to an integral symplectic matrix with bottom rows spanning
    // the same Lagrangian: solve lag J tX = I, then correct X by a
    // multiple of lag to make its rows pairwise isotropic.
    Mat x = integral_left_inverse((lag * j).transpose());
    Mat s = x * j * x.transpose();
    Mat corr = Mat::zero(m, m, f);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < a; ++b) corr.at(a, b) = -s.at(a, b);
    Mat xp = x + corr * lag;

    Mat k = Mat::zero(n, n, f);
    k.set_block(0, 0, xp);
    k.set_block(m, 0, -lag);
    if (k.transpose() * j * k != j)
        throw std::logic_error("sp_iwasawa: completed matrix is not symplectic");

    Mat h = g * k.inverse();
    // h has vanishing lower left block; finish by making its lower right
    // block lower triangular with a Levi element diag(t(kT), kT^{-1}),
    // which puts h inside the opposite Borel of Sp.
    Mat rev = Mat::zero(m, m, f);
    for (int i = 0; i < m; ++i) rev.at(i, m - 1 - i) = Scalar(1);
    auto [tup, kt2] = gl_iwasawa(rev * h.block(m, m, m, m) * rev);
    Mat kt = rev * kt2 * rev;    // now h.D = (rev tup rev) * kt with the first factor lower triangular
    Mat levi = Mat::zero(n, n, f);
    levi.set_block(0, 0, kt.transpose());
    levi.set_block(m, m, kt.inverse());
    Mat b = h * levi;
    Mat levi_inv = Mat::zero(n, n, f);
    levi_inv.set_block(0, 0, kt.transpose().inverse());
    levi_inv.set_block(m, m, kt);
    return {b, levi_inv * k};
}

bool upper_triangular(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

// Opposite Borel of Sp(2m) under the fixed form: lower left block zero,
// upper left block upper triangular (the lower right is then forced to
// be lower triangular).
bool sp_opposite_borel(const Mat& b) {
    const int n = b.rows(), m = n / 2;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!b.at(m + i, j).is_zero()) return false;
            if (i > j && !b.at(i, j).is_zero()) return false;
            if (i < j && !b.at(m + i, m + j).is_zero()) return false;
        }
    return true;
}

} // namespace

std::pair<GroupElement, GroupElement> iwasawa_factor(const GroupElement& g) {
    if (g.m.field().e != 1 || g.m.field().p == 0)
        throw std::invalid_argument("iwasawa_factor: element must be over the base field Q_p");
    if (g.m.is_integral() && g.m.det().is_unit()) {
        Mat id = Mat::identity(g.n, g.m.field());
        return {GroupElement{g.family, g.n, id}, g};
    }
    auto [b, k] = g.family == Family::Sp ? sp_iwasawa(g.m) : gl_iwasawa(g.m);
    bool shape_ok = g.family == Family::Sp ? sp_opposite_borel(b) : upper_triangular(b);
    if (!shape_ok || !k.is_integral() || !k.det().is_unit() || b * k != g.m)
        throw std::logic_error("iwasawa_factor: verification failed (broken invariant)");
    if (!is_in_family(g.family, k))
        throw std::logic_error("iwasawa_factor: integral factor left the group");
    return {GroupElement{g.family, g.n, b}, GroupElement{g.family, g.n, k}};
}

} // namespace bigcell
