#include "bigcell/bigcell.hpp"

#include <sstream>

namespace bigcell {

Scalar f_minor(const GroupElement& g, const ParabolicDatum& d) {
    const FieldRef f = g.m.field();
    const int r = d.r();
    Mat ginv = g.m.inverse();
    Mat block = Mat::zero(r, r, f);
    for (int col = 0; col < r; ++col) {
        const Root& a = d.roots()[static_cast<std::size_t>(d.ri_plus()[static_cast<std::size_t>(col)])];
        Mat y = g.m * d.root_vector(a, f) * ginv;
        for (int row = 0; row < r; ++row) {
            const Root& b = d.roots()[static_cast<std::size_t>(d.ri_plus()[static_cast<std::size_t>(row)])];
            block.at(row, col) = d.root_coeff(y, b);
        }
    }
    return block.det();
}

bool f_closed_form_supported(const ParabolicDatum& d) {
    if (d.family() == Family::Sp) return true;
    return d.blocks() == 2;
}

Scalar f_ambient(const Mat& x, const ParabolicDatum& d) {
    const int n = d.n();
    if (x.rows() != n || x.cols() != n)
        throw std::invalid_argument("f_ambient: wrong matrix size");
    if (d.family() == Family::Sp) {
        const int m = n / 2;
        return x.block(m, m, m, m).det().pow(m + 1);
    }
    if (d.blocks() != 2)
        throw std::invalid_argument("f_ambient: no closed form for " + d.name());
    const int n1 = d.block_size(0), n2 = d.block_size(1);
    Scalar d22 = x.block(n1, n1, n2, n2).det().pow(n1 + n2);
    if (d.family() == Family::SL) return d22;
    return d22 * x.det().pow(-n2);
}

Scalar f_closed_form(const GroupElement& g, const ParabolicDatum& d) {
    if (!f_closed_form_supported(d))
        throw std::invalid_argument("f_closed_form: unsupported datum " + d.name());
    return f_ambient(g.m, d);
}

BigCellFactorization big_cell_factor(const GroupElement& g, const ParabolicDatum& d) {
    const int n = d.n();
    const FieldRef f = g.m.field();
    const int s = d.blocks();
    Mat uminus = Mat::identity(n, f);
    Mat uplus = Mat::identity(n, f);
    Mat levi = Mat::zero(n, n, f);
    Mat work = g.m;
    for (int b = s - 1; b >= 1; --b) {
        const int q = d.block_start(b);
        const int sz = d.block_size(b);
        Mat dblk = work.block(q, q, sz, sz);
        if (dblk.det().is_zero())
            throw NotInBigCell("big_cell_factor: trailing block " + std::to_string(b) +
                               " is singular (f = 0)");
        Mat dinv = dblk.inverse();
        Mat bblk = work.block(0, q, q, sz) * dinv;
        Mat cblk = dinv * work.block(q, 0, sz, q);
        Mat schur = work.block(0, 0, q, q) - bblk * work.block(q, 0, sz, q);

        Mat um = Mat::identity(n, f);
        um.set_block(0, q, bblk);
        Mat up = Mat::identity(n, f);
        up.set_block(q, 0, cblk);
        uminus = uminus * um;
        uplus = up * uplus;
        levi.set_block(q, q, dblk);
        work = schur;
    }
    if (work.det().is_zero())
        throw NotInBigCell("big_cell_factor: leading block is singular");
    levi.set_block(0, 0, work);

    if (uminus * levi * uplus != g.m)
        throw std::logic_error("big_cell_factor: product check failed (broken invariant)");
    if (!d.in_uminus(uminus) || !d.in_uplus(uplus) || !d.in_levi(levi))
        throw std::logic_error("big_cell_factor: factor shapes are inconsistent "
                               "(symplectic structure violated?)");
    return BigCellFactorization{std::move(uminus), std::move(levi), std::move(uplus)};
}

namespace {
std::string mat_brief(const Mat& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}
} // namespace

SuiteReport verify_lemma_f(const ParabolicDatum& d, int samples, Rng& rng, int p) {
    SuiteReport report;
    report.suite = "lemma-f:" + d.name();
    const FieldRef f{p, 1};
    const int window = 2;

    // (1) f is multiplicative on P^+ and agrees with its Levi value.
    {
        bool ok = true;
        std::string detail;
        for (int k = 0; k < samples && ok; ++k) {
            GroupElement p1 = group_mul(random_levi(rng, d, f, window),
                                        random_radical(rng, d, f, window, true));
            GroupElement p2 = group_mul(random_levi(rng, d, f, window),
                                        random_radical(rng, d, f, window, true));
            Scalar lhs = f_minor(group_mul(p1, p2), d);
            Scalar rhs = f_minor(p1, d) * f_minor(p2, d);
            if (lhs != rhs) {
                ok = false;
                detail = "f(p1 p2) != f(p1) f(p2) at p1 = " + mat_brief(p1.m) +
                         ", p2 = " + mat_brief(p2.m);
            }
            if (ok && f_minor(p1, d) != f_minor(GroupElement{d.family(), d.n(), d.levi_part(p1.m)}, d)) {
                ok = false;
                detail = "f(p+) != f(levi part) at p+ = " + mat_brief(p1.m);
            }
        }
        report.add("character-on-P+", ok, detail);
    }

    // (2)/(3): cell values over the full Weyl group.
    {
        bool ok2 = true, ok3 = true;
        std::string d2, d3;
        auto weyl = d.weyl_group();
        for (const auto& w : weyl) {
            const bool levi_w = d.in_levi_weyl(w);
            Scalar cprod = Scalar::one(f);
            int sign = 1;
            if (levi_w) {
                sign = d.sign_on_ri(w);
                for (int idx : d.ri_plus())
                    cprod = cprod * (weyl_constant(w, idx, d, {0, 1}) + Scalar::zero(f));
            }
            for (int k = 0; k < samples; ++k) {
                GroupElement vm = random_borel_unipotent(rng, d, f, window, /*positive=*/false);
                GroupElement vp = random_borel_unipotent(rng, d, f, window, /*positive=*/true);
                GroupElement t = random_torus(rng, d, f, window);
                Mat cell = vm.m * promote(w.rep, f) * t.m * vp.m;
                Scalar val = f_minor(GroupElement{d.family(), d.n(), cell}, d);
                if (levi_w) {
                    Scalar alpha = Scalar::one(f);
                    for (int idx : d.ri_plus())
                        alpha = alpha * d.alpha_eval(d.roots()[static_cast<std::size_t>(idx)], t.m);
                    Scalar expect = cprod * alpha * Scalar::from_rational(sign, f);
                    if (val != expect && ok2) {
                        ok2 = false;
                        d2 = "cell value mismatch at w = " + w.name() + ", t = " + mat_brief(t.m);
                    }
                } else if (!val.is_zero() && ok3) {
                    ok3 = false;
                    d3 = "f nonzero off the big cell at w = " + w.name();
                }
            }
        }
        report.add("cell-values-levi-weyl", ok2, d2);
        report.add("vanishing-off-cell", ok3, d3);
    }

    // (5) invariance under the full Borel radicals.
    {
        bool ok = true;
        std::string detail;
        for (int k = 0; k < samples && ok; ++k) {
            GroupElement g = random_group_element(rng, d, f, window);
            GroupElement vm = random_borel_unipotent(rng, d, f, window, /*positive=*/false);
            GroupElement vp = random_borel_unipotent(rng, d, f, window, /*positive=*/true);
            Scalar base = f_minor(g, d);
            if (f_minor(group_mul(vm, g), d) != base || f_minor(group_mul(g, vp), d) != base) {
                ok = false;
                detail = "invariance failed at g = " + mat_brief(g.m);
            }
        }
        report.add("left-right-invariance", ok, detail);
    }

    return report;
}

} // namespace bigcell
