#include "bigcell/reps.hpp"

#include <algorithm>
#include <map>

namespace bigcell {

namespace {
// Monomial basis of Sym^k in b variables: exponent vectors in a fixed
// graded lexicographic order.
std::vector<std::vector<int>> sym_basis(int b, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(b), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == b - 1) {
            cur[static_cast<std::size_t>(pos)] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, k);
    return out;
}

// Dense polynomial in b variables with monomials of total degree <= k,
// keyed by exponent vector.
struct MonoPoly {
    std::map<std::vector<int>, Scalar> terms;

    void add(const std::vector<int>& mono, const Scalar& c) {
        auto it = terms.find(mono);
        if (it == terms.end()) terms.emplace(mono, c);
        else it->second += c;
    }
};

MonoPoly mono_mul(const MonoPoly& a, const MonoPoly& b) {
    MonoPoly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add(m, ca * cb);
        }
    return r;
}

Mat sym_matrix(const Mat& blk, int k) {
    const int b = blk.rows();
    auto basis = sym_basis(b, k);
    const int dim = static_cast<int>(basis.size());
    const FieldRef f = blk.field();
    Mat rho = Mat::zero(dim, dim, f);
    for (int col = 0; col < dim; ++col) {
        // image of e^a: prod_i (sum_j blk[j][i] e_j)^{a_i}
        MonoPoly acc;
        acc.add(std::vector<int>(static_cast<std::size_t>(b), 0), Scalar::one(f));
        for (int i = 0; i < b; ++i) {
            for (int rep = 0; rep < basis[static_cast<std::size_t>(col)][static_cast<std::size_t>(i)]; ++rep) {
                MonoPoly lin;
                for (int j = 0; j < b; ++j) {
                    if (blk.at(j, i).is_zero()) continue;
                    std::vector<int> mono(static_cast<std::size_t>(b), 0);
                    mono[static_cast<std::size_t>(j)] = 1;
                    lin.add(mono, blk.at(j, i));
                }
                acc = mono_mul(acc, lin);
            }
        }
        for (const auto& [mono, c] : acc.terms) {
            auto it = std::find(basis.begin(), basis.end(), mono);
            if (it == basis.end()) throw std::logic_error("sym_matrix: stray monomial");
            rho.at(static_cast<int>(it - basis.begin()), col) = c;
        }
    }
    return rho;
}
} // namespace

RationalRep RationalRep::det_power(const ParabolicDatum& d, std::vector<long> weights) {
    if (static_cast<int>(weights.size()) != d.blocks())
        throw std::invalid_argument("det_power: one weight per block");
    ParabolicDatum datum = d;
    auto eval = [datum, weights](const Mat& levi) {
        Scalar v = Scalar::one(levi.field());
        for (int b = 0; b < datum.blocks(); ++b) {
            const int s = datum.block_start(b), sz = datum.block_size(b);
            v = v * levi.block(s, s, sz, sz).det().pow(weights[static_cast<std::size_t>(b)]);
        }
        Mat m(1, 1, v);
        return m;
    };
    return RationalRep(d, 1, eval, /*via_levi=*/true);
}

RationalRep RationalRep::sym_power(const ParabolicDatum& d, int k, int block) {
    if (block < 0 || block >= d.blocks())
        throw std::invalid_argument("sym_power: no such block");
    if (k < 1) throw std::invalid_argument("sym_power: k must be positive");
    const int b = d.block_size(block);
    const int dim = static_cast<int>(sym_basis(b, k).size());
    ParabolicDatum datum = d;
    auto eval = [datum, k, block](const Mat& levi) {
        const int s = datum.block_start(block), sz = datum.block_size(block);
        return sym_matrix(levi.block(s, s, sz, sz), k);
    };
    return RationalRep(d, dim, eval, /*via_levi=*/true);
}

RationalRep RationalRep::f_character(const ParabolicDatum& d) {
    ParabolicDatum datum = d;
    auto eval = [datum](const Mat& g) {
        Mat m(1, 1, f_minor(GroupElement{datum.family(), datum.n(), g}, datum));
        return m;
    };
    return RationalRep(d, 1, eval, /*via_levi=*/false);
}

RationalRep RationalRep::custom(const ParabolicDatum& d, int dim,
                                std::function<Mat(const Mat&)> levi_eval) {
    return RationalRep(d, dim, std::move(levi_eval), /*via_levi=*/true);
}

Mat RationalRep::at(const GroupElement& g) const {
    return eval_(via_levi_ ? datum_.levi_part(g.m) : g.m);
}

Mat RationalRep::dual_at(const GroupElement& g) const {
    return at(group_inverse(g)).transpose();
}

bool RationalRep::spot_check(Rng& rng, int samples, int p, int window) const {
    const FieldRef f{p, 1};
    for (int k = 0; k < samples; ++k) {
        GroupElement l1 = random_levi(rng, datum_, f, window);
        GroupElement l2 = random_levi(rng, datum_, f, window);
        if (at(group_mul(l1, l2)) != at(l1) * at(l2)) return false;
        GroupElement u = random_radical(rng, datum_, f, window, /*positive=*/true);
        if (at(group_mul(u, l1)) != at(l1)) return false;
    }
    return true;
}

Scalar pairing(const Mat& v, const Mat& vstar) {
    if (v.rows() != vstar.rows() || v.cols() != 1 || vstar.cols() != 1)
        throw std::invalid_argument("pairing: expected two column vectors of equal size");
    Scalar s(0);
    for (int i = 0; i < v.rows(); ++i) s += v.at(i, 0) * vstar.at(i, 0);
    return s;
}

Mat psi_function(const GroupElement& ghat, const Mat& v, const OmegaPoint& u,
                 const RationalRep& sigma) {
    GroupElement j = automorphy_factor(ghat, u, sigma.datum());
    return sigma.at(j).inverse() * v;
}

Mat phi_function(const OmegaPoint& u, const Mat& vstar, const GroupElement& ghat,
                 const RationalRep& sigma) {
    GroupElement j = automorphy_factor(ghat, u, sigma.datum());
    return sigma.dual_at(j) * vstar;
}

Mat pi_action(const GroupElement& g, const PointFunction& psi, const OmegaPoint& u,
              const RationalRep& sigma) {
    GroupElement ginv = group_inverse(g);
    GroupElement j = automorphy_factor(ginv, u, sigma.datum());
    OmegaPoint moved = star_action(ginv, u, sigma.datum());
    return sigma.at(j).inverse() * psi(moved);
}

Mat t_action(const GroupElement& g, const ClassFunction& phi, const GroupElement& gprime) {
    return phi(group_mul(gprime, g));
}

PointFunction psi_closure(const GroupElement& ghat, const Mat& v, const RationalRep& sigma) {
    return [ghat, v, sigma](const OmegaPoint& u) { return psi_function(ghat, v, u, sigma); };
}

ClassFunction phi_closure(const OmegaPoint& u, const Mat& vstar, const RationalRep& sigma) {
    return [u, vstar, sigma](const GroupElement& ghat) {
        return phi_function(u, vstar, ghat, sigma);
    };
}

} // namespace bigcell
