#include "bigcell/rand.hpp"

namespace bigcell {

namespace {
long random_coprime(Rng& rng, int p) {
    for (;;) {
        long a = rng.uniform(1, 60);
        if (a % p != 0) return a;
    }
}

bool crossing(const ParabolicDatum& d, const Root& a) {
    if (d.family() == Family::Sp) return a.tag == Root::SpC || a.tag == Root::SpB;
    return d.block_of(a.i) != d.block_of(a.j);
}
} // namespace

Scalar random_unit(Rng& rng, FieldRef f) {
    long num = random_coprime(rng, f.p);
    long den = random_coprime(rng, f.p);
    mpq_class q(num, den);
    q.canonicalize();
    if (rng.coin()) q = -q;
    return Scalar::from_rational(q, {f.p, 1}) + Scalar::zero(f);
}

Scalar random_scalar(Rng& rng, FieldRef f, int window) {
    if (f.e > 1 && rng.coin()) {
        // generic element: a sum of rational coefficients
        Scalar x = Scalar::zero(f);
        bool nonzero = false;
        Scalar t = Scalar::generator(f);
        for (int i = 0; i < f.e; ++i) {
            if (rng.uniform(0, 2) == 0) continue;
            Scalar c = random_unit(rng, {f.p, 1}) *
                       Scalar::from_rational(f.p, {f.p, 1}).pow(rng.uniform(-window, window));
            x += t.pow(i) * (c + Scalar::zero(f));
            nonzero = true;
        }
        if (nonzero) return x;
    }
    Scalar u = random_unit(rng, f);
    if (f.e > 1)
        return u * Scalar::generator(f).pow(rng.uniform(-static_cast<long>(window) * f.e,
                                                        static_cast<long>(window) * f.e));
    return u * Scalar::from_rational(f.p, {f.p, 1}).pow(rng.uniform(-window, window));
}

Scalar random_integral_scalar(Rng& rng, FieldRef f, int window) {
    if (rng.uniform(0, 5) == 0) return Scalar::zero(f);
    Scalar u = random_unit(rng, f);
    if (f.e > 1) return u * Scalar::generator(f).pow(rng.uniform(0, static_cast<long>(window) * f.e));
    return u * Scalar::from_rational(f.p, {f.p, 1}).pow(rng.uniform(0, window));
}

GroupElement random_torus(Rng& rng, const ParabolicDatum& d, FieldRef f, int window) {
    const int n = d.n();
    Mat t = Mat::identity(n, f);
    if (d.family() == Family::Sp) {
        const int m = n / 2;
        for (int i = 0; i < m; ++i) {
            Scalar x = random_scalar(rng, f, window);
            t.at(m + i, m + i) = x;
            t.at(i, i) = x.inverse();
        }
        return GroupElement{Family::Sp, n, t};
    }
    Scalar prod = Scalar::one(f);
    for (int i = 0; i < n; ++i) {
        Scalar x = random_scalar(rng, f, window);
        t.at(i, i) = x;
        prod = prod * x;
    }
    if (d.family() == Family::SL) t.at(n - 1, n - 1) = t.at(n - 1, n - 1) / prod;
    return GroupElement{d.family(), n, t};
}

namespace {
GroupElement unipotent_from_roots(Rng& rng, const ParabolicDatum& d, FieldRef f, int window,
                                  bool positive, bool crossing_only) {
    const int n = d.n();
    Mat u = Mat::identity(n, f);
    for (const Root& a : d.roots()) {
        if (a.positive != positive) continue;
        if (crossing_only && !crossing(d, a)) continue;
        if (rng.uniform(0, 3) == 0) continue;
        Scalar x = random_scalar(rng, f, window);
        u = u * (Mat::identity(n, f) + d.root_vector(a, f) * x);
    }
    return GroupElement{d.family(), n, u};
}
} // namespace

GroupElement random_borel_unipotent(Rng& rng, const ParabolicDatum& d, FieldRef f, int window,
                                    bool positive) {
    return unipotent_from_roots(rng, d, f, window, positive, /*crossing_only=*/false);
}

GroupElement random_radical(Rng& rng, const ParabolicDatum& d, FieldRef f, int window, bool positive) {
    return unipotent_from_roots(rng, d, f, window, positive, /*crossing_only=*/true);
}

GroupElement random_levi(Rng& rng, const ParabolicDatum& d, FieldRef f, int window) {
    const int n = d.n();
    Mat l = Mat::zero(n, n, f);
    if (d.family() == Family::Sp) {
        const int m = n / 2;
        Mat blk(m, m, Scalar::zero(f));
        do {
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    blk.at(i, j) = rng.uniform(0, 2) == 0 ? Scalar::zero(f)
                                                          : random_scalar(rng, f, window);
        } while (blk.det().is_zero());
        l.set_block(m, m, blk);
        l.set_block(0, 0, blk.transpose().inverse());
        return GroupElement{Family::Sp, n, l};
    }
    Scalar detprod = Scalar::one(f);
    for (int b = 0; b < d.blocks(); ++b) {
        const int s = d.block_start(b), sz = d.block_size(b);
        Mat blk(sz, sz, Scalar::zero(f));
        do {
            for (int i = 0; i < sz; ++i)
                for (int j = 0; j < sz; ++j)
                    blk.at(i, j) = rng.uniform(0, 2) == 0 ? Scalar::zero(f)
                                                          : random_scalar(rng, f, window);
        } while (blk.det().is_zero());
        l.set_block(s, s, blk);
        detprod = detprod * blk.det();
    }
    if (d.family() == Family::SL) {
        const int s = d.block_start(d.blocks() - 1);
        const int sz = d.block_size(d.blocks() - 1);
        Scalar fix = detprod.inverse();
        for (int j = 0; j < sz; ++j) l.at(s + sz - 1, s + j) = l.at(s + sz - 1, s + j) * fix;
    }
    return GroupElement{d.family(), n, l};
}

GroupElement random_big_cell(Rng& rng, const ParabolicDatum& d, FieldRef f, int window) {
    GroupElement um = random_radical(rng, d, f, window, /*positive=*/false);
    GroupElement l = random_levi(rng, d, f, window);
    GroupElement up = random_radical(rng, d, f, window, /*positive=*/true);
    return group_mul(group_mul(um, l), up);
}

GroupElement random_group_element(Rng& rng, const ParabolicDatum& d, FieldRef f, int window) {
    GroupElement g = random_big_cell(rng, d, f, window);
    if (rng.coin()) {
        auto weyl = d.weyl_group();
        const WeylElement& w =
            weyl[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(weyl.size()) - 1))];
        g = GroupElement{d.family(), d.n(), g.m * promote(w.rep, f)};
        if (rng.coin()) g = group_mul(g, random_big_cell(rng, d, f, window));
    }
    return g;
}

GroupElement random_integral_element(Rng& rng, const ParabolicDatum& d, FieldRef f) {
    const int n = d.n();
    const FieldRef base{f.p, 1};
    Mat g = Mat::identity(n, base);
    const long words = rng.uniform(4, 8);
    auto weyl = d.weyl_group();
    for (long w = 0; w < words; ++w) {
        switch (rng.uniform(0, 2)) {
            case 0: {
                const Root& a = d.roots()[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<long>(d.roots().size()) - 1))];
                Scalar x = Scalar::from_rational(rng.uniform(-9, 9), base);
                g = g * (Mat::identity(n, base) + d.root_vector(a, base) * x);
                break;
            }
            case 1: {
                Mat t = Mat::identity(n, base);
                if (d.family() == Family::Sp) {
                    const int m = n / 2;
                    for (int i = 0; i < m; ++i) {
                        Scalar x = random_unit(rng, base);
                        t.at(m + i, m + i) = x;
                        t.at(i, i) = x.inverse();
                    }
                } else {
                    Scalar prod = Scalar::one(base);
                    for (int i = 0; i < n; ++i) {
                        Scalar x = random_unit(rng, base);
                        t.at(i, i) = x;
                        prod = prod * x;
                    }
                    if (d.family() == Family::SL) t.at(n - 1, n - 1) = t.at(n - 1, n - 1) / prod;
                }
                g = g * t;
                break;
            }
            default: {
                const WeylElement& we = weyl[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<long>(weyl.size()) - 1))];
                g = g * promote(we.rep, base);
                break;
            }
        }
    }
    if (!g.is_integral() || !g.det().is_unit())
        throw std::logic_error("random_integral_element: generator word left G_o");
    return GroupElement{d.family(), n, g};
}

} // namespace bigcell
