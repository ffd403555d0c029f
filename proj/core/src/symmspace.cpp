#include "bigcell/symmspace.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace bigcell {

OmegaPoint make_omega_point(const ParabolicDatum& d, Mat m) {
    if (m.rows() != d.n() || m.cols() != d.n())
        throw std::invalid_argument("omega point: wrong matrix size");
    if (!d.in_uminus(m))
        throw std::invalid_argument("omega point: not block upper unipotent of the datum's shape");
    return OmegaPoint{std::move(m)};
}

Scalar f_pair(const GroupElement& ghat, const OmegaPoint& u, const ParabolicDatum& d) {
    Mat gu = ghat.m * u.m;
    return f_minor(GroupElement{d.family(), d.n(), std::move(gu)}, d);
}

OmegaPoint star_action(const GroupElement& g, const OmegaPoint& u, const ParabolicDatum& d) {
    Mat gu = g.m * u.m;
    BigCellFactorization parts = big_cell_factor(GroupElement{d.family(), d.n(), std::move(gu)}, d);
    return OmegaPoint{std::move(parts.u_minus)};
}

GroupElement automorphy_factor(const GroupElement& g, const OmegaPoint& u, const ParabolicDatum& d) {
    Mat gu = g.m * u.m;
    BigCellFactorization parts = big_cell_factor(GroupElement{d.family(), d.n(), std::move(gu)}, d);
    return GroupElement{d.family(), d.n(), parts.levi * parts.u_plus};
}

// ---------------------------------------------------------------------------
// Covering constants

namespace {

// Degree of the homogeneous expression x -> expr(x) via exact scaling:
// expr(lambda x) = lambda^deg expr(x), verified at several lambdas.
long measure_degree(const std::function<Scalar(const Mat&)>& expr, const Mat& x, int p) {
    Scalar base = expr(x);
    if (base.is_zero()) throw std::logic_error("measure_degree: vanishing base point");
    Scalar atp = expr(x * Scalar::from_rational(p, x.field()));
    Scalar ratio = atp / base;
    Valuation v = ratio.valuation();
    if (v.is_infinite() || v.value().get_den() != 1)
        throw std::logic_error("measure_degree: non-integral scaling ratio");
    long deg = static_cast<long>(v.value().get_num().get_si());
    if (ratio != Scalar::from_rational(p, x.field()).pow(deg))
        throw std::logic_error("measure_degree: ratio is not a prime power");
    for (long lam : {2L, 3L}) {
        Scalar r2 = expr(x * Scalar::from_rational(lam, x.field())) / base;
        if (r2 != Scalar::from_rational(lam, x.field()).pow(deg))
            throw std::logic_error("measure_degree: homogeneity check failed");
    }
    return deg;
}

std::mutex g_cache_mutex;
std::map<std::tuple<int, int, std::string>, CoveringConstants> g_covering_cache;
std::map<std::tuple<int, int, std::string>, ProjectionConstants> g_projection_cache;
std::map<std::pair<int, long>, std::vector<GroupElement>> g_reps_cache;

Mat sample_big_cell_point(const ParabolicDatum& d, int p) {
    Rng rng(0x5eedULL + static_cast<unsigned>(p));
    return random_big_cell(rng, d, {p, 1}, 1).m;
}

} // namespace

CoveringConstants covering_constants(const ParabolicDatum& d, int p) {
    if (!f_closed_form_supported(d))
        throw std::invalid_argument("covering_constants: unsupported datum " + d.name());
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_tuple(p, d.n(), d.name());
    auto it = g_covering_cache.find(key);
    if (it != g_covering_cache.end()) return it->second;

    CoveringConstants cc;
    cc.r = d.r();
    Mat x = sample_big_cell_point(d, p);
    cc.N = measure_degree(
        [&](const Mat& y) { return y.det().pow(cc.r) * f_ambient(y, d); }, x, p);

    // Structural degree of the closed form, as a cross-check on the oracle.
    long structural = 0;
    if (d.family() == Family::Sp) {
        const long m = d.n() / 2;
        structural = cc.r * d.n() + m * (m + 1);
    } else {
        const long n1 = d.block_size(0), n2 = d.block_size(1);
        structural = d.n() * (cc.r - (d.family() == Family::GL ? n2 : 0)) + n2 * (n1 + n2);
    }
    if (structural != cc.N)
        throw std::logic_error("covering_constants: oracle and closed-form degree disagree");

    // M = 0: det^r f is a polynomial built from determinants of integer
    // submatrix patterns, so its coefficients are integers.  Spot-check:
    // integral inputs must give integral values.
    Rng rng(0xc0ffeeULL);
    for (int k = 0; k < 50; ++k) {
        Mat y = Mat::zero(d.n(), d.n(), {p, 1});
        for (int i = 0; i < d.n(); ++i)
            for (int j = 0; j < d.n(); ++j)
                y.at(i, j) = Scalar::from_rational(rng.uniform(-20, 20), FieldRef{p, 1});
        if (y.det().is_zero()) continue;
        Scalar val = y.det().pow(cc.r) * f_ambient(y, d);
        if (!val.is_zero() && !val.is_integral())
            throw std::logic_error("covering_constants: integral coefficient check failed");
    }
    cc.M = 0;
    g_covering_cache.emplace(key, cc);
    return cc;
}

Valuation sup_norm_valuation(const OmegaPoint& u) {
    Valuation best(0);
    for (int i = 0; i < u.m.rows(); ++i)
        for (int j = 0; j < u.m.cols(); ++j) best = min(best, u.m.at(i, j).valuation());
    return best;
}

bool in_ball(const OmegaPoint& u, long m, const GroupElement& ghat, const ParabolicDatum& d) {
    CoveringConstants cc = covering_constants(d, ghat.m.field().p);
    Valuation nu = sup_norm_valuation(u);
    Valuation vf = f_pair(ghat, u, d).valuation();
    // |f| < |u|^N |pi|^{N(M+m)}  <=>  v(f) > N nu + N (M + m)
    mpq_class bound = mpq_class(cc.N) * nu.value() + mpq_class(cc.N * (cc.M + m));
    return vf > Valuation(bound);
}

bool in_omega_m(const OmegaPoint& u, long m, const std::vector<GroupElement>& reps,
                const ParabolicDatum& d) {
    if (m < 0) throw std::invalid_argument("in_omega_m: m must be nonnegative");
    for (const auto& ghat : reps)
        if (in_ball(u, m, ghat, d)) return false;
    return true;
}

std::vector<GroupElement> enumerate_reps(const ParabolicDatum& d, int p, long m) {
    if (d.family() != Family::SL || d.n() != 2)
        throw std::invalid_argument("enumerate_reps: only SL(2) is enumerated");
    if (p > 5 || m > 1 || m < 0)
        throw std::invalid_argument("enumerate_reps: supported range is p <= 5, m <= 1");
    CoveringConstants cc = covering_constants(d, p);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_pair(p, m);
    auto it = g_reps_cache.find(key);
    if (it != g_reps_cache.end()) return it->second;

    long k = cc.N * m + 1;
    long pk = 1, pk1 = 1;
    for (long i = 0; i < k; ++i) pk *= p;
    for (long i = 0; i + 1 < k; ++i) pk1 *= p;

    const FieldRef f{p, 1};
    std::vector<GroupElement> reps;
    // bottom-row classes (c : 1), c mod p^k; c = 0 is the identity class
    for (long c = 0; c < pk; ++c) {
        Mat g = Mat::identity(2, f);
        g.at(1, 0) = Scalar::from_rational(c, f);
        reps.push_back(GroupElement{Family::SL, 2, std::move(g)});
    }
    // bottom-row classes (1 : p dbar), dbar mod p^{k-1}
    for (long db = 0; db < pk1; ++db) {
        Mat g = Mat::zero(2, 2, f);
        g.at(0, 1) = Scalar::from_rational(-1, f);
        g.at(1, 0) = Scalar::from_rational(1, f);
        g.at(1, 1) = Scalar::from_rational(p * db, f);
        reps.push_back(GroupElement{Family::SL, 2, std::move(g)});
    }
    g_reps_cache.emplace(key, reps);
    return reps;
}

ProjectionConstants projection_constants(const ParabolicDatum& d, int p) {
    if (!f_closed_form_supported(d) || d.blocks() != 2)
        throw std::invalid_argument("projection_constants: unsupported datum " + d.name());
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto key = std::make_tuple(p, d.n(), d.name());
    auto it = g_projection_cache.find(key);
    if (it != g_projection_cache.end()) return it->second;

    ProjectionConstants pc;
    pc.s = 1;
    pc.t = d.family() == Family::GL ? d.block_size(1) : 0;
    pc.L = 0;   // the cleared-denominator entries carry integer coefficients

    const int n1 = d.block_size(0), n2 = d.block_size(1);
    Mat x = sample_big_cell_point(d, p);
    long maxdeg = 0;
    // the diagonal entries contribute det^t f^s itself
    maxdeg = measure_degree(
        [&](const Mat& y) { return y.det().pow(pc.t) * f_ambient(y, d).pow(pc.s); }, x, p);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            auto entry = [&](const Mat& y) {
                Mat proj = y.block(0, n1, n1, n2) * y.block(n1, n1, n2, n2).inverse();
                return y.det().pow(pc.t) * f_ambient(y, d).pow(pc.s) * proj.at(i, j);
            };
            Scalar probe = entry(x);
            if (probe.is_zero()) continue;
            long deg = measure_degree(entry, x, p);
            if (deg > maxdeg) maxdeg = deg;
        }
    pc.D = maxdeg;
    g_projection_cache.emplace(key, pc);
    return pc;
}

long translate_bound(long m, const ParabolicDatum& d, int p) {
    if (m < 0) throw std::invalid_argument("translate_bound: m must be nonnegative");
    CoveringConstants cc = covering_constants(d, p);
    ProjectionConstants pc = projection_constants(d, p);
    long scale = std::max(pc.D, cc.N * pc.s);
    long mp = -cc.M - pc.L + scale * (cc.M + m);
    return mp > 0 ? mp : 0;
}

OmegaPoint random_omega_point(Rng& rng, const ParabolicDatum& d, FieldRef f, int window) {
    const int n = d.n();
    Mat u = Mat::identity(n, f);
    if (d.family() == Family::Sp) {
        const int m = n / 2;
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                Scalar x = random_scalar(rng, f, window);
                u.at(i, m + j) = x;
                u.at(j, m + i) = x;
            }
        return OmegaPoint{std::move(u)};
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d.block_of(i) < d.block_of(j)) u.at(i, j) = random_scalar(rng, f, window);
    return OmegaPoint{std::move(u)};
}

SuiteReport verify_cocycle_suite(const ParabolicDatum& d, int samples, Rng& rng, FieldRef f) {
    SuiteReport report;
    report.suite = "cocycle:" + d.name();
    const FieldRef base{f.p, 1};
    bool cocycle = true, action = true, foj = true, mult = true, jtwist = true, ftwist = true;
    std::string detail[6];
    int done = 0;
    while (done < samples) {
        GroupElement g1 = random_group_element(rng, d, base, 1);
        GroupElement g2 = random_group_element(rng, d, base, 1);
        GroupElement l = random_levi(rng, d, base, 1);
        OmegaPoint u = random_omega_point(rng, d, f, 1);
        try {
            OmegaPoint g2u = star_action(g2, u, d);
            GroupElement j12 = automorphy_factor(group_mul(g1, g2), u, d);
            GroupElement j1 = automorphy_factor(g1, g2u, d);
            GroupElement j2 = automorphy_factor(g2, u, d);
            if (j12.m != j1.m * j2.m && cocycle) {
                cocycle = false;
                detail[0] = "cocycle failed at sample " + std::to_string(done);
            }
            if (star_action(group_mul(g1, g2), u, d).m != star_action(g1, g2u, d).m && action) {
                action = false;
                detail[1] = "action law failed at sample " + std::to_string(done);
            }
            if (f_minor(j2, d) != f_pair(g2, u, d) && foj) {
                foj = false;
                detail[2] = "f(j(g,u)) != f(g,u) at sample " + std::to_string(done);
            }
            if (f_pair(group_mul(g1, g2), u, d) != f_pair(g1, g2u, d) * f_pair(g2, u, d) && mult) {
                mult = false;
                detail[3] = "multiplicativity failed at sample " + std::to_string(done);
            }
            if (automorphy_factor(group_mul(l, g2), u, d).m != l.m * j2.m && jtwist) {
                jtwist = false;
                detail[4] = "j(l g, u) != l j(g, u) at sample " + std::to_string(done);
            }
            if (f_pair(group_mul(l, g2), u, d) != f_minor(l, d) * f_pair(g2, u, d) && ftwist) {
                ftwist = false;
                detail[5] = "f(l g, u) != f(l) f(g, u) at sample " + std::to_string(done);
            }
            ++done;
        } catch (const NotInBigCell&) {
            continue;
        }
    }
    report.add("cocycle-law", cocycle, detail[0]);
    report.add("action-law", action, detail[1]);
    report.add("f-of-j", foj, detail[2]);
    report.add("multiplicativity", mult, detail[3]);
    report.add("levi-twist-j", jtwist, detail[4]);
    report.add("levi-twist-f", ftwist, detail[5]);
    return report;
}

std::optional<GroupElement> omega_falsify(const OmegaPoint& u, int trials, Rng& rng,
                                          const ParabolicDatum& d, int p) {
    const FieldRef f{p, 1};
    std::vector<GroupElement> candidates;
    if (d.family() == Family::SL && d.n() == 2) {
        const Scalar& z = u.m.at(0, 1);
        if (z.is_rational()) {
            // exact vanishing class for a rational point: bottom row (1, -z)
            Mat g = Mat::zero(2, 2, f);
            if (z.is_integral()) {
                g.at(0, 1) = Scalar::from_rational(-1, f);
                g.at(1, 0) = Scalar::from_rational(1, f);
                g.at(1, 1) = -Scalar::from_rational(z.rational(), f);
            } else {
                g = Mat::identity(2, f);
                g.at(1, 0) = -Scalar::from_rational(z.rational(), f).inverse();
            }
            candidates.push_back(GroupElement{Family::SL, 2, std::move(g)});
        }
        for (const auto& rep : enumerate_reps(d, p, 0)) candidates.push_back(rep);
    }
    for (const auto& cand : candidates)
        if (f_pair(cand, u, d).is_zero()) return cand;
    for (int k = 0; k < trials; ++k) {
        GroupElement g = random_integral_element(rng, d, f);
        if (f_pair(g, u, d).is_zero()) return g;
    }
    return std::nullopt;
}

} // namespace bigcell
