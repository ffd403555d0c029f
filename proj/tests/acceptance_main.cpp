// Acceptance suite: every contract identity checked in exact arithmetic
// (tolerance zero), one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <vector>

#include "bigcell/duality.hpp"
#include "bigcell/json_io.hpp"
#include "bigcell/symmspace.hpp"

using namespace bigcell;

namespace {

const FieldRef Q3{3, 1};
const FieldRef K2{3, 2};

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

ParabolicDatum sl2() { return ParabolicDatum::make(Family::SL, 2, {1, 1}); }
ParabolicDatum sl3() { return ParabolicDatum::make(Family::SL, 3, {2, 1}); }
ParabolicDatum gl4() { return ParabolicDatum::make(Family::GL, 4, {2, 2}); }
ParabolicDatum sp4() { return ParabolicDatum::siegel(4); }

std::vector<ParabolicDatum> all_data() { return {sl2(), sl3(), gl4(), sp4()}; }

OmegaPoint sl2_point(const Scalar& z) {
    Mat m = Mat::identity(2, z.field());
    m.at(0, 1) = z;
    return OmegaPoint{std::move(m)};
}

OmegaPoint fractional_sl2_point(Rng& rng) {
    long j = 2 * rng.uniform(0, 1) + 1;   // valuation 1/2 or 3/2
    return sl2_point(random_unit(rng, K2) * Scalar::generator(K2).pow(j));
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    Rng rng(101);
    for (const auto& d : all_data()) {
        for (int k = 0; k < 100; ++k) {
            GroupElement g = random_group_element(rng, d, Q3, 2);
            if (f_minor(g, d) != f_closed_form(g, d)) {
                out.fail("f_minor != closed form on " + d.name());
                return out;
            }
        }
    }
    return out;
}

Outcome criterion2() {
    Outcome out;
    Rng rng(102);
    for (const auto& d : {sl2(), sl3(), sp4()}) {
        SuiteReport rep = verify_lemma_f(d, 50, rng, 3);
        for (const auto& c : rep.checks)
            if (!c.pass) out.fail(rep.suite + "/" + c.name + ": " + c.detail);
    }
    return out;
}

Outcome criterion3() {
    Outcome out;
    Rng rng(103);
    for (const auto& d : all_data()) {
        SuiteReport rep = verify_cocycle_suite(d, 200, rng, K2);
        for (const auto& c : rep.checks)
            if (!c.pass) out.fail(rep.suite + "/" + c.name + ": " + c.detail);
    }
    return out;
}

Outcome criterion4() {
    Outcome out;
    Rng rng(104);
    for (const auto& d : all_data()) {
        for (int k = 0; k < 125; ++k) {
            GroupElement g = random_big_cell(rng, d, Q3, 2);
            BigCellFactorization parts = big_cell_factor(g, d);
            if (parts.u_minus * parts.levi * parts.u_plus != g.m)
                out.fail("round trip failed on " + d.name());
            if (f_minor(g, d) != f_minor(GroupElement{d.family(), d.n(), parts.levi}, d))
                out.fail("f(g) != f(levi) on " + d.name());
        }
        // w-translates off the Levi Weyl group have f = 0 and must throw
        for (const auto& w : d.weyl_group()) {
            if (d.in_levi_weyl(w)) continue;
            GroupElement vm = random_borel_unipotent(rng, d, Q3, 2, false);
            GroupElement vp = random_borel_unipotent(rng, d, Q3, 2, true);
            GroupElement t = random_torus(rng, d, Q3, 2);
            Mat cell = vm.m * promote(w.rep, Q3) * t.m * vp.m;
            GroupElement g{d.family(), d.n(), std::move(cell)};
            if (!f_minor(g, d).is_zero()) {
                out.fail("w-translate has f != 0 on " + d.name());
                continue;
            }
            try {
                big_cell_factor(g, d);
                out.fail("NotInBigCell not raised on " + d.name());
            } catch (const NotInBigCell&) {
            }
        }
    }
    return out;
}

Outcome criterion5() {
    Outcome out;
    Rng rng(105);
    auto d = sl2();

    // (a) congruence invariance of the ball verdicts (two congruent lifts)
    {
        const long m = 0;
        Scalar pk = Scalar::from_rational(3, Q3).pow(4 * m + 1);
        GroupElement g2 = random_integral_element(rng, d, Q3);
        Scalar a = random_unit(rng, Q3);
        Mat l = Mat::zero(2, 2, Q3);
        l.at(0, 0) = a;
        l.at(1, 1) = a.inverse();
        Mat gamma = Mat::zero(2, 2, Q3);
        gamma.at(0, 0) = Scalar::one(Q3) + pk * Scalar::from_rational(rng.uniform(-5, 5), Q3);
        gamma.at(0, 1) = pk * Scalar::from_rational(rng.uniform(-5, 5), Q3);
        gamma.at(1, 0) = pk * Scalar::from_rational(rng.uniform(-5, 5), Q3);
        gamma.at(1, 1) = (Scalar::one(Q3) + gamma.at(0, 1) * gamma.at(1, 0)) / gamma.at(0, 0);
        GroupElement g1{Family::SL, 2, l * g2.m * gamma};
        for (int k = 0; k < 100; ++k) {
            OmegaPoint u = sl2_point(random_scalar(rng, K2, 2));
            if (in_ball(u, m, g1, d) != in_ball(u, m, g2, d)) {
                out.fail("congruent lifts disagree (Lemma on B(m; g))");
                break;
            }
        }
    }

    // (b) the half-integral point z = t against the full level-zero set,
    //     and the rejection of the rational point z = 1
    {
        auto reps0 = enumerate_reps(d, 3, 0);
        OmegaPoint half = sl2_point(Scalar::generator(K2));
        if (!in_omega_m(half, 0, reps0, d)) {
            std::string witness;
            for (const auto& ghat : reps0)
                if (in_ball(half, 0, ghat, d)) {
                    witness = group_element_to_json(ghat).dump();
                    break;
                }
            out.fail("z = t rejected at m = 0; the defining inequality fails at the class " +
                     witness + " where v(f) = 1 > N(M+0) + N*0 = 0; the point enters at m = 1");
        }
        OmegaPoint rational = sl2_point(Scalar::one(K2));
        if (in_omega_m(rational, 0, reps0, d)) out.fail("z = 1 accepted at m = 0");
    }

    // (c) the translate bound over 10^3 trials at the sampleable level m = 1
    {
        const long m = 1;
        const long mp = translate_bound(m, d, 3);
        auto reps1 = enumerate_reps(d, 3, 1);
        int trials = 0;
        while (trials < 1000) {
            OmegaPoint u = fractional_sl2_point(rng);
            if (!in_omega_m(u, m, reps1, d)) continue;   // trial requires u in Omega(m)
            GroupElement g = random_integral_element(rng, d, Q3);
            OmegaPoint moved = star_action(g, u, d);
            for (const auto& ghat : reps1)
                if (in_ball(moved, mp, ghat, d)) {
                    out.fail("translate bound violated at an enumerated class");
                    break;
                }
            for (int extra = 0; extra < 3; ++extra) {
                GroupElement ghat = random_integral_element(rng, d, Q3);
                if (in_ball(moved, mp, ghat, d)) {
                    out.fail("translate bound violated at a sampled class");
                    break;
                }
            }
            ++trials;
            if (!out.pass) break;
        }
    }
    return out;
}

Outcome criterion6() {
    Outcome out;
    Rng rng(106);
    std::vector<RationalRep> sigmas;
    for (long s : {1L, 2L, 3L}) sigmas.push_back(RationalRep::det_power(sl2(), {0, s}));
    for (long s : {1L, 2L, 3L}) sigmas.push_back(RationalRep::det_power(sp4(), {0, s}));
    for (const auto& sigma : sigmas) {
        SuiteReport rep = duality_suite(sigma, 20, rng, K2);
        for (const auto& c : rep.checks)
            if (!c.pass) out.fail(rep.suite + "/" + c.name + ": " + c.detail);
    }
    return out;
}

Outcome criterion7() {
    Outcome out;
    Rng rng(107);
    const long expected_N[] = {4, 9, 16, 18};
    int idx = 0;
    for (const auto& d : all_data()) {
        CoveringConstants cc = covering_constants(d, 3);   // interpolation oracle inside
        if (cc.N != expected_N[idx++]) out.fail("unexpected N for " + d.name());
        if (cc.M != 0) out.fail("M != 0 certified for " + d.name());
        GroupElement g = random_big_cell(rng, d, Q3, 2);
        Scalar base = g.m.det().pow(cc.r) * f_ambient(g.m, d);
        for (long lam : {2L, 3L, 5L, 7L, 11L}) {
            Mat scaled = g.m * Scalar::from_rational(lam, Q3);
            if (scaled.det().pow(cc.r) * f_ambient(scaled, d) !=
                base * Scalar::from_rational(lam, Q3).pow(cc.N)) {
                out.fail("homogeneity failed at lambda = " + std::to_string(lam) + " on " +
                         d.name());
            }
        }
    }
    return out;
}

} // namespace

int main() {
    struct Entry {
        int id;
        const char* label;
        double budget_seconds;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {1, "closed-form/minor agreement (100 random elements per datum)", 10, criterion1},
        {2, "cell-value suite over the full Weyl groups (50 samples per w)", 60, criterion2},
        {3, "automorphy identities (200 random triples per datum)", 30, criterion3},
        {4, "factorization round trip and big-cell detection (500 elements)", 10, criterion4},
        {5, "affinoid membership: congruence lemma, z = t / z = 1 verdicts, translate bound", 60,
         criterion5},
        {6, "duality operators for the shipped representations (20 sample points)", 60, criterion6},
        {7, "homogeneity degree and integral coefficient certificates", 5, criterion7},
    };

    int failures = 0;
    for (const auto& e : entries) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& err) {
            out.fail(std::string("exception: ") + err.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool within = secs < e.budget_seconds;
        bool pass = out.pass && within;
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << e.id << ": " << e.label
                  << "  (" << secs << "s, budget " << e.budget_seconds << "s)";
        if (!out.pass) std::cout << "\n       " << out.note;
        if (!within) std::cout << "\n       runtime budget exceeded";
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
