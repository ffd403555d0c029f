#pragma once

#include <cstdint>
#include <random>

#include "bigcell/groups.hpp"

namespace bigcell {

/// Deterministic random source: a fixed seed fully determines every
/// randomized suite, so reports are reproducible byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("Rng: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

    Rng fork() { return Rng(eng_() ^ 0x9e3779b97f4a7c15ull); }

private:
    std::mt19937_64 eng_;
};

/// Random nonzero scalar with valuation in [-window, window]; numerators
/// and denominators stay small and prime to p.
Scalar random_scalar(Rng& rng, FieldRef f, int window);
/// Random unit (valuation exactly zero).
Scalar random_unit(Rng& rng, FieldRef f);
/// Random p-integral scalar (valuation >= 0), possibly zero.
Scalar random_integral_scalar(Rng& rng, FieldRef f, int window);

/// Random diagonal torus element.
GroupElement random_torus(Rng& rng, const ParabolicDatum& d, FieldRef f, int window);
/// Random element of the full unipotent radical of the Borel (all
/// positive or all negative root subgroups).
GroupElement random_borel_unipotent(Rng& rng, const ParabolicDatum& d, FieldRef f, int window, bool positive);
/// Random element of the unipotent radical U^+ or U^- of the parabolic.
GroupElement random_radical(Rng& rng, const ParabolicDatum& d, FieldRef f, int window, bool positive);
/// Random block-diagonal Levi element.
GroupElement random_levi(Rng& rng, const ParabolicDatum& d, FieldRef f, int window);
/// Random big-cell element u^- l u^+.
GroupElement random_big_cell(Rng& rng, const ParabolicDatum& d, FieldRef f, int window);
/// Random group element (big-cell words joined by Weyl representatives).
GroupElement random_group_element(Rng& rng, const ParabolicDatum& d, FieldRef f, int window);
/// Random element of G_o (integral, unit determinant).
GroupElement random_integral_element(Rng& rng, const ParabolicDatum& d, FieldRef f);

} // namespace bigcell
