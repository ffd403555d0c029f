#pragma once

#include <gmpxx.h>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigcell/valuation.hpp"

namespace bigcell {

/// Thrown when a numerator or denominator exceeds the configured bit budget.
class GuardTripped : public std::runtime_error {
public:
    explicit GuardTripped(const std::string& what) : std::runtime_error(what) {}
};

/// Global bit-length guard for exact arithmetic.  Operations abort with
/// GuardTripped as soon as any coefficient's numerator or denominator
/// exceeds this many bits.  Default: 1,000,000 bits.
std::size_t guard_bits();
void set_guard_bits(std::size_t bits);

/// Identifies the field the scalars live in: Q_p when e = 1, otherwise
/// the totally ramified extension K_e = Q_p[t]/(t^e - p).
struct FieldRef {
    int p = 0;
    int e = 1;
    bool operator==(const FieldRef&) const = default;
};

/**
 * Exact element of Q_p or of K_e = Q_p[t]/(t^e - p).
 *
 * Stored as e rational coefficients of 1, t, ..., t^{e-1}, with t^e = p.
 * All arithmetic is exact; there is no precision cap.  The valuation of
 * a nonzero element is min_i(v_p(c_i) + i/e), a rational with
 * denominator dividing e; the valuation of zero is +infinity.
 *
 * A scalar constructed from a plain rational without naming a prime is
 * field-agnostic (p = 0) and promotes to any field on contact.
 */
class Scalar {
public:
    Scalar() : p_(0), coeffs_(1, mpq_class(0)) {}
    Scalar(long v) : p_(0), coeffs_(1, mpq_class(v)) {}          // NOLINT: implicit by design
    explicit Scalar(const mpq_class& v) : p_(0), coeffs_(1, canonical(v)) {}

    /// Rational r viewed inside Q_p (e = 1) or K_e.
    static Scalar from_rational(const mpq_class& r, FieldRef f);
    /// The generator t of K_e (t = p when e = 1).
    static Scalar generator(FieldRef f);
    static Scalar zero(FieldRef f) { return from_rational(0, f); }
    static Scalar one(FieldRef f) { return from_rational(1, f); }

    int prime() const { return p_; }
    int ramification() const { return static_cast<int>(coeffs_.size()); }
    FieldRef field() const { return {p_, ramification()}; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;          // all coefficients of t, t^2, ... vanish
    const mpq_class& rational() const; // requires is_rational()

    Valuation valuation() const;
    bool is_integral() const { return valuation() >= Valuation(0); }
    bool is_unit() const { return valuation() == Valuation(0); }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar pow(long k) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form, e.g. "2/3", "1 + 2*t", "-t^2".
    std::string str() const;

private:
    Scalar(int p, std::vector<mpq_class> coeffs);
    static mpq_class canonical(mpq_class q) { q.canonicalize(); return q; }

    void check_guard() const;
    Scalar promoted(FieldRef f) const;
    static FieldRef join(const Scalar& a, const Scalar& b);

    int p_;                         // 0 = field-agnostic rational
    std::vector<mpq_class> coeffs_; // size = e
};

/// Parse the scalar literal grammar: sums of products of integers and
/// the generator "t", with "/" and integer "^", e.g. "3^2 * 7/5 + t^-1".
Scalar parse_scalar(const std::string& text, FieldRef f);

/// p-adic valuation of an exact rational (v_p(0) = +infinity).
Valuation rational_valuation(const mpq_class& r, int p);

} // namespace bigcell
