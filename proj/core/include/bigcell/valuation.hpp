#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bigcell {

/**
 * Additive valuation value: an exact rational, or +infinity (the
 * valuation of zero).  Totally ordered, with +infinity absorbing
 * under addition.
 */
class Valuation {
public:
    Valuation() : inf_(true) {}
    explicit Valuation(const mpq_class& v) : inf_(false), v_(v) {}
    explicit Valuation(long v) : inf_(false), v_(v) {}

    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return inf_; }

    const mpq_class& value() const {
        if (inf_) throw std::logic_error("Valuation: value() of +infinity");
        return v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (inf_ || o.inf_) return infinity();
        return Valuation(mpq_class(v_ + o.v_));
    }

    bool operator==(const Valuation& o) const {
        if (inf_ != o.inf_) return false;
        return inf_ || v_ == o.v_;
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    friend Valuation min(const Valuation& a, const Valuation& b) {
        return a < b ? a : b;
    }

    std::string str() const {
        return inf_ ? "inf" : v_.get_str();
    }

private:
    bool inf_;
    mpq_class v_;
};

} // namespace bigcell
