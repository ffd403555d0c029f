#include "bigcell/scalar.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

namespace bigcell {

namespace {
std::atomic<std::size_t> g_guard_bits{1000000};

void check_prime(int p) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    mpz_class z(p);
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("not a prime: " + std::to_string(p));
}
} // namespace

std::size_t guard_bits() { return g_guard_bits.load(); }
void set_guard_bits(std::size_t bits) { g_guard_bits.store(bits); }

Valuation rational_valuation(const mpq_class& r, int p) {
    if (r == 0) return Valuation::infinity();
    mpz_class pz(p), tmp;
    long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), r.get_num().get_mpz_t(), pz.get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), r.get_den().get_mpz_t(), pz.get_mpz_t()));
    return Valuation(vn - vd);
}

Scalar::Scalar(int p, std::vector<mpq_class> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    check_guard();
}

Scalar Scalar::from_rational(const mpq_class& r, FieldRef f) {
    if (f.e < 1) throw std::invalid_argument("ramification must be >= 1");
    if (f.p == 0) {
        if (f.e != 1) throw std::invalid_argument("field-agnostic scalars live in e = 1");
        return Scalar(r);
    }
    check_prime(f.p);
    std::vector<mpq_class> c(static_cast<std::size_t>(f.e), mpq_class(0));
    c[0] = r;
    c[0].canonicalize();
    return Scalar(f.p, std::move(c));
}

Scalar Scalar::generator(FieldRef f) {
    check_prime(f.p);
    if (f.e == 1) return from_rational(f.p, f);
    std::vector<mpq_class> c(static_cast<std::size_t>(f.e), mpq_class(0));
    c[1] = 1;
    return Scalar(f.p, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

const mpq_class& Scalar::rational() const {
    if (!is_rational()) throw std::logic_error("Scalar: not a rational element");
    return coeffs_[0];
}

Valuation Scalar::valuation() const {
    if (is_zero()) return Valuation::infinity();
    if (p_ == 0) throw std::logic_error("Scalar: valuation of a field-agnostic rational");
    const long e = ramification();
    Valuation best = Valuation::infinity();
    for (long i = 0; i < e; ++i) {
        const mpq_class& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Valuation vi = rational_valuation(c, p_);
        mpq_class term(vi.value() + mpq_class(i, e));
        term.canonicalize();
        best = min(best, Valuation(term));
    }
    return best;
}

void Scalar::check_guard() const {
    const std::size_t limit = g_guard_bits.load();
    for (const auto& c : coeffs_) {
        if (mpz_sizeinbase(c.get_num().get_mpz_t(), 2) > limit ||
            mpz_sizeinbase(c.get_den().get_mpz_t(), 2) > limit)
            throw GuardTripped("scalar coefficient exceeded the bit-length guard");
    }
}

FieldRef Scalar::join(const Scalar& a, const Scalar& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
        throw std::invalid_argument("Scalar: mixed primes");
    int p = a.p_ != 0 ? a.p_ : b.p_;
    int ea = a.ramification(), eb = b.ramification();
    if (ea != eb && ea != 1 && eb != 1)
        throw std::invalid_argument("Scalar: mixed ramification");
    return {p, ea > eb ? ea : eb};
}

Scalar Scalar::promoted(FieldRef f) const {
    if (p_ == f.p && ramification() == f.e) return *this;
    if (!is_rational() && ramification() != f.e)
        throw std::invalid_argument("Scalar: cannot promote between extensions");
    std::vector<mpq_class> c(static_cast<std::size_t>(f.e), mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size() && i < c.size(); ++i) c[i] = coeffs_[i];
    return Scalar(f.p, std::move(c));
}

Scalar Scalar::operator-() const {
    std::vector<mpq_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Scalar(p_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& o) const {
    FieldRef f = join(*this, o);
    Scalar a = promoted(f), b = o.promoted(f);
    std::vector<mpq_class> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return Scalar(f.p, std::move(c));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    FieldRef f = join(*this, o);
    Scalar a = promoted(f), b = o.promoted(f);
    const std::size_t e = a.coeffs_.size();
    std::vector<mpq_class> c(e, mpq_class(0));
    for (std::size_t i = 0; i < e; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) {
            if (b.coeffs_[j] == 0) continue;
            mpq_class prod = a.coeffs_[i] * b.coeffs_[j];
            std::size_t k = i + j;
            if (k >= e) {     // t^e = p
                k -= e;
                prod *= f.p;
            }
            c[k] += prod;
        }
    }
    return Scalar(f.p, std::move(c));
}

namespace {
using Poly = std::vector<mpq_class>; // dense, ascending degree

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        poly_trim(a);
    }
    return a;
}

Poly poly_quot(Poly a, const Poly& b) {
    poly_trim(a);
    Poly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    return q;
}

Poly poly_sub_mul(const Poly& a, const Poly& q, const Poly& b) {
    // a - q*b
    Poly r = a;
    if (r.size() < q.size() + b.size()) r.resize(q.size() + b.size(), mpq_class(0));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
    poly_trim(r);
    return r;
}
} // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("Scalar: division by zero");
    if (p_ == 0) {
        std::vector<mpq_class> c(1, mpq_class(1) / coeffs_[0]);
        return Scalar(0, std::move(c));
    }
    const std::size_t e = coeffs_.size();
    if (e == 1) {
        std::vector<mpq_class> c(1, mpq_class(1) / coeffs_[0]);
        return Scalar(p_, std::move(c));
    }
    // Extended Euclid in Q[t] against the irreducible modulus t^e - p.
    Poly mod(e + 1, mpq_class(0));
    mod[0] = -p_;
    mod[e] = 1;
    Poly r0 = mod, r1(coeffs_);
    poly_trim(r1);
    Poly s0{{mpq_class(0)}}, s1{{mpq_class(1)}};
    poly_trim(s0);
    while (!r1.empty() && r1.size() > 1) {
        Poly q = poly_quot(r0, r1);
        Poly r2 = poly_rem(r0, r1);
        Poly s2 = poly_sub_mul(s0, q, s1);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("Scalar: modulus not coprime (broken invariant)");
    // r1 is a nonzero constant: s1 / r1[0] is the inverse.
    std::vector<mpq_class> c(e, mpq_class(0));
    for (std::size_t i = 0; i < s1.size(); ++i) c[i] = s1[i] / r1[0];
    return Scalar(p_, std::move(c));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar acc = p_ == 0 ? Scalar(1) : one(field());
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) return false;
    const std::size_t ea = coeffs_.size(), eb = o.coeffs_.size();
    const std::size_t e = ea > eb ? ea : eb;
    for (std::size_t i = 0; i < e; ++i) {
        mpq_class a = i < ea ? coeffs_[i] : mpq_class(0);
        mpq_class b = i < eb ? o.coeffs_[i] : mpq_class(0);
        if (a != b) return false;
    }
    return true;
}

std::string Scalar::str() const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0) continue;
        mpq_class a = c;
        if (any) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Literal parser

namespace {
struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    FieldRef f;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("scalar literal: " + msg + " at position " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    long parse_int_exponent() {
        skip();
        bool neg = eat('-');
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer exponent");
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }

    Scalar parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s[pos] == 't') {
            ++pos;
            return Scalar::generator(f);
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            mpz_class z(s.substr(start, pos - start));
            return Scalar::from_rational(mpq_class(z), f);
        }
        fail("expected integer, 't' or '('");
    }

    Scalar parse_factor() {
        Scalar base = parse_atom();
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            return base.pow(parse_int_exponent());
        }
        return base;
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        for (;;) {
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                v = v * parse_factor();
            } else if (pos < s.size() && s[pos] == '/') {
                ++pos;
                v = v / parse_factor();
            } else {
                return v;
            }
        }
    }

    Scalar parse_expr() {
        skip();
        bool neg = eat('-');
        Scalar v = parse_term();
        if (neg) v = -v;
        for (;;) {
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                char op = s[pos]; ++pos;
                Scalar rhs = parse_term();
                v = op == '+' ? v + rhs : v - rhs;
            } else {
                return v;
            }
        }
    }
};
} // namespace

Scalar parse_scalar(const std::string& text, FieldRef f) {
    Parser p{text, 0, f};
    Scalar v = p.parse_expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing characters");
    return v.is_zero() ? Scalar::zero(f) : v + Scalar::zero(f);
}

} // namespace bigcell
