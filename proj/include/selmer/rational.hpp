#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "selmer/errors.hpp"

namespace selmer {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDivisionError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline int sign_of(const Rational& q) { return sgn(q); }
inline int sign_of(const Integer& z) { return sgn(z); }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    Rational r(1), b(base);
    if (e < 0) {
        if (b == 0) throw ZeroDivisionError("negative power of zero");
        b = 1 / b;
        e = -e;
    }
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

/// Parses "p", "p/q", "-1.25" or "1e-30" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational");

    auto parse_integer = [](const std::string& t) {
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw ParseError("malformed integer '" + t + "'");
        for (std::size_t k = i; k < t.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw ParseError("malformed integer '" + t + "'");
        return Integer(t[0] == '+' ? t.substr(1) : t, 10);
    };

    if (auto slash = s.find('/'); slash != std::string::npos)
        return make_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        exponent = parse_integer(s.substr(e + 1)).get_si();
        s = s.substr(0, e);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        s = s.substr(0, dot) + frac;
        exponent -= static_cast<long>(frac.size());
        if (s.empty() || s == "-" || s == "+") throw ParseError("malformed decimal");
    }
    return Rational(parse_integer(s)) * pow_rational(Rational(10), exponent);
}

/// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (hi < lo) throw DomainError("interval with hi < lo");
    }
    explicit Interval(const Rational& point) : lo(point), hi(point) {}

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    /// -1, +1 when the whole interval has that sign, 0 when it straddles or touches zero.
    int certain_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval operator*(const Rational& c, const Interval& a) {
    return c >= 0 ? Interval(c * a.lo, c * a.hi) : Interval(c * a.hi, c * a.lo);
}

inline Interval operator+(const Rational& c, const Interval& a) { return {c + a.lo, c + a.hi}; }

inline Interval abs(const Interval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rational(0), std::max(Rational(-a.lo), a.hi)};
}

inline Interval reciprocal(const Interval& a) {
    if (a.contains_zero()) throw ZeroDivisionError("reciprocal of an interval containing zero");
    return {1 / a.hi, 1 / a.lo};
}

inline Interval max(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << '[' << iv.lo << ", " << iv.hi << ']';
}

/// Rounds q to `digits` places after the decimal point, half away from zero.
inline std::string decimal_string(const Rational& q, unsigned digits) {
    Integer scale = pow_int(Integer(10), digits);
    Rational scaled = abs(q) * scale + Rational(1, 2);
    Integer n = floor_of(scaled);
    std::string body = n.get_str();
    if (digits > 0) {
        if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, ".");
    }
    bool negative = q < 0 && n != 0;
    return negative ? "-" + body : body;
}

struct IntegerHash {
    std::size_t operator()(const Integer& z) const noexcept {
        std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) * 0x9e3779b97f4a7c15ULL;
        const std::size_t limbs = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < limbs; ++i)
            h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
                 (h << 6) + (h >> 2);
        return h;
    }
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
    seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_rational(const Rational& q) {
    std::size_t h = IntegerHash{}(q.get_num());
    hash_combine(h, IntegerHash{}(q.get_den()));
    return h;
}

}  // namespace selmer
