#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "selmer/rational.hpp"

namespace selmer {

/// Dense univariate polynomial, coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
    static Polynomial monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1, T(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }
    /// x - r
    static Polynomial linear_root(const T& r) { return Polynomial({-r, T(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& c, const Polynomial& a) {
        std::vector<T> r = a.coeffs_;
        for (auto& x : r) x *= c;
        return Polynomial(std::move(r));
    }

    template <class U>
    U evaluate(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    /// Horner evaluation in interval arithmetic; encloses the range over x.
    Interval evaluate(const Interval& x) const {
        Interval acc{Rational(0)};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = Rational(*it) + acc * x;
        return acc;
    }

    int sign_at(const Rational& x) const { return sgn(Rational(evaluate(Rational(x)))); }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> r(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    /// p(-x)
    Polynomial reflected() const {
        std::vector<T> r = coeffs_;
        for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return Polynomial(std::move(r));
    }

    /// p(x^2)
    Polynomial squared_argument() const {
        if (is_zero()) return {};
        std::vector<T> r(2 * coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[2 * i] = coeffs_[i];
        return Polynomial(std::move(r));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            T c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            bool negative = c < 0;
            T mag = negative ? T(-c) : c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& z : p.coeffs()) c.emplace_back(z);
    return RatPoly(std::move(c));
}

/// Scales p to a primitive integer polynomial with positive leading coefficient.
inline IntPoly primitive_part(const RatPoly& p) {
    if (p.is_zero()) return {};
    Integer den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * den;
        z.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
    }
    if (z.back() < 0) content = -content;
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return IntPoly(std::move(z));
}

inline RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return Rational(1 / p.leading()) * p;
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw ZeroDivisionError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lead_inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

inline RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

/// Monic gcd over Q; gcd(0, 0) = 0.
inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<RatPoly, RatPoly, RatPoly> extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.leading();
    return {inv * r0, inv * s0, inv * t0};
}

/// Quotient of an exact division; throws if b does not divide a.
inline RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

/// Monic squarefree part p / gcd(p, p').
inline RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 0) return monic(p);
    return monic(exact_quotient(p, gcd(p, p.derivative())));
}

inline IntPoly to_integer_exact(const RatPoly& p) {
    std::vector<Integer> z;
    for (const auto& c : p.coeffs()) {
        if (!is_integral(c)) throw DomainError("polynomial has non-integral coefficients");
        z.push_back(c.get_num());
    }
    return IntPoly(std::move(z));
}

}  // namespace selmer
