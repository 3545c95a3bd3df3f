#pragma once

#include <compare>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "selmer/polynomial.hpp"
#include "selmer/real_roots.hpp"

namespace selmer {

/// Raised by inversion when the modulus turns out to be reducible: the element
/// shares the nontrivial factor `factor` with the minimal polynomial.
struct ZeroDivisorError : ZeroDivisionError {
    explicit ZeroDivisorError(RatPoly f)
        : ZeroDivisionError("element is a zero divisor; modulus has factor " + f.to_string("x")), factor(std::move(f)) {}
    RatPoly factor;
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q(alpha) = Q[x]/(m(x)) together with a real embedding: alpha is the unique
/// root of m inside the isolating interval. m is assumed irreducible.
class NumberField {
    struct Token {};

public:
    NumberField(Token, RatPoly min_poly, Interval root) : min_poly_(monic(min_poly)), root_(std::move(root)) {
        if (min_poly_.degree() < 1) throw DomainError("minimal polynomial must have degree >= 1");
        if (!(root_.lo < root_.hi)) throw DomainError("root interval must satisfy lo < hi");
        if (min_poly_.sign_at(root_.lo) == 0 || min_poly_.sign_at(root_.hi) == 0)
            throw DomainError("minimal polynomial vanishes at an endpoint of the root interval");
        if (count_roots_in(min_poly_, root_) != 1)
            throw DomainError("root interval must isolate exactly one real root of " + min_poly_.to_string("x"));
        if (squarefree_part(min_poly_).degree() != min_poly_.degree())
            throw DomainError("minimal polynomial is not squarefree");
        const std::size_t d = degree();
        // alpha^(d+j) for j = 0..d-2 in the power basis
        std::vector<Rational> cur(d, Rational(0));
        for (std::size_t i = 0; i < d; ++i) cur[i] = -min_poly_[i];
        for (std::size_t j = 0; j + 1 < d; ++j) {
            reduction_.push_back(cur);
            std::vector<Rational> next(d, Rational(0));
            for (std::size_t i = 0; i + 1 < d; ++i) next[i + 1] = cur[i];
            for (std::size_t i = 0; i < d; ++i) next[i] -= cur[d - 1] * min_poly_[i];
            cur = std::move(next);
        }
        levels_.push_back(root_);
    }

    static FieldPtr create(const RatPoly& min_poly, const Interval& root) {
        return std::make_shared<const NumberField>(Token{}, min_poly, root);
    }
    static FieldPtr create(const IntPoly& min_poly, const Interval& root) { return create(to_rational(min_poly), root); }

    /// Q itself, presented as Q[x]/(x) with root 0.
    static FieldPtr rationals() {
        static const FieldPtr q = create(RatPoly({Rational(0), Rational(1)}), Interval(Rational(-1), Rational(1)));
        return q;
    }

    std::size_t degree() const { return static_cast<std::size_t>(min_poly_.degree()); }
    const RatPoly& min_poly() const { return min_poly_; }
    const Interval& root_interval() const { return root_; }
    /// Value of the generator when the field has degree 1.
    Rational rational_root() const { return -min_poly_[0]; }

    bool same_as(const NumberField& o) const { return this == &o || (min_poly_ == o.min_poly_ && root_ == o.root_); }

    /// Enclosure of the root after 8*level bisections of the isolating interval.
    Interval root_enclosure(std::size_t level) const {
        std::lock_guard lock(mu_);
        while (levels_.size() <= level) {
            Interval iv = levels_.back();
            iv = refine_root(min_poly_, iv, iv.width() / 256, &bisections_);
            levels_.push_back(iv);
        }
        return levels_[level];
    }

    long bisections() const {
        std::lock_guard lock(mu_);
        return bisections_;
    }

    /// Reduces a coefficient vector of any length modulo the minimal polynomial.
    std::vector<Rational> reduce(std::vector<Rational> c) const {
        const std::size_t d = degree();
        if (c.size() <= d) {
            c.resize(d, Rational(0));
            return c;
        }
        std::vector<Rational> out(c.begin(), c.begin() + static_cast<long>(d));
        for (std::size_t k = d; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            if (k - d < reduction_.size()) {
                const auto& row = reduction_[k - d];
                for (std::size_t i = 0; i < d; ++i) out[i] += c[k] * row[i];
            } else {
                // only reached for inputs of degree beyond 2d-2
                RatPoly rem = RatPoly(std::move(c)) % min_poly_;
                out.assign(d, Rational(0));
                for (std::size_t i = 0; i < d; ++i) out[i] = rem[i];
                return out;
            }
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << min_poly_.to_string("x") << " with root in (" << root_.lo << ", " << root_.hi << ")";
        return os.str();
    }

private:
    RatPoly min_poly_;
    Interval root_;
    std::vector<std::vector<Rational>> reduction_;
    mutable std::mutex mu_;
    mutable std::vector<Interval> levels_;
    mutable long bisections_ = 0;
};

/// An element c0 + c1*alpha + ... + c_{d-1}*alpha^{d-1}; the coefficient vector is canonical.
class Element {
public:
    Element() = default;
    explicit Element(FieldPtr f) : field_(std::move(f)), coeffs_(field_->degree(), Rational(0)) {}
    Element(FieldPtr f, const Rational& c) : Element(std::move(f)) { coeffs_[0] = c; }
    Element(FieldPtr f, std::vector<Rational> c) : field_(std::move(f)) { coeffs_ = field_->reduce(std::move(c)); }

    static Element generator(const FieldPtr& f) { return Element(f, std::vector<Rational>{Rational(0), Rational(1)}); }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    /// Exact value of a rational element.
    Rational rational_value() const {
        if (!is_rational()) throw DomainError("element is irrational");
        return coeffs_[0];
    }

    Element operator-() const {
        Element r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    Element& operator+=(const Element& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    Element& operator-=(const Element& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    Element& operator+=(const Rational& q) {
        coeffs_[0] += q;
        return *this;
    }
    Element& operator-=(const Rational& q) {
        coeffs_[0] -= q;
        return *this;
    }
    Element& operator*=(const Rational& q) {
        for (auto& c : coeffs_) c *= q;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator+(Element a, const Rational& q) { return a += q; }
    friend Element operator-(Element a, const Rational& q) { return a -= q; }
    friend Element operator+(const Rational& q, Element a) { return a += q; }
    friend Element operator-(const Rational& q, const Element& a) { return (-a) += q; }
    friend Element operator*(Element a, const Rational& q) { return a *= q; }
    friend Element operator*(const Rational& q, Element a) { return a *= q; }

    friend Element operator*(const Element& a, const Element& b) {
        a.check(b);
        const std::size_t d = a.coeffs_.size();
        if (d == 1) return Element(a.field_, a.coeffs_[0] * b.coeffs_[0]);
        std::vector<Rational> prod(2 * d - 1, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Element(a.field_, std::move(prod));
    }

    /// Exact inverse via the extended gcd with the minimal polynomial.
    Element inverse() const {
        if (is_zero()) throw ZeroDivisionError("inverse of zero");
        if (coeffs_.size() == 1 || is_rational()) return Element(field_, Rational(1 / coeffs_[0]));
        auto [g, s, t] = extended_gcd(as_polynomial(), field_->min_poly());
        if (g.degree() > 0) throw ZeroDivisorError(g);
        std::vector<Rational> c(s.coeffs());
        return Element(field_, std::move(c));
    }

    friend Element operator/(const Element& a, const Element& b) { return a * b.inverse(); }
    friend Element operator/(Element a, const Rational& q) {
        if (q == 0) throw ZeroDivisionError("division by zero");
        return a *= 1 / q;
    }
    friend Element operator/(const Rational& q, const Element& b) { return q * b.inverse(); }

    Element pow(long e) const {
        Element base = e < 0 ? inverse() : *this;
        Element r(field_, Rational(1));
        for (unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e); k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            base = base * base;
        }
        return r;
    }

    RatPoly as_polynomial() const { return RatPoly(coeffs_); }

    /// Interval containing the real embedding, evaluated at the given refinement level of the root.
    Interval enclosure_at_level(std::size_t level) const {
        if (is_rational()) return Interval(coeffs_[0]);
        return as_polynomial().evaluate(field_->root_enclosure(level));
    }

    /// Interval of width <= max_width containing the value.
    Interval enclosure(const Rational& max_width) const {
        for (std::size_t level = 0; level <= kMaxLevel; ++level) {
            Interval iv = enclosure_at_level(level);
            if (iv.width() <= max_width) return iv;
        }
        throw CertificationError("enclosure refinement budget exceeded");
    }

    /// Sign of the real embedding. Zero is decided on the canonical form, never by refinement.
    int sign() const {
        if (is_zero()) return 0;
        if (is_rational()) return sgn(coeffs_[0]);
        for (std::size_t level = 0; level <= kMaxLevel; ++level) {
            int s = enclosure_at_level(level).certain_sign();
            if (s != 0) return s;
        }
        throw CertificationError("sign refinement budget exceeded");
    }

    /// Greatest integer m with m <= value.
    Integer floor() const {
        if (is_rational()) return floor_of(coeffs_[0]);
        for (std::size_t level = 0; level <= kMaxLevel; ++level) {
            Interval iv = enclosure_at_level(level);
            Integer m = floor_of(iv.lo);
            if (iv.hi < Rational(m + 1)) return m;
            if (iv.hi < Rational(m + 2)) {
                // exactly one integer boundary m+1 inside the enclosure
                Integer q = m + 1;
                return (*this - Rational(q)).sign() >= 0 ? q : m;
            }
        }
        throw CertificationError("floor refinement budget exceeded");
    }

    double approx() const {
        Interval iv = enclosure(Rational(1) / pow_int(Integer(2), 60));
        return iv.midpoint().get_d();
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.coeffs_ == b.coeffs_ && (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
    }

    friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
        int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::strong_ordering operator<=>(const Element& a, const Rational& q) {
        int s = (a - q).sign();
        return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend bool operator==(const Element& a, const Rational& q) { return a.is_rational() && a.coeffs_[0] == q; }

    /// "c0 + c1*a + c2*a^2" with exact rationals.
    std::string to_text(const std::string& var = "a") const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
        return first ? "0" : os.str();
    }

    std::size_t hash() const {
        std::size_t h = coeffs_.size();
        for (const auto& c : coeffs_) hash_combine(h, hash_rational(c));
        return h;
    }

private:
    static constexpr std::size_t kMaxLevel = 600;

    void check(const Element& o) const {
        if (field_ != o.field_ && !(field_ && o.field_ && field_->same_as(*o.field_))) throw FieldMismatchError();
    }

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

inline int compare(const Element& a, const Element& b) { return (a - b).sign(); }

inline Element abs(const Element& a) { return a.sign() < 0 ? -a : a; }

/// Decimal rendering correct to the requested number of places: refines the enclosure
/// until both endpoints round to the same string.
inline std::string certified_decimal(const Element& a, unsigned digits) {
    if (a.is_rational()) return decimal_string(a.rational_value(), digits);
    Rational w = Rational(1) / pow_int(Integer(10), digits + 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Interval iv = a.enclosure(w);
        std::string lo = decimal_string(iv.lo, digits), hi = decimal_string(iv.hi, digits);
        if (lo == hi) return lo;
        w /= 1024;
    }
    throw CertificationError("decimal rendering did not stabilise");
}

}  // namespace selmer
