#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selmer/point.hpp"

namespace selmer {

enum class Algorithm { ssa, msa };

inline std::string to_string(Algorithm a) { return a == Algorithm::ssa ? "ssa" : "msa"; }

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "ssa") return Algorithm::ssa;
    if (s == "msa") return Algorithm::msa;
    throw ParseError("unknown algorithm '" + s + "' (expected ssa or msa)");
}

/// Branch index of one step: the insertion index j in 0..n for SSA, the integer part k >= 1 for MSA.
struct Digit {
    Algorithm algo = Algorithm::msa;
    Integer value;

    std::size_t index() const { return static_cast<std::size_t>(value.get_ui()); }
    friend bool operator==(const Digit&, const Digit&) = default;
};

struct StepOutcome {
    std::optional<PointB> next;  // empty when the orbit stops
    std::optional<Digit> digit;

    bool terminated() const { return !next.has_value(); }
};

// ---------------------------------------------------------------------------
// Homogeneous coordinates on Delta^{n+1} = {b_0 >= b_1 >= ... >= b_n >= 0}

inline std::vector<Element> lift(const PointB& x) {
    std::vector<Element> b;
    b.reserve(x.dim() + 1);
    b.emplace_back(x.field(), Rational(1));
    for (const auto& c : x.coords()) b.push_back(c);
    return b;
}

inline PointB project(const std::vector<Element>& b) {
    if (b.size() < 2) throw DomainError("projection needs n+1 >= 2 coordinates");
    if (b[0].sign() <= 0) throw ZeroDivisionError("projection with b_0 <= 0");
    Element inv = b[0].inverse();
    std::vector<Element> x;
    for (std::size_t i = 1; i < b.size(); ++i) x.push_back(b[i] * inv);
    return PointB(std::move(x));
}

/// pi(sigma b): replace b_0 by b_0 - b_n and re-sort, inserting the new value before any equal entries.
inline std::vector<Element> ssa_homogeneous_step(const std::vector<Element>& b) {
    Element v = b.front() - b.back();
    std::vector<Element> out;
    std::size_t i = 1;
    for (; i < b.size() && b[i] > v; ++i) out.push_back(b[i]);
    out.push_back(v);
    for (; i < b.size(); ++i) out.push_back(b[i]);
    return out;
}

/// pi(delta b) = (b_1, ..., b_n, b_0 - k b_n) with k = [b_0 / b_n].
inline std::vector<Element> msa_homogeneous_step(const std::vector<Element>& b) {
    Integer k = (b.front() / b.back()).floor();
    std::vector<Element> out(b.begin() + 1, b.end());
    out.push_back(b.front() - b.back() * Rational(k));
    return out;
}

// ---------------------------------------------------------------------------
// Subtractive algorithm

namespace detail {
inline std::size_t ssa_index(const PointB& x) {
    Element top = 1 - x[x.dim() - 1];
    std::size_t j = 0;
    while (j < x.dim() && x[j] > top) ++j;
    return j;
}
}  // namespace detail

inline Digit ssa_digit(const PointB& x) { return {Algorithm::ssa, Integer(static_cast<unsigned long>(detail::ssa_index(x)))}; }

inline StepOutcome ssa_step(const PointB& x) {
    const std::size_t n = x.dim();
    const std::size_t j = detail::ssa_index(x);
    const Digit digit{Algorithm::ssa, Integer(static_cast<unsigned long>(j))};
    const Element top = 1 - x[n - 1];
    std::vector<Element> y;
    y.reserve(n);
    if (j == 0) {
        if (top.is_zero()) return {std::nullopt, digit};
        Element inv = top.inverse();
        for (const auto& c : x.coords()) y.push_back(c * inv);
    } else {
        if (x[0].is_zero()) return {std::nullopt, digit};
        Element inv = x[0].inverse();
        for (std::size_t k = 1; k < j; ++k) y.push_back(x[k] * inv);
        y.push_back(top * inv);
        for (std::size_t k = j; k < n; ++k) y.push_back(x[k] * inv);
    }
    return {PointB(std::move(y)), digit};
}

/// The inverse branch V(j): the unique x in B(j) with T x = y.
inline PointB ssa_inverse_branch(const PointB& y, std::size_t j) {
    const std::size_t n = y.dim();
    if (j > n) throw DomainError("SSA digit out of range");
    const Element one(y.field(), Rational(1));
    auto coord = [&](std::size_t k) -> const Element& { return k == 0 ? one : y[k - 1]; };  // 1-based, y_0 = 1
    std::vector<Element> x;
    if (j == 0) {
        Element inv = (1 + coord(n)).inverse();
        for (std::size_t k = 1; k <= n; ++k) x.push_back(coord(k) * inv);
    } else {
        Element den = (j < n ? coord(j) : coord(n - 1)) + coord(n);
        if (den.is_zero()) throw ZeroDivisionError("SSA inverse branch divisor vanishes");
        Element inv = den.inverse();
        x.push_back(inv);
        for (std::size_t k = 2; k <= j; ++k) x.push_back(coord(k - 1) * inv);
        for (std::size_t k = j + 1; k <= n; ++k) x.push_back(coord(k) * inv);
    }
    if (auto why = PointB::ordering_violation(x); !why.empty())
        throw DomainError("y is not in T B(" + std::to_string(j) + "): " + why);
    PointB result(std::move(x));
    if (detail::ssa_index(result) != j) throw DomainError("preimage lies outside B(" + std::to_string(j) + ")");
    return result;
}

/// x in D = {x_{n-1} + x_n >= 1}.
inline bool in_absorbing_set(const PointB& x) {
    if (x.dim() < 2) throw DomainError("absorbing set needs n >= 2");
    return x[x.dim() - 2] + x[x.dim() - 1] >= Rational(1);
}

// ---------------------------------------------------------------------------
// Multiplicative algorithm

/// k with 1/(k+1) < x_n <= 1/k; empty when x_n = 0.
inline std::optional<Digit> msa_digit(const PointB& x) {
    const Element& last = x[x.dim() - 1];
    if (last.is_zero()) return std::nullopt;
    return Digit{Algorithm::msa, last.inverse().floor()};
}

/// S restricted to B(k), applied with the given k regardless of the cell x lies in.
inline PointB msa_apply_branch(const PointB& x, const Integer& k) {
    const std::size_t n = x.dim();
    if (x[0].is_zero()) throw ZeroDivisionError("MSA branch with x_1 = 0");
    Element inv = x[0].inverse();
    std::vector<Element> y;
    for (std::size_t i = 1; i < n; ++i) y.push_back(x[i] * inv);
    y.push_back((1 - x[n - 1] * Rational(k)) * inv);
    return PointB(std::move(y));
}

inline StepOutcome msa_step(const PointB& x) {
    auto digit = msa_digit(x);
    if (!digit || x[0].is_zero()) return {std::nullopt, std::nullopt};
    return {msa_apply_branch(x, digit->value), digit};
}

/// x_1 = 1/(k y_{n-1} + y_n), x_i = y_{i-1}/(k y_{n-1} + y_n); the result must lie in B(k).
inline PointB msa_inverse_branch(const PointB& y, const Integer& k) {
    const std::size_t n = y.dim();
    if (k < 1) throw DomainError("MSA digit must be >= 1");
    Element prev = n >= 2 ? y[n - 2] : Element(y.field(), Rational(1));
    Element den = prev * Rational(k) + y[n - 1];
    if (den.is_zero()) throw ZeroDivisionError("MSA inverse branch divisor vanishes");
    Element inv = den.inverse();
    std::vector<Element> x{inv};
    for (std::size_t i = 1; i < n; ++i) x.push_back(y[i - 1] * inv);
    if (auto why = PointB::ordering_violation(x); !why.empty()) throw DomainError("preimage not in B^n: " + why);
    PointB result(std::move(x));
    auto d = msa_digit(result);
    if (!d || d->value != k) throw DomainError("preimage lies outside B(" + k.get_str() + ")");
    return result;
}

inline StepOutcome step(const PointB& x, Algorithm algo) { return algo == Algorithm::ssa ? ssa_step(x) : msa_step(x); }

/// Drops a vanishing last coordinate: the explicit reduction of a stopped MSA orbit to B^{n-1}.
inline PointB restrict_dimension(const PointB& x) {
    if (x.dim() < 2 || !x[x.dim() - 1].is_zero()) throw DomainError("restriction needs n >= 2 and x_n = 0");
    return PointB(std::vector<Element>(x.coords().begin(), x.coords().end() - 1));
}

}  // namespace selmer
