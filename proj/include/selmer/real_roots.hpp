#pragma once

#include <algorithm>
#include <vector>

#include "selmer/polynomial.hpp"

namespace selmer {

/// Sturm sequence of a polynomial over Q; counts distinct real roots in half-open intervals.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& p) {
        if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
        chain_.push_back(p);
        if (p.degree() == 0) return;
        chain_.push_back(p.derivative());
        while (true) {
            RatPoly r = chain_[chain_.size() - 2] % chain_.back();
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }

    int variations(const Rational& x) const {
        int count = 0, prev = 0;
        for (const auto& q : chain_) {
            int s = q.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    /// Number of distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

    const RatPoly& polynomial() const { return chain_.front(); }

private:
    std::vector<RatPoly> chain_;
};

/// Every real root of p lies strictly inside (-B, B).
inline Rational cauchy_bound(const RatPoly& p) {
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p[static_cast<std::size_t>(i)] / p.leading())));
    return m + 1;
}

/// Sorted isolating intervals (lo, hi) of the distinct real roots of p.
/// Each interval holds exactly one root and p is nonzero at both endpoints.
inline std::vector<Interval> isolate_real_roots(const RatPoly& p) {
    if (p.degree() <= 0) return {};
    RatPoly sf = squarefree_part(p);
    SturmChain sturm(sf);
    Rational bound = cauchy_bound(sf);
    std::vector<Interval> out;
    struct Task {
        Rational a, b;
    };
    std::vector<Task> stack{{-bound, bound}};
    while (!stack.empty()) {
        Task t = stack.back();
        stack.pop_back();
        int n = sturm.count(t.a, t.b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(t.a, t.b);
            continue;
        }
        Rational w = t.b - t.a;
        Rational m = (t.a + t.b) / 2;
        for (long k = 7; sf.sign_at(m) == 0; ++k) m = t.a + w * Rational(k / 2, k);
        stack.push_back({m, t.b});
        stack.push_back({t.a, m});
    }
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return out;
}

/// Shrinks an isolating interval of a simple root of squarefree p below the given width.
inline Interval refine_root(const RatPoly& p, Interval iv, const Rational& width, long* bisections = nullptr) {
    int s_lo = p.sign_at(iv.lo);
    if (s_lo == 0 || p.sign_at(iv.hi) == 0 || s_lo == p.sign_at(iv.hi))
        throw DomainError("interval does not bracket a simple root");
    while (iv.width() > width) {
        Rational m = iv.midpoint();
        int s = p.sign_at(m);
        if (bisections) ++*bisections;
        if (s == 0) {
            Rational half = width / 4;
            return {m - half, m + half};
        }
        if (s == s_lo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

/// Number of distinct roots of p in the open interval (lo, hi), endpoints assumed non-roots.
inline int count_roots_in(const RatPoly& p, const Interval& iv) {
    if (p.degree() <= 0) return 0;
    return SturmChain(squarefree_part(p)).count(iv.lo, iv.hi);
}

}  // namespace selmer
