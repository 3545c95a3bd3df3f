#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "selmer/algebraic.hpp"
#include "selmer/convergents.hpp"
#include "selmer/factor.hpp"
#include "selmer/selmer_maps.hpp"

namespace selmer {

inline constexpr std::size_t kDefaultMaxSteps = 10000;

inline Rational default_precision() { return Rational(1) / pow_int(Integer(10), 30); }

/// states[i+1] = step(states[i]) with digits[i].
struct OrbitTrace {
    Algorithm algo = Algorithm::msa;
    std::vector<PointB> states;
    std::vector<Digit> digits;
    bool terminated = false;

    const PointB& start() const { return states.front(); }
};

inline OrbitTrace run_orbit(const PointB& x, Algorithm algo, std::size_t steps) {
    OrbitTrace t{algo, {x}, {}, false};
    for (std::size_t s = 0; s < steps; ++s) {
        StepOutcome o = step(t.states.back(), algo);
        if (o.terminated()) {
            t.terminated = true;
            break;
        }
        t.digits.push_back(*o.digit);
        t.states.push_back(std::move(*o.next));
    }
    return t;
}

enum class PeriodStatus { found, not_found, terminated };

inline std::string to_string(PeriodStatus s) {
    switch (s) {
        case PeriodStatus::found: return "found";
        case PeriodStatus::not_found: return "not_found";
        default: return "terminated";
    }
}

struct PeriodDetection {
    PeriodStatus status = PeriodStatus::not_found;
    std::size_t preperiod = 0;
    std::size_t period = 0;
    OrbitTrace trace;

    std::vector<Integer> digit_values(std::size_t from, std::size_t to) const {
        std::vector<Integer> v;
        for (std::size_t i = from; i < to; ++i) v.push_back(trace.digits[i].value);
        return v;
    }
    std::vector<Integer> preperiod_digits() const { return digit_values(0, preperiod); }
    std::vector<Integer> cycle_digits() const { return digit_values(preperiod, preperiod + period); }
    /// S^m x, the first point of the cycle.
    const PointB& cycle_start() const { return trace.states[preperiod]; }
};

/// First exact repeat T^{m+p} x = T^m x along the orbit; m and p are minimal.
inline PeriodDetection detect_period(const PointB& x, Algorithm algo, std::size_t max_steps = kDefaultMaxSteps) {
    PeriodDetection r;
    r.trace = OrbitTrace{algo, {x}, {}, false};
    std::unordered_map<PointB, std::size_t, PointHash> seen;
    seen.emplace(x, 0);
    for (std::size_t s = 0; s < max_steps; ++s) {
        StepOutcome o = step(r.trace.states.back(), algo);
        if (o.terminated()) {
            r.trace.terminated = true;
            r.status = PeriodStatus::terminated;
            return r;
        }
        r.trace.digits.push_back(*o.digit);
        r.trace.states.push_back(*o.next);
        auto [it, fresh] = seen.emplace(*o.next, s + 1);
        if (!fresh) {
            r.status = PeriodStatus::found;
            r.preperiod = it->second;
            r.period = s + 1 - it->second;
            return r;
        }
    }
    r.status = PeriodStatus::not_found;
    return r;
}

/// M = beta(k_1) ... beta(k_p) over one period.
inline IntMatrix periodicity_matrix(const std::vector<Integer>& cycle, std::size_t n) {
    return beta_product(cycle, n).matrix();
}

inline IntPoly char_poly(const IntMatrix& m) { return characteristic_polynomial(m); }

/// Power sums rho_0^k + ... + rho_n^k of the roots of a monic polynomial, k = 1..count, by Newton's identities.
inline std::vector<Integer> root_power_sums(const IntPoly& p, std::size_t count) {
    const std::size_t d = static_cast<std::size_t>(p.degree());
    // p = t^d + a_{d-1} t^{d-1} + ... ; e_k = (-1)^k a_{d-k}
    std::vector<Integer> sums;
    for (std::size_t k = 1; k <= count; ++k) {
        Integer s = 0;
        for (std::size_t i = 1; i < k && i <= d; ++i) s += p[d - i] * sums[k - i - 1];
        if (k <= d) s += Integer(static_cast<long>(k)) * p[d - k];
        sums.push_back(-s);
    }
    return sums;
}

struct DominanceError : Error {
    using Error::Error;
};

/// The Perron root of a characteristic polynomial with its certificate data.
struct DominantEigenvalue {
    IntPoly charpoly;
    RootFactor min_poly;              // irreducible factor of charpoly vanishing at rho0
    Interval interval;                // isolates rho0 among the roots of charpoly
    std::vector<Interval> real_roots;  // distinct real roots of charpoly, ascending
    double subdominant = 0;           // |rho_1|, largest modulus among the remaining roots
    bool subdominant_certified = false;
    Interval subdominant_interval;    // set when all roots are real

    FieldPtr field() const { return NumberField::create(min_poly.poly, interval); }
};

namespace detail {

/// All complex roots by Durand-Kerner; used only for reported moduli.
inline std::vector<std::complex<long double>> numeric_roots(const IntPoly& p) {
    const int d = p.degree();
    std::vector<long double> c(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)].get_d();
    std::vector<std::complex<long double>> z(static_cast<std::size_t>(d));
    const std::complex<long double> seed(0.4L, 0.9L);
    for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = std::pow(seed, i);
    auto eval = [&](std::complex<long double> x) {
        std::complex<long double> acc = 0;
        for (int i = d; i >= 0; --i) acc = acc * x + c[static_cast<std::size_t>(i)];
        return acc / c[static_cast<std::size_t>(d)];
    };
    for (int iter = 0; iter < 5000; ++iter) {
        long double change = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<long double> den = 1;
            for (int j = 0; j < d; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            if (std::abs(den) == 0) den = 1e-30L;
            std::complex<long double> delta = eval(z[static_cast<std::size_t>(i)]) / den;
            z[static_cast<std::size_t>(i)] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-18L) break;
    }
    return z;
}

/// Refines two isolating intervals of (different) roots until they are disjoint and ordered.
/// Returns -1 if the first root is smaller, +1 if larger.
inline int separate(const RatPoly& pa, Interval a, const RatPoly& pb, Interval b) {
    for (int iter = 0; iter < 4000; ++iter) {
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        a = refine_root(pa, a, a.width() / 2);
        b = refine_root(pb, b, b.width() / 2);
    }
    throw CertificationError("roots could not be separated within the refinement budget");
}

}  // namespace detail

/// Isolates the dominant root rho0 of a monic integer polynomial and certifies
/// rho0 > 1, rho0 simple, and rho0 > |rho| for every other complex root rho.
inline DominantEigenvalue dominant_eigenvalue(const IntPoly& charpoly) {
    if (charpoly.degree() < 1 || charpoly.leading() != 1) throw DomainError("expected a monic polynomial of degree >= 1");
    DominantEigenvalue out;
    out.charpoly = charpoly;
    const RatPoly p = to_rational(charpoly);
    const RatPoly sf = squarefree_part(p);
    out.real_roots = isolate_real_roots(sf);
    if (out.real_roots.empty()) throw DominanceError("no real root");
    out.interval = out.real_roots.back();

    // simplicity: rho0 must not be a root of gcd(p, p')
    const RatPoly repeated = gcd(p, p.derivative());
    if (repeated.degree() > 0 && count_roots_in(repeated, out.interval) > 0) throw DominanceError("rho0 is a multiple root");

    // rho0 > 1
    if (sf.sign_at(Rational(1)) == 0 && out.interval.contains(Rational(1))) throw DominanceError("rho0 = 1");
    if (SturmChain(sf).count(Rational(1), cauchy_bound(sf)) == 0) throw DominanceError("rho0 <= 1");

    // real roots: no root at -rho0, and every root r satisfies r > -rho0
    const RatPoly mirror = gcd(sf, sf.reflected());
    if (mirror.degree() > 0 && count_roots_in(mirror, out.interval) > 0) throw DominanceError("-rho0 is also a root");
    const RatPoly refl = sf.reflected();
    for (std::size_t r = 0; r + 1 < out.real_roots.size(); ++r) {
        const Interval& iv = out.real_roots[r];
        if (iv.hi <= 0) {
            // compare -r with rho0: -r is a root of sf(-t) in (-hi, -lo)
            Interval neg(-iv.hi, -iv.lo);
            if (detail::separate(refl, neg, sf, out.interval) > 0) throw DominanceError("a negative root exceeds rho0 in modulus");
        } else if (iv.lo < 0) {
            // straddles zero: shrink until its sign is known, then test as above
            Interval cur = iv;
            while (cur.lo < 0 && cur.hi > 0) {
                if (sf.sign_at(Rational(0)) == 0) break;  // root is 0 itself
                cur = refine_root(sf, cur, cur.width() / 2);
            }
            if (cur.hi <= 0 && cur.lo < 0) {
                Interval neg(-cur.hi, -cur.lo);
                if (detail::separate(refl, neg, sf, out.interval) > 0)
                    throw DominanceError("a negative root exceeds rho0 in modulus");
            }
        }
    }

    // complex roots: every real root of the exterior-square polynomial must stay below rho0^2
    const std::size_t d = static_cast<std::size_t>(sf.degree());
    if (out.real_roots.size() < d) {
        const RatPoly pairs = squarefree_part(characteristic_polynomial(exterior_square(companion(sf))));
        const auto pair_roots = isolate_real_roots(pairs);
        if (!pair_roots.empty()) {
            // rho0^2 is the root of sf(sqrt t); compare the largest pair root with it
            const RatPoly tie = gcd(sf, pairs.squared_argument());
            if (tie.degree() > 0 && count_roots_in(tie, out.interval) > 0)
                throw DominanceError("a complex root has modulus rho0");
            // u = rho0^2 is the unique root of q(u) = sf(sqrt u) sf(-sqrt u) ... compare via squares of rho0's interval
            Interval rho = out.interval;
            const Interval& top = pair_roots.back();
            Interval tp = top;
            for (int iter = 0;; ++iter) {
                if (iter > 4000) throw CertificationError("dominance not certifiable within refinement budget");
                Rational lo = rho.lo > 0 ? Rational(rho.lo * rho.lo) : Rational(0);
                Rational hi = rho.hi * rho.hi;
                if (tp.hi < lo) break;
                if (tp.lo > hi) throw DominanceError("a complex root exceeds rho0 in modulus");
                rho = refine_root(sf, rho, rho.width() / 2);
                tp = refine_root(pairs, tp, tp.width() / 2);
            }
        }
    }

    out.interval = refine_root(sf, out.interval, Rational(1) / pow_int(Integer(10), 24));
    out.min_poly = factor_containing_root(charpoly, out.interval);

    // subdominant modulus, certified when every root is real
    if (out.real_roots.size() == d) {
        if (d == 1) {
            out.subdominant = 0;
            out.subdominant_certified = true;
            out.subdominant_interval = Interval(Rational(0));
        } else {
            Interval best(Rational(0));
            for (std::size_t r = 0; r + 1 < out.real_roots.size(); ++r) {
                Interval iv = refine_root(sf, out.real_roots[r], Rational(1) / pow_int(Integer(10), 24));
                best = max(best, abs(iv));
            }
            out.subdominant_interval = best;
            out.subdominant = best.midpoint().get_d();
            out.subdominant_certified = true;
        }
    } else {
        auto z = detail::numeric_roots(to_integer_exact(sf));
        const long double rho0 = out.interval.midpoint().get_d();
        std::size_t drop = 0;
        for (std::size_t i = 1; i < z.size(); ++i)
            if (std::abs(z[i] - rho0) < std::abs(z[drop] - rho0)) drop = i;
        long double m = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (i != drop) m = std::max(m, std::abs(z[i]));
        out.subdominant = static_cast<double>(m);
    }
    return out;
}

/// Smallest e >= 1 with M^e entrywise positive, from the zero pattern of the powers.
inline std::size_t positive_power_exponent(const IntMatrix& m) {
    if (!m.square() || !m.all_nonnegative()) throw DomainError("expected a square nonnegative matrix");
    const std::size_t size = m.rows();
    const std::size_t n = size - 1;
    const std::size_t limit = 2 * (n * n + 1);
    std::vector<char> base(size * size), cur(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) base[i * size + j] = cur[i * size + j] = m(i, j) > 0;
    for (std::size_t e = 1; e <= limit; ++e) {
        if (std::all_of(cur.begin(), cur.end(), [](char c) { return c != 0; })) {
            if (n >= 1 && m(0, n - 1) >= 1 && m == beta_matrix(m(0, n - 1), n) && e > n * n + 1)
                throw CertificationError("beta(k) positivity exponent exceeds n^2 + 1");
            return e;
        }
        std::vector<char> next(size * size, 0);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t k = 0; k < size; ++k)
                if (cur[i * size + k])
                    for (std::size_t j = 0; j < size; ++j)
                        if (base[k * size + j]) next[i * size + j] = 1;
        cur = std::move(next);
    }
    throw DomainError("matrix is not primitive within 2(n^2+1) powers");
}

namespace detail {

inline PointB solve_eigenvector(const IntMatrix& m, const Element& rho) {
    const FieldPtr& f = rho.field();
    const std::size_t size = m.rows();
    const std::size_t n = size - 1;
    // (M - rho I) v = 0 with v_0 = 1: columns 1..n against the negated column 0
    std::vector<std::vector<Element>> a(size, std::vector<Element>(n + 1, Element(f)));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 1; j < size; ++j) {
            Element e(f, Rational(m(i, j)));
            if (i == j) e -= rho;
            a[i][j - 1] = e;
        }
        Element c(f, Rational(m(i, 0)));
        if (i == 0) c -= rho;
        a[i][n] = -c;
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < size && a[p][col].is_zero()) ++p;
        if (p == size) throw DomainError("eigenvalue is not simple or the eigenvector has v_0 = 0");
        std::swap(a[p], a[row]);
        Element inv = a[row][col].inverse();
        for (std::size_t j = col; j <= n; ++j) a[row][j] = a[row][j] * inv;
        for (std::size_t i = 0; i < size; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            Element factor = a[i][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= factor * a[row][j];
        }
        pivot_row[col] = row++;
    }
    for (std::size_t i = row; i < size; ++i)
        if (!a[i][n].is_zero()) throw DomainError("eigen system is inconsistent; rho is not an eigenvalue");
    std::vector<Element> v;
    for (std::size_t col = 0; col < n; ++col) v.push_back(a[pivot_row[col]][n]);
    return PointB(std::move(v));
}

}  // namespace detail

/// Solves M (1, x_1, ..., x_n)^T = rho0 (1, x_1, ..., x_n)^T exactly over Q(rho0).
/// A zero divisor met on an uncertified modulus splits it and the solve restarts on
/// the factor containing rho0; `dom` is updated accordingly.
inline PointB eigen_point(const IntMatrix& m, DominantEigenvalue& dom) {
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            FieldPtr f = dom.field();
            return detail::solve_eigenvector(m, Element::generator(f));
        } catch (const ZeroDivisorError& e) {
            RatPoly mp = to_rational(dom.min_poly.poly);
            RatPoly g = monic(e.factor);
            RatPoly cof = monic(exact_quotient(mp, g));
            dom.min_poly.poly = to_integer_exact(count_roots_in(g, dom.interval) == 1 ? g : cof);
        }
    }
    throw CertificationError("eigen point: modulus splitting did not converge");
}

inline PointB eigen_point(const IntMatrix& m, const DominantEigenvalue& dom) {
    DominantEigenvalue copy = dom;
    return eigen_point(m, copy);
}

/// True when x is purely periodic under the MSA with exactly the given cycle of digits.
inline bool verify_cycle(const PointB& x, const std::vector<Integer>& cycle) {
    PointB y = x;
    for (const auto& k : cycle) {
        StepOutcome o = msa_step(y);
        if (o.terminated() || o.digit->value != k) return false;
        y = *o.next;
    }
    return y == x;
}

/// Digits of an eventually periodic expansion, extended to `count` entries.
inline std::vector<Integer> expansion_digits(const std::vector<Integer>& preperiod, const std::vector<Integer>& cycle,
                                             std::size_t count) {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < count; ++i)
        d.push_back(i < preperiod.size() ? preperiod[i] : cycle[(i - preperiod.size()) % cycle.size()]);
    return d;
}

struct MsaAnalysis {
    IntMatrix matrix;
    IntPoly charpoly;
    std::optional<DominantEigenvalue> dominant;
    std::optional<PointB> eigen_point;
    std::optional<std::size_t> positivity_exponent;
    bool cycle_verified = false;     // eigen point reproduces the cycle digits
    bool matches_orbit = false;      // eigen point equals S^m x as real numbers
    std::vector<std::string> diagnostics;
};

struct PeriodReport {
    Algorithm algo = Algorithm::msa;
    PeriodStatus status = PeriodStatus::not_found;
    std::size_t preperiod = 0;
    std::size_t period = 0;
    std::size_t steps = 0;
    std::vector<Integer> digits;  // preperiod digits followed by one cycle
    std::optional<MsaAnalysis> msa;
};

/// Periodicity matrix analysis of a detected MSA cycle.
inline MsaAnalysis analyze_msa_cycle(const std::vector<Integer>& cycle, std::size_t n, const PointB* cycle_point = nullptr) {
    MsaAnalysis a;
    a.matrix = periodicity_matrix(cycle, n);
    a.charpoly = char_poly(a.matrix);
    try {
        a.positivity_exponent = positive_power_exponent(a.matrix);
    } catch (const Error& e) {
        a.diagnostics.emplace_back(std::string("positivity: ") + e.what());
    }
    try {
        DominantEigenvalue dom = dominant_eigenvalue(a.charpoly);
        a.eigen_point = eigen_point(a.matrix, dom);
        a.dominant = dom;
        a.cycle_verified = verify_cycle(*a.eigen_point, cycle);
        if (!a.cycle_verified) a.diagnostics.emplace_back("eigen point does not reproduce the cycle digits");
        if (cycle_point) {
            a.matches_orbit = true;
            for (std::size_t i = 0; i < n; ++i)
                a.matches_orbit = a.matches_orbit && same_real_number((*a.eigen_point)[i], (*cycle_point)[i]);
            if (!a.matches_orbit) a.diagnostics.emplace_back("eigen point differs from the orbit point");
        }
    } catch (const Error& e) {
        a.diagnostics.emplace_back(std::string("eigenvalue: ") + e.what());
    }
    return a;
}

inline PeriodReport make_report(const PeriodDetection& det) {
    PeriodReport r;
    r.algo = det.trace.algo;
    r.status = det.status;
    r.preperiod = det.preperiod;
    r.period = det.period;
    r.steps = det.trace.digits.size();
    if (det.status != PeriodStatus::found) {
        for (const auto& d : det.trace.digits) r.digits.push_back(d.value);
        return r;
    }
    r.digits = det.digit_values(0, det.preperiod + det.period);
    if (r.algo == Algorithm::msa) r.msa = analyze_msa_cycle(det.cycle_digits(), det.trace.start().dim(), &det.cycle_start());
    return r;
}

// ---------------------------------------------------------------------------
// Convergence diagnostics

struct ConvergenceRow {
    std::size_t s = 0;
    long label = 0;           // the column holds B^(label)
    bool degenerate = true;   // B_0 = 0 or s = 0
    std::vector<Interval> errors;
    Interval max_error;
};

struct ConvergenceReport {
    std::size_t column = 0;
    std::vector<ConvergenceRow> rows;
    std::size_t window_from = 0, window_to = 0;
    std::optional<Interval> envelope_ratio;  // certified ((E(to)/E(from))^(1/(to-from)))
    bool envelope_decreasing = false;
};

/// Rational interval [lo, hi] with lo^m <= z <= hi^m for z >= 0.
inline Interval nth_root_enclosure(const Rational& z, unsigned m, int bisections = 80) {
    if (z < 0) throw DomainError("root of a negative number");
    Rational lo = 0, hi = std::max(Rational(1), z);
    for (int i = 0; i < bisections; ++i) {
        Rational mid = (lo + hi) / 2;
        if (pow_rational(mid, m) <= z)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

/// Certified errors max_i |B_i/B_0 - x_i| of matrix column g of beta^(s), s = 0..s_max.
inline ConvergenceReport convergence_report(const PointB& x, const std::vector<Integer>& digits, std::size_t s_max,
                                            std::size_t g, const Rational& precision = default_precision(),
                                            std::optional<std::pair<std::size_t, std::size_t>> window = std::nullopt) {
    const std::size_t n = x.dim();
    if (g > n) throw DomainError("column index out of range");
    if (digits.size() < s_max) throw DomainError("not enough digits for the requested range");
    std::vector<Interval> xs;
    for (const auto& c : x.coords()) xs.push_back(c.enclosure(precision));

    ConvergenceReport rep;
    rep.column = g;
    ConvergentState st(n);
    for (std::size_t s = 0; s <= s_max; ++s) {
        if (s > 0) st = recursion_extend(st, digits[s - 1]);
        ConvergenceRow row;
        row.s = s;
        row.label = st.column_label(g);
        const IntMatrix& m = st.matrix();
        if (s > 0 && m(0, g) != 0) {
            row.degenerate = false;
            row.max_error = Interval(Rational(0));
            for (std::size_t i = 1; i <= n; ++i) {
                Rational r = make_rational(m(i, g), m(0, g));
                Interval e = abs(r + (-xs[i - 1]));
                row.errors.push_back(e);
                row.max_error = max(row.max_error, e);
            }
        }
        rep.rows.push_back(std::move(row));
    }

    auto [from, to] = window.value_or(std::pair<std::size_t, std::size_t>{s_max / 2, s_max});
    rep.window_from = from;
    rep.window_to = to;
    if (from < to && to <= s_max) {
        // E(s) = max over t in [s, s_max] of the error, as an enclosure
        auto envelope = [&](std::size_t s) -> std::optional<Interval> {
            std::optional<Interval> e;
            for (std::size_t t = s; t <= s_max; ++t) {
                if (rep.rows[t].degenerate) return std::nullopt;
                e = e ? max(*e, rep.rows[t].max_error) : rep.rows[t].max_error;
            }
            return e;
        };
        auto ea = envelope(from), eb = envelope(to);
        if (ea && eb && ea->lo > 0 && eb->lo > 0) {
            const unsigned m = static_cast<unsigned>(to - from);
            Interval qlo = nth_root_enclosure(eb->lo / ea->hi, m);
            Interval qhi = nth_root_enclosure(eb->hi / ea->lo, m);
            rep.envelope_ratio = Interval(qlo.lo, qhi.hi);
            rep.envelope_decreasing = eb->hi < ea->lo && rep.envelope_ratio->hi < 1;
        }
    }
    return rep;
}

struct ApproximationRow {
    std::size_t g = 0;    // period multiple
    std::size_t j = 0;    // offset within the period
    std::size_t i = 0;    // coordinate, 1..n
    Interval error;       // |B_0^(pg+j) x_i - B_i^(pg+j)|
    double scaled = 0;    // error / |rho_1|^g
};

struct ApproximationReport {
    double rho1 = 0;
    double epsilon = 0;
    std::vector<ApproximationRow> rows;
    std::vector<double> envelope_constant;  // per i: max_g e_i(g) / |rho_1 (1+eps)|^g at j = 0
    std::vector<double> residuals;          // per row with j = 0: c |rho_1(1+eps)|^g - e_i(g) >= 0
    double lower_evidence = 0;              // max over (i, j) of e/|rho_1|^g across the upper half of g
    std::size_t witness_i = 0, witness_j = 0;
};

/// e_i(g) = |B_0^(pg+j) x_i - B_i^(pg+j)| for a purely periodic point x with the given cycle.
inline ApproximationReport approximation_report(const PointB& x, const std::vector<Integer>& cycle, std::size_t g_max,
                                                double rho1, double epsilon = 0,
                                                const Rational& precision = default_precision()) {
    const std::size_t n = x.dim();
    const std::size_t p = cycle.size();
    if (p == 0) throw DomainError("empty cycle");
    std::vector<Interval> xs;
    for (const auto& c : x.coords()) xs.push_back(c.enclosure(precision));

    ApproximationReport rep;
    rep.rho1 = rho1;
    rep.epsilon = epsilon;
    rep.envelope_constant.assign(n, 0.0);
    const double base = std::abs(rho1) * (1 + epsilon);
    ConvergentState st(n);
    const std::size_t total = p * g_max + p - 1;
    for (std::size_t s = 0; s <= total; ++s) {
        if (s > 0) st = recursion_extend(st, cycle[(s - 1) % p]);
        const std::size_t g = s / p, j = s % p;
        if (g > g_max) break;
        const std::vector<Integer> col = st.latest_column();
        for (std::size_t i = 1; i <= n; ++i) {
            ApproximationRow row;
            row.g = g;
            row.j = j;
            row.i = i;
            row.error = abs(Rational(col[0]) * xs[i - 1] + Interval(Rational(-col[i])));
            const double e = row.error.hi.get_d();
            const double pw = std::pow(std::abs(rho1), static_cast<double>(g));
            row.scaled = pw > 0 ? e / pw : 0;
            if (j == 0) {
                const double bound = std::pow(base, static_cast<double>(g));
                if (bound > 0) rep.envelope_constant[i - 1] = std::max(rep.envelope_constant[i - 1], e / bound);
            }
            if (2 * g >= g_max && row.scaled > rep.lower_evidence) {
                rep.lower_evidence = row.scaled;
                rep.witness_i = i;
                rep.witness_j = j;
            }
            rep.rows.push_back(row);
        }
    }
    for (const auto& row : rep.rows)
        if (row.j == 0)
            rep.residuals.push_back(rep.envelope_constant[row.i - 1] * std::pow(base, static_cast<double>(row.g)) -
                                    row.error.hi.get_d());
    return rep;
}

}  // namespace selmer
