#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "selmer/real_roots.hpp"

namespace selmer {

namespace detail {

/// Positive divisors of |v| (v != 0), or empty when |v| is not fully factored
/// by trial division up to `trial_limit` and a primality test on the cofactor.
inline std::optional<std::vector<Integer>> positive_divisors(Integer v, unsigned long trial_limit = 1000000) {
    v = abs(v);
    std::vector<std::pair<Integer, unsigned>> primes;
    for (unsigned long p = 2; p <= trial_limit && Integer(p) * p <= v; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            ++e;
        }
        if (e) primes.emplace_back(Integer(p), e);
    }
    if (v > 1) {
        if (Integer(trial_limit) * trial_limit < v && mpz_probab_prime_p(v.get_mpz_t(), 30) == 0) return std::nullopt;
        primes.emplace_back(v, 1);
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

/// Monic integer polynomial of degree < d through (xs[i], vs[i]), or empty if not integral.
inline std::optional<IntPoly> interpolate_integral(const std::vector<Integer>& xs, const std::vector<Integer>& vs) {
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rational(vs[i]));
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * RatPoly({Rational(-xs[j]), Rational(1)});
            basis = Rational(1) / Rational(xs[i] - xs[j]) * basis;
        }
        acc += basis;
    }
    for (const auto& c : acc.coeffs())
        if (!is_integral(c)) return std::nullopt;
    return to_integer_exact(acc);
}

enum class SearchResult { found, none, budget_exceeded };

/// Kronecker search for a monic factor of degree d of the monic integer polynomial f.
inline SearchResult kronecker_factor(const IntPoly& f, int d, IntPoly& factor, std::size_t budget) {
    // candidate evaluation points 0, 1, -1, 2, -2, ...
    struct Sample {
        Integer x;
        std::vector<Integer> divisors;
    };
    std::vector<Sample> samples;
    for (long t = 0; samples.size() < static_cast<std::size_t>(d) + 4 && t < 64; ++t) {
        Integer x = (t % 2 == 0) ? Integer(t / 2) : Integer(-(t + 1) / 2);
        Integer v = f.evaluate(x);
        if (v == 0) {
            if (d == 1) {
                factor = IntPoly({Integer(-x), Integer(1)});
                return SearchResult::found;
            }
            continue;
        }
        auto divs = positive_divisors(v);
        if (!divs) continue;
        samples.push_back({x, *divs});
    }
    if (samples.size() < static_cast<std::size_t>(d)) return SearchResult::budget_exceeded;
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) { return a.divisors.size() < b.divisors.size(); });
    samples.resize(static_cast<std::size_t>(d));

    double combos = 1;
    for (const auto& s : samples) combos *= 2.0 * static_cast<double>(s.divisors.size());
    if (combos > static_cast<double>(budget)) return SearchResult::budget_exceeded;

    std::vector<Integer> xs, xd;
    for (const auto& s : samples) {
        xs.push_back(s.x);
        xd.push_back(pow_int(s.x, static_cast<unsigned long>(d)));
    }
    const RatPoly fr = to_rational(f);
    std::vector<std::size_t> idx(samples.size(), 0);
    while (true) {
        std::vector<Integer> vs;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const std::size_t m = samples[i].divisors.size();
            Integer v = samples[i].divisors[idx[i] % m];
            if (idx[i] >= m) v = -v;
            vs.push_back(v - xd[i]);
        }
        if (auto low = interpolate_integral(xs, vs)) {
            IntPoly h = *low + IntPoly::monomial(Integer(1), static_cast<std::size_t>(d));
            if (h.degree() == d && (fr % to_rational(h)).is_zero()) {
                factor = h;
                return SearchResult::found;
            }
        }
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
            if (++idx[i] < 2 * samples[i].divisors.size()) break;
            idx[i] = 0;
        }
        if (i == idx.size()) break;
    }
    return SearchResult::none;
}

}  // namespace detail

struct RootFactor {
    IntPoly poly;             // monic, squarefree, contains the marked root
    bool certified = false;  // irreducibility proven by exhaustive search
};

/// The irreducible factor of a monic integer polynomial that vanishes at the root isolated by `root`.
/// Factors are searched by Kronecker's method; when a search exceeds the budget the result is
/// still a factor containing the root but is reported as uncertified.
inline RootFactor factor_containing_root(const IntPoly& f, const Interval& root, std::size_t budget = 200000) {
    IntPoly g = to_integer_exact(squarefree_part(to_rational(f)));
    if (g.leading() != 1) throw DomainError("factor search needs a monic polynomial");
    bool certified = true;
    int d = 1;
    while (2 * d <= g.degree()) {
        IntPoly h;
        auto r = detail::kronecker_factor(g, d, h, budget);
        if (r == detail::SearchResult::found) {
            IntPoly cof = to_integer_exact(exact_quotient(to_rational(g), to_rational(h)));
            g = count_roots_in(to_rational(h), root) == 1 ? h : cof;
            d = 1;
            certified = true;
            continue;
        }
        if (r == detail::SearchResult::budget_exceeded) certified = false;
        ++d;
    }
    return {g, certified};
}

}  // namespace selmer
