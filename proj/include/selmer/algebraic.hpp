#pragma once

#include "selmer/matrix.hpp"
#include "selmer/numfield.hpp"

namespace selmer {

/// Characteristic polynomial over Q of multiplication by a, a polynomial vanishing at a.
inline RatPoly field_char_poly(const Element& a) {
    const FieldPtr& f = a.field();
    const std::size_t d = f->degree();
    Matrix<Rational> m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> e(d, Rational(0));
        e[j] = 1;
        Element col = a * Element(f, e);
        for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coeffs()[i];
    }
    return characteristic_polynomial(m);
}

inline Element evaluate_at(const RatPoly& p, const Element& x) {
    Element acc(x.field());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace detail {
inline std::size_t root_slot(const Element& a, const std::vector<Interval>& roots) {
    for (std::size_t level = 0; level < 600; ++level) {
        Interval iv = a.enclosure_at_level(level);
        for (std::size_t r = 0; r < roots.size(); ++r)
            if (roots[r].lo < iv.lo && iv.hi < roots[r].hi) return r;
    }
    throw CertificationError("could not place element among isolated roots");
}
}  // namespace detail

/// Exact equality of the real embeddings of elements of possibly different fields.
inline bool same_real_number(const Element& a, const Element& b) {
    if (a.field()->same_as(*b.field())) return a == b;
    if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
    RatPoly p = squarefree_part(field_char_poly(a));
    if (!evaluate_at(p, b).is_zero()) return false;
    auto roots = isolate_real_roots(p);
    return detail::root_slot(a, roots) == detail::root_slot(b, roots);
}

}  // namespace selmer
