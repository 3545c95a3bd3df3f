#pragma once

#include <optional>
#include <vector>

#include "selmer/geometry.hpp"
#include "selmer/selmer_maps.hpp"

namespace selmer {

/// The 2n vertices of the MSA cell B(k) in B^n: for r = 1..n the point whose last r
/// coordinates are 1/k (others 1), followed by the same with 1/(k+1).
inline std::vector<std::vector<Rational>> msa_cylinder_vertices(const Integer& k, std::size_t n) {
    if (k < 1 || n < 1) throw DomainError("cylinder needs k >= 1 and n >= 1");
    const Rational a(1, k), b(1, Integer(k + 1));
    std::vector<std::vector<Rational>> out;
    for (std::size_t r = 1; r <= n; ++r) {
        for (const Rational& v : {a, b}) {
            std::vector<Rational> p(n, Rational(1));
            for (std::size_t i = n - r; i < n; ++i) p[i] = v;
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Vertices of S B(k) for n = 2: (1/k, 0), (1/(k+1), 1/(k+1)), (1, 0), (1, 1).
inline std::vector<Point2> msa_cylinder_image_vertices(const Integer& k, std::size_t n = 2) {
    if (n != 2) throw DomainError("cylinder images are only tabulated for n = 2");
    if (k < 1) throw DomainError("cylinder needs k >= 1");
    const Rational a(1, k), b(1, Integer(k + 1));
    return {{a, 0}, {b, b}, {1, 0}, {1, 1}};
}

inline ConvexPolygon msa_cell_polygon(const Integer& k) {
    std::vector<Point2> v;
    for (const auto& p : msa_cylinder_vertices(k, 2)) v.push_back({p[0], p[1]});
    return ConvexPolygon(std::move(v));
}

inline ConvexPolygon msa_image_polygon(const Integer& k) { return ConvexPolygon(msa_cylinder_image_vertices(k)); }

/// A point of S B(k+1) outside S B(k), or empty if none was found.
inline std::optional<Point2> image_nesting_witness(const Integer& k) {
    const ConvexPolygon inner = msa_image_polygon(k), outer = msa_image_polygon(k + 1);
    // the difference region is bounded by the two left edges
    const Rational a(1, k), b(1, Integer(k + 1)), c(1, Integer(k + 2));
    ConvexPolygon gap({{b, 0}, {a, 0}, {b, b}, {c, c}});
    std::vector<Point2> candidates{gap.vertex_centroid()};
    for (const auto& v : gap.vertices()) candidates.push_back(v);
    for (const auto& p : candidates)
        if (outer.contains(p) && !inner.contains(p)) return p;
    return std::nullopt;
}

struct NotUnionWitness {
    Integer cell;    // j with B(j) meeting S B(k) without being contained in it
    Point2 inside;   // in B(j) and in the interior of S B(k)
    Point2 outside;  // in B(j) and outside the closed S B(k)
};

/// Shows S B(k) is not a union of rank-1 cells by exhibiting a cell split by its boundary.
inline std::optional<NotUnionWitness> image_not_union_witness(const Integer& k, long grid = 8) {
    const ConvexPolygon image = msa_image_polygon(k);
    for (Integer j = 1; j <= k + 2; ++j) {
        const ConvexPolygon cell = msa_cell_polygon(j);
        const auto& verts = cell.vertices();
        // centroid, edge midpoints and interior convex combinations of the vertices
        std::vector<Point2> candidates{cell.vertex_centroid()};
        for (std::size_t t = 0; t < verts.size(); ++t) {
            const auto& P = verts[t];
            const auto& Q = verts[(t + 1) % verts.size()];
            candidates.push_back({(P.x + Q.x) / 2, (P.y + Q.y) / 2});
        }
        for (long u = 1; u < grid; ++u)
            for (long v = 1; u + v < grid; ++v) {
                const Rational wa(u, grid), wb(v, grid), wc = 1 - wa - wb;
                const auto& A = verts[0];
                const auto& B = verts[1 % verts.size()];
                for (std::size_t t = 2; t < verts.size(); ++t) {
                    const auto& C = verts[t];
                    candidates.push_back({wa * A.x + wb * B.x + wc * C.x, wa * A.y + wb * B.y + wc * C.y});
                }
            }
        std::optional<Point2> in, out;
        for (const auto& p : candidates) {
            if (!in && image.strictly_contains(p)) in = p;
            if (!out && !image.contains(p)) out = p;
        }
        if (in && out) return NotUnionWitness{j, *in, *out};
    }
    return std::nullopt;
}

}  // namespace selmer
