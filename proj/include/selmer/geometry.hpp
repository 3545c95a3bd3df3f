#pragma once

#include <algorithm>
#include <vector>

#include "selmer/rational.hpp"

namespace selmer {

struct Point2 {
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Twice the signed area of (a, b, c); positive for a counter-clockwise turn.
inline Rational orientation(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Exact convex polygon, vertices counter-clockwise without repeats or collinear points.
/// Degenerate inputs collapse to a segment (2 vertices) or a point (1 vertex).
class ConvexPolygon {
public:
    explicit ConvexPolygon(std::vector<Point2> pts) {
        std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3) {
            hull_ = pts;
            return;
        }
        std::vector<Point2> h(2 * pts.size());
        std::size_t k = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (k >= 2 && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            while (k >= t && orientation(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
            h[k++] = pts[i];
        }
        h.resize(k - 1);
        hull_ = std::move(h);
    }

    const std::vector<Point2>& vertices() const { return hull_; }

    /// Closed containment.
    bool contains(const Point2& p) const {
        if (hull_.size() == 1) return p == hull_[0];
        if (hull_.size() == 2) {
            const auto& a = hull_[0];
            const auto& b = hull_[1];
            return orientation(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
                   std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
        }
        for (std::size_t i = 0; i < hull_.size(); ++i)
            if (orientation(hull_[i], hull_[(i + 1) % hull_.size()], p) < 0) return false;
        return true;
    }

    bool strictly_contains(const Point2& p) const {
        if (hull_.size() < 3) return false;
        for (std::size_t i = 0; i < hull_.size(); ++i)
            if (orientation(hull_[i], hull_[(i + 1) % hull_.size()], p) <= 0) return false;
        return true;
    }

    /// inner is a subset of this polygon (both convex).
    bool contains(const ConvexPolygon& inner) const {
        return std::all_of(inner.hull_.begin(), inner.hull_.end(), [&](const Point2& v) { return contains(v); });
    }

    Point2 vertex_centroid() const {
        Rational sx = 0, sy = 0;
        for (const auto& v : hull_) {
            sx += v.x;
            sy += v.y;
        }
        return {sx / static_cast<long>(hull_.size()), sy / static_cast<long>(hull_.size())};
    }

private:
    std::vector<Point2> hull_;
};

}  // namespace selmer
