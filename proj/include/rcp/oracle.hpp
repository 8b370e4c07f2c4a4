#pragma once

#include "rcp/geometry.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace rcp {

struct Halfplane {
    Vec normal;      // unit; region is normal . (p - q - anchor) >= 0
    Point anchor;

    bool contains(Point p, Point q) const {
        Vec v = p - Point{q.x + anchor.x, q.y + anchor.y};
        return dot(normal, v) >= -kGeomEps;
    }
};

using Shape = std::variant<Wedge, CoWedge, Disc, PolygonWithHoles, Halfplane>;

/// Membership of p in the translate shape_q.
bool shape_contains(const Shape& s, Point p, Point q);

/// A query range: a base shape plus a translate parameter.
struct RangePredicate {
    Shape shape;
    Point q;

    bool contains(Point p) const { return shape_contains(shape, p, q); }
};

/// Brute-force ground truth used by every differential test.
std::vector<Point> points_in_range(const std::vector<Point>& pts, const RangePredicate& r);

/// Unique minimum-distance pair, or nothing when fewer than two points.
/// Throws on duplicate points.
std::optional<PointPair> closest_pair_brute(const std::vector<Point>& pts);

std::optional<PointPair> rcp_answer(const std::vector<Point>& pts, const RangePredicate& r);

}  // namespace rcp
