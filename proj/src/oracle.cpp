#include "rcp/oracle.hpp"

namespace rcp {

bool shape_contains(const Shape& s, Point p, Point q) {
    return std::visit([&](const auto& sh) { return sh.contains(p, q); }, s);
}

std::vector<Point> points_in_range(const std::vector<Point>& pts, const RangePredicate& r) {
    std::vector<Point> out;
    for (Point p : pts) {
        if (r.contains(p)) out.push_back(p);
    }
    return out;
}

std::optional<PointPair> closest_pair_brute(const std::vector<Point>& pts) {
    if (pts.size() < 2) return std::nullopt;
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d = dist2(pts[i], pts[j]);
            if (d <= kGeomEps * kGeomEps) {
                throw std::invalid_argument("closest_pair_brute: duplicate points");
            }
            if (d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    return PointPair(pts[bi], pts[bj]);
}

std::optional<PointPair> rcp_answer(const std::vector<Point>& pts, const RangePredicate& r) {
    return closest_pair_brute(points_in_range(pts, r));
}

}  // namespace rcp
