#include "rcp/wedge_rcp.hpp"

#include <algorithm>
#include <map>

namespace rcp {

namespace {

// One overlaid corner's drawn edges: a vertical drop at x from y down to
// v_end, and a horizontal run at y from x left to h_end. Later stop points
// subdivide them.
struct CornerEdges {
    Point corner;
    double v_end = 0.0, h_end = 0.0;
    std::vector<double> v_splits;  // y values on the vertical edge
    std::vector<double> h_splits;  // x values on the horizontal edge
};

}  // namespace

WedgeRcpStructure WedgeRcpStructure::build(const std::vector<Point>& pts, const Wedge& w,
                                           const EnumerationLimits& lim) {
    WedgeRcpStructure st;
    st.w_ = w;
    st.f_ = wedge_to_quadrant_map(w);
    st.phi_ = wedge_candidates(pts, w, lim);
    const std::size_t m = st.phi_.pairs.size();
    if (m == 0) return st;

    // Dominance corners in quadrant coordinates, in length order.
    std::vector<Point> corners(m);
    for (std::size_t i = 0; i < m; ++i) {
        Point ua = st.f_.apply(st.phi_.pairs[i].pair.a);
        Point ub = st.f_.apply(st.phi_.pairs[i].pair.b);
        corners[i] = {std::min(ua.x, ub.x), std::min(ua.y, ub.y)};
    }

    double lox = corners[0].x, hix = corners[0].x, loy = corners[0].y, hiy = corners[0].y;
    for (Point c : corners) {
        lox = std::min(lox, c.x); hix = std::max(hix, c.x);
        loy = std::min(loy, c.y); hiy = std::max(hiy, c.y);
    }
    double pad = std::max({hix - lox, hiy - loy, 1.0}) + 1.0;
    const double clip_lo_x = lox - pad, clip_lo_y = loy - pad;
    st.clamp_lo_ = {lox - pad / 2, loy - pad / 2};
    st.clamp_hi_ = {hix + pad / 2, hiy + pad / 2};

    // Incremental union of southwest quadrants. The staircase holds the
    // maximal corners, x ascending and y descending, mapped to edge records.
    std::map<double, std::pair<double, int>> stair;  // x -> (y, record id)
    std::vector<CornerEdges> records;
    std::size_t kept = 0;

    for (std::size_t i = 0; i < m; ++i) {
        Point c = corners[i];
        auto it = stair.lower_bound(c.x);
        if (it != stair.end() && it->second.first >= c.y) continue;  // dominated: empty face
        ++kept;
        // Remove corners dominated by c; the survivor to the left clips the
        // horizontal ray. An erased corner at exactly c's height stops the ray
        // at that existing vertex instead (corners inherit point coordinates,
        // so equal heights are routine for pairs sharing a point).
        bool touch_left = false;
        double touch_x = 0.0;
        while (it != stair.begin()) {
            auto prev = std::prev(it);
            if (prev->second.first <= c.y) {
                if (prev->second.first == c.y) {
                    touch_left = true;
                    touch_x = prev->first;
                }
                it = stair.erase(prev);
            } else {
                break;
            }
        }
        CornerEdges rec;
        rec.corner = c;
        std::size_t step_crossings = 0;
        if (touch_left) {
            rec.h_end = touch_x;
        } else if (it != stair.begin()) {
            auto prev = std::prev(it);
            rec.h_end = prev->first;
            records[static_cast<std::size_t>(prev->second.second)].v_splits.push_back(c.y);
            ++step_crossings;
        } else {
            rec.h_end = clip_lo_x;
        }
        // First surviving corner to the right clips the vertical ray.
        auto right = stair.lower_bound(c.x);
        if (right != stair.end()) {
            rec.v_end = right->second.first;
            // A clip landing exactly on the old corner reuses that vertex.
            if (c.x != right->first) {
                records[static_cast<std::size_t>(right->second.second)].h_splits.push_back(c.x);
                ++step_crossings;
            }
        } else {
            rec.v_end = clip_lo_y;
        }
        st.crossings_ += step_crossings;
        st.max_step_crossings_ = std::max(st.max_step_crossings_, step_crossings);
        records.push_back(rec);
        stair[c.x] = {c.y, static_cast<int>(records.size()) - 1};
    }

    // Fragments: drawn edges split at the registered stop points. Stops that
    // land on an existing vertex (shared-coordinate corners) are not splits.
    std::size_t stops = 0;
    auto clean_splits = [](std::vector<double>& v, double lo, double hi) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::erase_if(v, [&](double t) { return t <= lo || t >= hi; });
    };
    std::vector<CurveFragment> frags;
    for (auto& rec : records) {
        clean_splits(rec.v_splits, rec.v_end, rec.corner.y);
        stops += rec.v_splits.size();
        double y0 = rec.v_end;
        for (double ys : rec.v_splits) {
            frags.push_back(CurveFragment::segment({rec.corner.x, y0}, {rec.corner.x, ys}));
            y0 = ys;
        }
        frags.push_back(CurveFragment::segment({rec.corner.x, y0}, rec.corner));
        clean_splits(rec.h_splits, rec.h_end, rec.corner.x);
        stops += rec.h_splits.size();
        double x0 = rec.h_end;
        for (double xsv : rec.h_splits) {
            frags.push_back(CurveFragment::segment({x0, rec.corner.y}, {xsv, rec.corner.y}));
            x0 = xsv;
        }
        frags.push_back(CurveFragment::segment({x0, rec.corner.y}, rec.corner));
    }
    st.vertex_count_ = kept + stops;
    st.fragments_ = frags.size();

    // Face labels: smallest candidate index whose corner dominates the sample,
    // with the final staircase as a fast emptiness filter.
    auto in_union = [&stair](Point s) {
        auto it = stair.lower_bound(s.x);
        return it != stair.end() && it->second.first >= s.y;
    };
    auto face_label = [&](Point s) -> int {
        if (!in_union(s)) return 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (corners[i].x >= s.x && corners[i].y >= s.y) return static_cast<int>(i) + 1;
        }
        return 0;
    };
    st.loc_ = Locator::build(frags, face_label, /*seed=*/20240517u, /*validate_crossings=*/0);
    st.has_structure_ = true;
    return st;
}

std::optional<PointPair> WedgeRcpStructure::query(Point q) const {
    return query_with_depth(q).first;
}

std::pair<std::optional<PointPair>, int> WedgeRcpStructure::query_with_depth(Point q) const {
    if (!has_structure_) return {std::nullopt, 0};
    Point qh = f_.apply({q.x + w_.apex.x, q.y + w_.apex.y});
    qh.x = std::clamp(qh.x, clamp_lo_.x, clamp_hi_.x);
    qh.y = std::clamp(qh.y, clamp_lo_.y, clamp_hi_.y);
    auto [label, depth] = loc_.locate_with_depth(qh);
    if (label <= 0) return {std::nullopt, depth};
    return {phi_.pairs[static_cast<std::size_t>(label - 1)].pair, depth};
}

}  // namespace rcp
