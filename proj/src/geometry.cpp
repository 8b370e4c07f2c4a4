#include "rcp/geometry.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <random>

namespace rcp {

namespace {

using Rat = boost::multiprecision::cpp_rational;

// Relative error bound for the two-product difference, after Shewchuk.
constexpr double kOrientErrBound = 3.3306690738754716e-16;

int exact_orient_sign(Point a, Point b, Point c) {
    Rat ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    Rat det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return det.sign();
}

}  // namespace

double orient(Point a, Point b, Point c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient_sign(Point a, Point b, Point c) {
    double detleft = (b.x - a.x) * (c.y - a.y);
    double detright = (b.y - a.y) * (c.x - a.x);
    double det = detleft - detright;
    double bound = kOrientErrBound * (std::fabs(detleft) + std::fabs(detright));
    if (det > bound) return 1;
    if (det < -bound) return -1;
    if (bound == 0.0) return 0;  // all terms exact zeros
    return exact_orient_sign(a, b, c);
}

int cross_sign(Vec u, Vec v) {
    return orient_sign(Point{0, 0}, Point{u.x, u.y}, Point{v.x, v.y});
}

double ccw_angle(Vec u, Vec v) {
    double a = std::atan2(cross(u, v), dot(u, v));
    if (a < 0) a += 2 * kPi;
    return a;
}

double angle_at(Point a, Point b, Point c) {
    Vec u = a - b, v = c - b;
    double d = dot(u, v) / (u.norm() * v.norm());
    d = std::clamp(d, -1.0, 1.0);
    return std::acos(d);
}

bool segments_cross(const PointPair& s1, const PointPair& s2) {
    Point a = s1.a, b = s1.b, c = s2.a, d = s2.b;
    int o1 = orient_sign(a, b, c);
    int o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a);
    int o4 = orient_sign(c, d, b);
    if (o1 == 0 && o2 == 0) {
        // Collinear: overlap of positive length violates general position.
        Vec dir = b - a;
        double ta0 = 0.0, ta1 = dot(dir, b - a);
        double tc = dot(dir, c - a), td = dot(dir, d - a);
        double lo = std::min(tc, td), hi = std::max(tc, td);
        double ov = std::min(ta1, hi) - std::max(ta0, lo);
        if (ov > kGeomEps * dir.norm2()) {
            throw std::invalid_argument("segments_cross: collinear overlapping segments");
        }
        return false;
    }
    return o1 * o2 < 0 && o3 * o4 < 0;
}

double point_segment_distance(Point p, Point a, Point b) {
    Vec ab = b - a;
    double len2 = ab.norm2();
    if (len2 == 0.0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

double segment_segment_distance(Point a, Point b, Point c, Point d) {
    bool crossing = false;
    try {
        crossing = segments_cross(PointPair(a, b), PointPair(c, d));
    } catch (const std::invalid_argument&) {
        return 0.0;  // collinear overlap
    }
    if (crossing) return 0.0;
    return std::min(std::min(point_segment_distance(a, c, d), point_segment_distance(b, c, d)),
                    std::min(point_segment_distance(c, a, b), point_segment_distance(d, a, b)));
}

// ---------------------------------------------------------------------------
// Wedge / CoWedge
// ---------------------------------------------------------------------------

Wedge::Wedge(Point apex_, Vec d1, Vec d2) : apex(apex_), dir1(normalized(d1)), dir2(normalized(d2)) {
    double a = ccw_angle(dir1, dir2);
    if (!(a > kGeomEps && a < kPi - kGeomEps)) {
        throw std::invalid_argument("wedge angle must lie in (0, pi)");
    }
}

bool Wedge::contains(Point p, Point q) const {
    Vec v = p - Point{q.x + apex.x, q.y + apex.y};
    return cross_sign(dir1, v) >= 0 && cross_sign(dir2, v) <= 0;
}

CoWedge::CoWedge(Point apex_, Vec d1, Vec d2)
    : apex(apex_), dir1(normalized(d1)), dir2(normalized(d2)) {
    double a = ccw_angle(dir1, dir2);
    if (!(a > kPi + kGeomEps && a < 2 * kPi - kGeomEps)) {
        throw std::invalid_argument("co-wedge angle must lie in (pi, 2*pi)");
    }
}

bool CoWedge::contains(Point p, Point q) const {
    Vec v = p - Point{q.x + apex.x, q.y + apex.y};
    return cross_sign(dir1, v) >= 0 || cross_sign(dir2, v) <= 0;
}

// ---------------------------------------------------------------------------
// Polygon
// ---------------------------------------------------------------------------

double polygon_signed_area(const std::vector<Point>& cycle) {
    double s = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point& p = cycle[i];
        const Point& q = cycle[(i + 1) % cycle.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

namespace {

bool point_on_cycle(Point p, const std::vector<Point>& cycle, double eps) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (point_segment_distance(p, cycle[i], cycle[(i + 1) % cycle.size()]) <= eps) return true;
    }
    return false;
}

// Ray-crossing parity for one cycle; p assumed off the boundary.
bool inside_cycle(Point p, const std::vector<Point>& cycle) {
    bool in = false;
    std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point a = cycle[i], b = cycle[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (xint > p.x) in = !in;
        }
    }
    return in;
}

std::vector<Point> merge_collinear(std::vector<Point> cycle) {
    bool changed = true;
    while (changed && cycle.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Point prev = cycle[(i + cycle.size() - 1) % cycle.size()];
            Point cur = cycle[i];
            Point next = cycle[(i + 1) % cycle.size()];
            if (orient_sign(prev, cur, next) == 0) {
                cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return cycle;
}

std::vector<Point> midpoint_split(const std::vector<Point>& cycle) {
    std::vector<Point> out;
    out.reserve(cycle.size() * 2);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Point a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        out.push_back(a);
        out.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
    }
    return out;
}

}  // namespace

bool PolygonWithHoles::contains(Point p, Point q) const {
    Point local{p.x - q.x, p.y - q.y};
    if (point_on_cycle(local, outer, kGeomEps)) return true;
    for (const auto& h : holes) {
        if (point_on_cycle(local, h, kGeomEps)) return true;
    }
    if (!inside_cycle(local, outer)) return false;
    for (const auto& h : holes) {
        if (inside_cycle(local, h)) return false;
    }
    return true;
}

double PolygonWithHoles::diameter() const {
    double best = 0.0;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        for (std::size_t j = i + 1; j < outer.size(); ++j) {
            best = std::max(best, dist(outer[i], outer[j]));
        }
    }
    return best;
}

std::vector<std::pair<Point, Point>> PolygonWithHoles::all_edges() const {
    std::vector<std::pair<Point, Point>> edges;
    auto add = [&edges](const std::vector<Point>& cyc) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            edges.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
        }
    };
    add(outer);
    for (const auto& h : holes) add(h);
    return edges;
}

PolygonWithHoles normalize_polygon(PolygonWithHoles poly) {
    if (poly.outer.size() < 3) throw std::invalid_argument("outer boundary needs >= 3 vertices");
    if (polygon_signed_area(poly.outer) < 0) std::reverse(poly.outer.begin(), poly.outer.end());
    for (auto& h : poly.holes) {
        if (h.size() < 3) throw std::invalid_argument("hole boundary needs >= 3 vertices");
        if (polygon_signed_area(h) > 0) std::reverse(h.begin(), h.end());
    }

    auto fix_cycle = [](std::vector<Point> cyc) {
        cyc = merge_collinear(cyc);
        if (cyc.size() < 3) throw std::invalid_argument("degenerate cycle after collinear merge");
        while (cyc.size() < 4) cyc = midpoint_split(cyc);
        return cyc;
    };
    poly.outer = fix_cycle(poly.outer);
    for (auto& h : poly.holes) h = fix_cycle(h);

    // Simplicity: no two boundary edges may properly cross, and distinct cycles
    // must stay disjoint.
    auto edges = poly.all_edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (points_equal(edges[i].first, edges[j].second) ||
                points_equal(edges[i].second, edges[j].first) ||
                points_equal(edges[i].first, edges[j].first) ||
                points_equal(edges[i].second, edges[j].second)) {
                continue;
            }
            if (segments_cross(PointPair(edges[i].first, edges[i].second),
                               PointPair(edges[j].first, edges[j].second))) {
                throw std::invalid_argument("polygon boundary self-intersects");
            }
        }
    }
    return poly;
}

std::vector<VertexWedge> vertex_wedges(const PolygonWithHoles& poly) {
    std::vector<VertexWedge> out;
    auto handle_cycle = [&out](const std::vector<Point>& cyc) {
        std::size_t n = cyc.size();
        for (std::size_t i = 0; i < n; ++i) {
            Point prev = cyc[(i + n - 1) % n];
            Point v = cyc[i];
            Point next = cyc[(i + 1) % n];
            Vec d1 = normalized(next - v);
            Vec d2 = normalized(prev - v);
            double sigma = ccw_angle(d1, d2);
            if (nearly_equal(sigma, kPi, 1e-12) || sigma < 1e-12) {
                throw std::invalid_argument("collinear adjacent edges: polygon not normalized");
            }
            VertexWedge vw;
            vw.vertex = v;
            vw.interior_angle = sigma;
            if (sigma < kPi) {
                vw.is_wedge = true;
                vw.wedge = Wedge(v, d1, d2);
            } else {
                vw.is_wedge = false;
                vw.cowedge = CoWedge(v, d1, d2);
            }
            out.push_back(vw);
        }
    };
    handle_cycle(poly.outer);
    for (const auto& h : poly.holes) handle_cycle(h);
    return out;
}

double min_nonadjacent_edge_distance(const PolygonWithHoles& poly) {
    struct Edge {
        Point a, b;
        int cycle;
        std::size_t idx, count;
    };
    std::vector<Edge> edges;
    int cyc_id = 0;
    auto add = [&edges, &cyc_id](const std::vector<Point>& cyc) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            edges.push_back({cyc[i], cyc[(i + 1) % cyc.size()], cyc_id, i, cyc.size()});
        }
        ++cyc_id;
    };
    add(poly.outer);
    for (const auto& h : poly.holes) add(h);

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& e = edges[i];
            const Edge& f = edges[j];
            if (e.cycle == f.cycle) {
                std::size_t d = (f.idx + f.count - e.idx) % e.count;
                if (d == 1 || d == e.count - 1) continue;  // adjacent
            }
            best = std::min(best, segment_segment_distance(e.a, e.b, f.a, f.b));
        }
    }
    if (!(best > 0.0)) throw std::invalid_argument("polygon has touching non-adjacent edges");
    return best;
}

Wedge reflect(const Wedge& w) {
    Wedge out;
    out.apex = reflect(w.apex);
    out.dir1 = -w.dir1;
    out.dir2 = -w.dir2;
    return out;
}

CoWedge reflect(const CoWedge& c) {
    CoWedge out;
    out.apex = reflect(c.apex);
    out.dir1 = -c.dir1;
    out.dir2 = -c.dir2;
    return out;
}

Disc reflect(const Disc& d) { return Disc(reflect(d.center), d.radius); }

PolygonWithHoles reflect(const PolygonWithHoles& poly) {
    PolygonWithHoles out;
    out.outer.reserve(poly.outer.size());
    for (Point p : poly.outer) out.outer.push_back(reflect(p));
    for (const auto& h : poly.holes) {
        std::vector<Point> hh;
        hh.reserve(h.size());
        for (Point p : h) hh.push_back(reflect(p));
        out.holes.push_back(std::move(hh));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Affine maps / smallest translate
// ---------------------------------------------------------------------------

AffineMap AffineMap::inverse() const {
    double d = det();
    if (std::fabs(d) < 1e-300) throw std::invalid_argument("affine map not invertible");
    AffineMap inv;
    inv.m00 = m11 / d;
    inv.m01 = -m01 / d;
    inv.m10 = -m10 / d;
    inv.m11 = m00 / d;
    inv.t = {-(inv.m00 * t.x + inv.m01 * t.y), -(inv.m10 * t.x + inv.m11 * t.y)};
    return inv;
}

AffineMap wedge_to_quadrant_map(const Wedge& w) {
    double d = cross(w.dir1, w.dir2);
    AffineMap f;
    f.m00 = w.dir2.y / d;
    f.m01 = -w.dir2.x / d;
    f.m10 = -w.dir1.y / d;
    f.m11 = w.dir1.x / d;
    f.t = {-(f.m00 * w.apex.x + f.m01 * w.apex.y), -(f.m10 * w.apex.x + f.m11 * w.apex.y)};
    return f;
}

Point smallest_wedge_translate(const Wedge& w, const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("smallest_wedge_translate: empty point set");
    AffineMap f = wedge_to_quadrant_map(w);
    double mx = std::numeric_limits<double>::infinity();
    double my = mx;
    for (Point p : pts) {
        Point u = f.apply(p);
        mx = std::min(mx, u.x);
        my = std::min(my, u.y);
    }
    Point corner = f.inverse().apply({mx, my});
    return {corner.x - w.apex.x, corner.y - w.apex.y};
}

// ---------------------------------------------------------------------------
// Disc chords
// ---------------------------------------------------------------------------

std::optional<Chord> disc_line_chord(const Disc& d, const Line& l) {
    Vec dir = l.p2 - l.p1;
    double len = dir.norm();
    if (len == 0.0) throw std::invalid_argument("disc_line_chord: degenerate line");
    Vec u{dir.x / len, dir.y / len};
    double t0 = dot(d.center - l.p1, u);
    Point foot = l.p1 + u * t0;
    double h2 = dist2(foot, d.center);
    double r2 = d.radius * d.radius;
    double disc = r2 - h2;
    double tol = kGeomEps * std::max(1.0, d.radius);
    if (disc < -tol * d.radius) return std::nullopt;
    if (disc <= tol * d.radius) return Chord{foot, foot};
    double half = std::sqrt(std::max(disc, 0.0));
    return Chord{foot - u * half, foot + u * half};
}

SmoothBodyOracle make_disc_oracle(const Disc& d) {
    SmoothBodyOracle o;
    o.diameter = 2 * d.radius;
    o.chord = [d](const Line& l) { return disc_line_chord(d, l); };
    return o;
}

// ---------------------------------------------------------------------------
// General position
// ---------------------------------------------------------------------------

std::string general_position_violation(const std::vector<Point>& pts) {
    std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points_equal(pts[i], pts[j])) {
                return "duplicate points at indices " + std::to_string(i) + "," + std::to_string(j);
            }
        }
    }
    std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> ds;
    ds.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) ds.push_back({dist(pts[i], pts[j]), {i, j}});
    }
    std::sort(ds.begin(), ds.end());
    for (std::size_t k = 1; k < ds.size(); ++k) {
        if (ds[k].first - ds[k - 1].first <= kGeomEps) {
            return "equal pairwise distances";
        }
    }
    // Collinearity via angular sort around each point.
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<double, std::size_t>> angs;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Vec v = pts[j] - pts[i];
            double a = std::atan2(v.y, v.x);
            if (a < 0) a += kPi;  // fold opposite directions together
            if (a >= kPi) a -= kPi;
            angs.push_back({a, j});
        }
        std::sort(angs.begin(), angs.end());
        for (std::size_t k = 1; k < angs.size(); ++k) {
            if (angs[k].first - angs[k - 1].first < 1e-12 &&
                orient_sign(pts[i], pts[angs[k - 1].second], pts[angs[k].second]) == 0) {
                return "three collinear points";
            }
        }
    }
    return "";
}

std::vector<Point> perturb_general_position(std::vector<Point> pts, std::uint64_t seed,
                                            double magnitude) {
    if (pts.size() < 2) return pts;
    if (magnitude <= 0.0) {
        double lox = pts[0].x, hix = pts[0].x, loy = pts[0].y, hiy = pts[0].y;
        for (Point p : pts) {
            lox = std::min(lox, p.x); hix = std::max(hix, p.x);
            loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
        }
        double spread = std::max({hix - lox, hiy - loy, 1e-6});
        magnitude = spread * 1e-6;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-magnitude, magnitude);
    for (int round = 0; round < 64; ++round) {
        if (general_position_violation(pts).empty()) return pts;
        for (auto& p : pts) {
            p.x += jitter(rng);
            p.y += jitter(rng);
        }
    }
    throw std::runtime_error("perturb_general_position: failed to reach general position");
}

}  // namespace rcp
