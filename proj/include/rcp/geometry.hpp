#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcp {

/// Global tolerance for incidence and equality tests.
inline constexpr double kGeomEps = 1e-9;

constexpr double kPi = 3.14159265358979323846;

struct Vec {
    double x = 0.0;
    double y = 0.0;

    Vec operator+(Vec o) const { return {x + o.x, y + o.y}; }
    Vec operator-(Vec o) const { return {x - o.x, y - o.y}; }
    Vec operator*(double s) const { return {x * s, y * s}; }
    Vec operator-() const { return {-x, -y}; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(Vec v) const { return {x + v.x, y + v.y}; }
    Point operator-(Vec v) const { return {x - v.x, y - v.y}; }
    Vec operator-(Point o) const { return {x - o.x, y - o.y}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline double dist(Point a, Point b) { return (b - a).norm(); }
inline double dist2(Point a, Point b) { return (b - a).norm2(); }
inline Vec normalized(Vec v) {
    double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return {v.x / n, v.y / n};
}
inline Vec perp(Vec v) { return {-v.y, v.x}; }

inline bool nearly_equal(double a, double b, double eps = kGeomEps) { return std::fabs(a - b) <= eps; }
inline bool points_equal(Point a, Point b, double eps = kGeomEps) {
    return std::fabs(a.x - b.x) <= eps && std::fabs(a.y - b.y) <= eps;
}

/// Signed area of triangle abc, times two. Positive when abc is counterclockwise.
double orient(Point a, Point b, Point c);

/// Exact sign of orient(a,b,c): adaptive double evaluation with a rational fallback.
int orient_sign(Point a, Point b, Point c);

/// Exact sign of cross(u,v).
int cross_sign(Vec u, Vec v);

/// Counterclockwise angle from u to v, in [0, 2*pi).
double ccw_angle(Vec u, Vec v);

/// Angle at vertex b of triangle abc, in [0, pi].
double angle_at(Point a, Point b, Point c);

struct PointPair {
    Point a, b;
    double length = 0.0;

    PointPair() = default;
    PointPair(Point a_, Point b_) : a(a_), b(b_), length(dist(a_, b_)) {}
};

inline bool same_pair(const PointPair& p, const PointPair& q, double eps = kGeomEps) {
    return (points_equal(p.a, q.a, eps) && points_equal(p.b, q.b, eps)) ||
           (points_equal(p.a, q.b, eps) && points_equal(p.b, q.a, eps));
}

/// True iff the open segments [s1.a,s1.b] and [s2.a,s2.b] share exactly one
/// interior point. Shared endpoints do not count. Collinear overlap is a
/// general-position violation and throws.
bool segments_cross(const PointPair& s1, const PointPair& s2);

double point_segment_distance(Point p, Point a, Point b);
double segment_segment_distance(Point a, Point b, Point c, Point d);

// ---------------------------------------------------------------------------
// Shapes
// ---------------------------------------------------------------------------

/// Wedge: intersection of two halfplanes. The region is the set of apex + v
/// with polar(v) sweeping counterclockwise from dir1 to dir2; the sweep angle
/// must lie in (0, pi).
struct Wedge {
    Point apex;
    Vec dir1, dir2;  // unit branch directions

    Wedge() = default;
    Wedge(Point apex_, Vec d1, Vec d2);

    double angle() const { return ccw_angle(dir1, dir2); }
    /// p in q + wedge region.
    bool contains(Point p, Point q) const;
};

/// Co-wedge: union of two halfplanes; sweep angle from dir1 to dir2 in (pi, 2*pi).
struct CoWedge {
    Point apex;
    Vec dir1, dir2;

    CoWedge() = default;
    CoWedge(Point apex_, Vec d1, Vec d2);

    double angle() const { return ccw_angle(dir1, dir2); }
    /// Complementary wedge (closure of the complement), angle 2*pi - angle().
    Wedge complement() const { return Wedge(apex, dir2, dir1); }
    bool contains(Point p, Point q) const;
};

struct Disc {
    Point center;
    double radius = 1.0;

    Disc() = default;
    Disc(Point c, double r) : center(c), radius(r) {
        if (!(r > 0.0)) throw std::invalid_argument("disc radius must be positive");
    }
    bool contains(Point p, Point q) const {
        return dist2(p, Point{q.x + center.x, q.y + center.y}) <= radius * radius + kGeomEps;
    }
};

/// Polygon with holes. Outer cycle counterclockwise, hole cycles clockwise.
struct PolygonWithHoles {
    std::vector<Point> outer;
    std::vector<std::vector<Point>> holes;

    /// p in q + polygon (closed region: boundary points count as inside).
    bool contains(Point p, Point q) const;
    double diameter() const;
    std::vector<std::pair<Point, Point>> all_edges() const;
};

/// Orients cycles (outer ccw, holes cw), merges collinear adjacent edges and
/// midpoint-splits cycles with fewer than four edges. Validates simplicity.
PolygonWithHoles normalize_polygon(PolygonWithHoles poly);

double polygon_signed_area(const std::vector<Point>& cycle);

struct AffineMap {
    double m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Vec t;

    Point apply(Point p) const { return {m00 * p.x + m01 * p.y + t.x, m10 * p.x + m11 * p.y + t.y}; }
    double det() const { return m00 * m11 - m01 * m10; }
    AffineMap inverse() const;
};

/// Affine map sending the wedge to the northeast quadrant anchored at the
/// origin. For a wedge with apex at the origin, p in W_q iff f(p) dominates
/// f(q) componentwise; in general the dominance corner of W_q is f(q + apex).
AffineMap wedge_to_quadrant_map(const Wedge& w);

/// Translate parameter p of the unique smallest W-translate W_p containing A;
/// both branches of W_p touch A. For an apex-at-origin wedge, p is the apex.
Point smallest_wedge_translate(const Wedge& w, const std::vector<Point>& pts);

struct VertexWedge {
    Point vertex;
    bool is_wedge = true;  // interior angle < pi
    Wedge wedge;           // valid when is_wedge
    CoWedge cowedge;       // valid when !is_wedge
    double interior_angle = 0.0;

    bool contains(Point p, Point q) const {
        return is_wedge ? wedge.contains(p, q) : cowedge.contains(p, q);
    }
};

/// One (co-)wedge per polygon vertex, anchored apex-at-vertex, spanning the
/// interior angle. Requires a normalized polygon.
std::vector<VertexWedge> vertex_wedges(const PolygonWithHoles& poly);

/// Minimum distance between non-adjacent edges of the polygon. Adjacency means
/// consecutive edges of the same cycle.
double min_nonadjacent_edge_distance(const PolygonWithHoles& poly);

// Point reflection through the origin.
inline Point reflect(Point p) { return {-p.x, -p.y}; }
Wedge reflect(const Wedge& w);
CoWedge reflect(const CoWedge& c);
Disc reflect(const Disc& d);
PolygonWithHoles reflect(const PolygonWithHoles& poly);

struct Line {
    Point p1, p2;  // two distinct points
};

struct Chord {
    Point a, b;
    bool is_point() const { return points_equal(a, b); }
};

/// Chord of the disc cut by the line, or a tangency point, or nothing.
std::optional<Chord> disc_line_chord(const Disc& d, const Line& l);

/// Line-intersection oracle for a smooth convex body plus its diameter.
struct SmoothBodyOracle {
    std::function<std::optional<Chord>(const Line&)> chord;
    double diameter = 0.0;
};

SmoothBodyOracle make_disc_oracle(const Disc& d);

// ---------------------------------------------------------------------------
// General position
// ---------------------------------------------------------------------------

/// Empty string when S is in general position: pairwise distinct points,
/// distinct pairwise distances, no three collinear.
std::string general_position_violation(const std::vector<Point>& pts);

/// Deterministic seeded epsilon-perturbation that repairs general-position
/// violations. Magnitude defaults to a small multiple of the point spread.
std::vector<Point> perturb_general_position(std::vector<Point> pts, std::uint64_t seed,
                                            double magnitude = 0.0);

}  // namespace rcp
