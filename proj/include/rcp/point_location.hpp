#pragma once

#include "rcp/geometry.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rcp {

/// An x- and y-monotone piece of a segment or circular arc.
/// Arc fragments run counterclockwise around the center from a to b.
struct CurveFragment {
    enum class Kind { Segment, Arc };
    Kind kind = Kind::Segment;
    Point a, b;
    Point center;
    double radius = 0.0;

    static CurveFragment segment(Point a, Point b);
    static CurveFragment arc(Point center, double radius, Point a, Point b);
};

/// Splits a segment or counterclockwise arc into x- and y-monotone fragments
/// (arcs are cut at the four axis extrema of their circle). Throws on
/// zero-length edges.
std::vector<CurveFragment> split_monotone(const CurveFragment& edge);

/// Four quarter arcs covering the full circle.
std::vector<CurveFragment> split_full_circle(Point center, double radius);

/// Intersection points of two circle boundaries (0, 1 or 2 points).
std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2, double r2);

/// Planar point location over non-crossing fragments: a randomized incremental
/// trapezoidal map with a history DAG. Fragments may share endpoints but their
/// interiors must be pairwise disjoint. Face labels come from a caller oracle
/// probed once per trapezoid. Queries on a boundary resolve by a fixed
/// upward-right tie rule (the query is nudged by +eps in x and y).
class Locator {
public:
    Locator() = default;

    /// face_label receives a point strictly inside one face (user coordinates).
    /// validate_crossings additionally rejects crossing fragments up front
    /// (quadratic; skipped automatically for large inputs unless forced).
    static Locator build(const std::vector<CurveFragment>& fragments,
                         const std::function<int(Point)>& face_label,
                         std::uint64_t seed = 20240517u, int validate_crossings = -1);

    int locate(Point q) const;
    /// Locate plus the number of DAG nodes visited (for query-cost audits).
    std::pair<int, int> locate_with_depth(Point q) const;

    std::size_t trapezoid_count() const;
    std::size_t fragment_count() const { return frags_.size(); }
    bool empty() const { return nodes_.empty(); }

    void dump_svg(const std::string& path) const;

private:
    struct Frag {
        bool is_arc = false;
        Point a, b;  // a lex-left of b
        Point center;
        double radius = 0.0;
        bool upper = false;  // arc on the y >= center.y half
    };
    struct Trap {
        int top = -1, bot = -1;  // fragment ids; -1 = bounding box side
        Point leftp, rightp;
        int ul = -1, ll = -1, ur = -1, lr = -1;
        int leaf = -1;
        int label = 0;
        bool dead = false;
    };
    struct Node {
        enum class Type { X, Y, Leaf };
        Type type = Type::Leaf;
        Point p;        // X
        int frag = -1;  // Y
        int left = -1, right = -1;
        int trap = -1;  // Leaf
    };

    double cosr_ = 1.0, sinr_ = 0.0;  // internal rotation
    double tie_eps_ = 0.0;
    Point box_lo_, box_hi_;
    std::vector<Frag> frags_;
    std::vector<Trap> traps_;
    std::vector<Node> nodes_;
    int root_ = -1;
    int default_label_ = 0;

    Point rotate(Point p) const { return {cosr_ * p.x - sinr_ * p.y, sinr_ * p.x + cosr_ * p.y}; }
    Point unrotate(Point p) const { return {cosr_ * p.x + sinr_ * p.y, -sinr_ * p.x + cosr_ * p.y}; }

    double frag_y_at(const Frag& f, double x) const;
    bool above_frag(const Frag& f, Point p) const;
    double tangent_angle_right(const Frag& f, Point p) const;
    Point frag_point_at(const Frag& f, double t) const;

    int new_trap();
    int new_leaf(int trap);
    int descend(Point p) const;
    int locate_left_endpoint(const Frag& f) const;
    std::vector<int> find_walked(const Frag& f, int fid) const;
    void insert_fragment(int fid);
    void assign_labels(const std::function<int(Point)>& face_label);
    Point trap_sample(const Trap& t) const;

    friend struct LocatorTestAccess;
};

}  // namespace rcp
