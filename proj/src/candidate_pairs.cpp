#include "rcp/candidate_pairs.hpp"

#include "rcp/point_location.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace rcp {

namespace {

struct IndexPair {
    int i, j;  // i < j
    double len;
};

std::vector<IndexPair> all_pairs_sorted(const std::vector<Point>& pts) {
    std::vector<IndexPair> pairs;
    pairs.reserve(pts.size() * (pts.size() - 1) / 2);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(pts.size()); ++j) {
            pairs.push_back({i, j, dist(pts[i], pts[j])});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const IndexPair& a, const IndexPair& b) {
        if (a.len != b.len) return a.len < b.len;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });
    return pairs;
}

// First pair of the sorted list with both endpoints in the member set; this is
// the closest pair of the members.
int first_contained_pair(const std::vector<IndexPair>& sorted, const std::vector<char>& member) {
    for (std::size_t r = 0; r < sorted.size(); ++r) {
        if (member[sorted[r].i] && member[sorted[r].j]) return static_cast<int>(r);
    }
    return -1;
}

void finalize(CandidateSet& set) {
    std::sort(set.pairs.begin(), set.pairs.end(),
              [](const CandidatePair& a, const CandidatePair& b) {
                  return a.pair.length < b.pair.length;
              });
    for (std::size_t i = 0; i < set.pairs.size(); ++i) set.pairs[i].index = i;
}

void validate_witness(const std::vector<Point>& pts, const Shape& shape, const CandidatePair& c) {
    auto ans = rcp_answer(pts, {shape, c.witness});
    if (!ans || !same_pair(*ans, c.pair)) {
        throw std::logic_error("candidate witness failed oracle validation");
    }
}

// Max segment tree over rows, with first-index search for a value >= bound.
class MaxTree {
public:
    explicit MaxTree(int n, int init) : n_(n), vals_(static_cast<std::size_t>(4 * n), init) {}

    void update(int pos, int val) { update(1, 0, n_ - 1, pos, val); }
    int range_max(int lo, int hi) const {
        if (lo > hi) return std::numeric_limits<int>::min();
        return range_max(1, 0, n_ - 1, lo, hi);
    }
    // First position in [lo, hi] whose value is >= bound; -1 if none.
    int find_first(int lo, int hi, int bound) const {
        if (lo > hi) return -1;
        return find_first(1, 0, n_ - 1, lo, hi, bound);
    }

private:
    int n_;
    std::vector<int> vals_;

    void update(int node, int l, int r, int pos, int val) {
        if (l == r) {
            vals_[node] = val;
            return;
        }
        int m = (l + r) / 2;
        if (pos <= m) update(2 * node, l, m, pos, val);
        else update(2 * node + 1, m + 1, r, pos, val);
        vals_[node] = std::max(vals_[2 * node], vals_[2 * node + 1]);
    }
    int range_max(int node, int l, int r, int lo, int hi) const {
        if (hi < l || r < lo) return std::numeric_limits<int>::min();
        if (lo <= l && r <= hi) return vals_[node];
        int m = (l + r) / 2;
        return std::max(range_max(2 * node, l, m, lo, hi),
                        range_max(2 * node + 1, m + 1, r, lo, hi));
    }
    int find_first(int node, int l, int r, int lo, int hi, int bound) const {
        if (hi < l || r < lo || vals_[node] < bound) return -1;
        if (l == r) return l;
        int m = (l + r) / 2;
        int res = find_first(2 * node, l, m, lo, hi, bound);
        if (res >= 0) return res;
        return find_first(2 * node + 1, m + 1, r, lo, hi, bound);
    }
};

std::vector<double> distinct_sorted(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

double cell_mid(const std::vector<double>& coords, int i) {
    int n = static_cast<int>(coords.size());
    if (i <= 0) return coords.front() - 1.0;
    if (i >= n) return coords.back() + 1.0;
    return 0.5 * (coords[i - 1] + coords[i]);
}

// Spatial hash over points, used for local disc-candidate work.
class Grid {
public:
    Grid(const std::vector<Point>& pts, double cell) : pts_(pts), cell_(cell) {
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            buckets_[key(pts[i])].push_back(i);
        }
    }
    template <typename F>
    void for_neighbors(Point q, double radius, F&& f) const {
        int r = static_cast<int>(std::ceil(radius / cell_)) + 1;
        auto [cx, cy] = key(q);
        for (int dx = -r; dx <= r; ++dx) {
            for (int dy = -r; dy <= r; ++dy) {
                auto it = buckets_.find({cx + dx, cy + dy});
                if (it == buckets_.end()) continue;
                for (int i : it->second) {
                    if (dist(pts_[i], q) <= radius) f(i);
                }
            }
        }
    }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<int, int>& k) const {
            return std::hash<long long>()((static_cast<long long>(k.first) << 32) ^
                                          static_cast<unsigned>(k.second));
        }
    };
    std::pair<int, int> key(Point p) const {
        return {static_cast<int>(std::floor(p.x / cell_)),
                static_cast<int>(std::floor(p.y / cell_))};
    }
    const std::vector<Point>& pts_;
    double cell_;
    std::unordered_map<std::pair<int, int>, std::vector<int>, KeyHash> buckets_;
};

// Minimum positive pairwise distance, grid-accelerated.
double min_positive_distance(const std::vector<Point>& pts) {
    if (pts.size() < 2) return 1.0;
    double lox = pts[0].x, hix = pts[0].x, loy = pts[0].y, hiy = pts[0].y;
    for (Point p : pts) {
        lox = std::min(lox, p.x); hix = std::max(hix, p.x);
        loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
    }
    double spread = std::max({hix - lox, hiy - loy, 1e-9});
    double cell = spread / std::max(1.0, std::sqrt(double(pts.size())));
    for (int attempt = 0; attempt < 8; ++attempt) {
        Grid g(pts, cell);
        double best = std::numeric_limits<double>::infinity();
        for (Point p : pts) {
            g.for_neighbors(p, cell, [&](int j) {
                double d = dist(pts[j], p);
                if (d > 0) best = std::min(best, d);
            });
        }
        if (best < std::numeric_limits<double>::infinity()) return best;
        cell *= 4.0;
    }
    // Sparse fallback.
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d = dist(pts[i], pts[j]);
            if (d > 0) best = std::min(best, d);
        }
    }
    return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// Wedge candidates: dominance sweep
// ---------------------------------------------------------------------------

CandidateSet wedge_candidates(const std::vector<Point>& pts, const Wedge& w,
                              const EnumerationLimits& lim) {
    if (pts.size() > lim.max_n_direct) {
        throw std::invalid_argument("wedge_candidates: dataset exceeds enumeration cap");
    }
    CandidateSet out;
    out.source = "wedge";
    if (pts.size() < 2) return out;

    AffineMap f = wedge_to_quadrant_map(w);
    AffineMap finv = f.inverse();
    std::vector<Point> u(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) u[i] = f.apply(pts[i]);

    auto sorted = all_pairs_sorted(pts);
    // Pareto front of corners of processed (shorter) pairs: x ascending,
    // y strictly descending.
    std::map<double, double> front;
    auto dominated = [&front](Point c) {
        auto it = front.lower_bound(c.x);
        return it != front.end() && it->second >= c.y;
    };
    auto insert_front = [&front](Point c) {
        auto it = front.lower_bound(c.x);
        if (it != front.end() && it->second >= c.y) return;  // dominated
        while (it != front.begin()) {
            auto prev = std::prev(it);
            if (prev->second <= c.y) it = front.erase(prev);
            else break;
        }
        front[c.x] = c.y;
    };

    double scale = 0.0;
    for (Point p : pts) scale = std::max({scale, std::fabs(p.x), std::fabs(p.y), 1.0});
    Vec widen{-(w.dir1.x + w.dir2.x), -(w.dir1.y + w.dir2.y)};

    for (const auto& pr : sorted) {
        Point c{std::min(u[pr.i].x, u[pr.j].x), std::min(u[pr.i].y, u[pr.j].y)};
        if (!dominated(c)) {
            CandidatePair cand;
            cand.pair = PointPair(pts[pr.i], pts[pr.j]);
            cand.a_idx = pr.i;
            cand.b_idx = pr.j;
            // Witness: the smallest-translate parameter, widened by eps_geom so
            // the boundary points are robustly inside.
            Point apex_pt = finv.apply(c);
            Point p{apex_pt.x - w.apex.x, apex_pt.y - w.apex.y};
            cand.witness = {p.x + 1e-9 * scale * widen.x, p.y + 1e-9 * scale * widen.y};
            cand.cls = classify(w, cand.pair);
            out.pairs.push_back(cand);
        }
        insert_front(c);
    }
    finalize(out);

    if (lim.validate_witnesses) {
        std::vector<char> member(pts.size(), 0);
        for (const auto& cand : out.pairs) {
            std::fill(member.begin(), member.end(), 0);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                member[i] = w.contains(pts[i], cand.witness) ? 1 : 0;
            }
            int r = first_contained_pair(sorted, member);
            if (r < 0 || !(sorted[r].i == cand.a_idx && sorted[r].j == cand.b_idx)) {
                throw std::logic_error("wedge candidate witness failed validation");
            }
        }
    }
    return out;
}

PairClass classify(const Wedge& w, const PointPair& pair) {
    AffineMap f = wedge_to_quadrant_map(w);
    Point ua = f.apply(pair.a), ub = f.apply(pair.b);
    if ((ua.x <= ub.x && ua.y <= ub.y) || (ub.x <= ua.x && ub.y <= ua.y)) {
        return PairClass::Flat;  // apex coincides with one of the points
    }
    Point c{std::min(ua.x, ub.x), std::min(ua.y, ub.y)};
    Point apex = f.inverse().apply(c);
    double at_apex = angle_at(pair.a, apex, pair.b);
    double at_a = angle_at(apex, pair.a, pair.b);
    double at_b = angle_at(apex, pair.b, pair.a);
    if (at_apex + kGeomEps < at_a && at_apex + kGeomEps < at_b) return PairClass::Steep;
    return PairClass::Flat;
}

// ---------------------------------------------------------------------------
// Co-wedge candidates: rank-grid sweep
// ---------------------------------------------------------------------------

CandidateSet cowedge_candidates(const std::vector<Point>& pts, const CoWedge& cw,
                                const EnumerationLimits& lim) {
    if (pts.size() > lim.max_n_direct) {
        throw std::invalid_argument("cowedge_candidates: dataset exceeds enumeration cap");
    }
    CandidateSet out;
    out.source = "cowedge";
    const int n = static_cast<int>(pts.size());
    if (n < 2) return out;

    // Branch-aligned frame: dir2 -> +x, dir1 -> +y; the co-wedge becomes the
    // complement of the open NE quadrant.
    double det0 = cross(cw.dir2, cw.dir1);
    AffineMap T;
    T.m00 = cw.dir1.y / det0;
    T.m01 = -cw.dir1.x / det0;
    T.m10 = -cw.dir2.y / det0;
    T.m11 = cw.dir2.x / det0;
    AffineMap Tinv = T.inverse();

    std::vector<Point> h(pts.size());
    for (int i = 0; i < n; ++i) h[i] = T.apply(pts[i]);

    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = h[i].x;
        ys[i] = h[i].y;
    }
    auto xd = distinct_sorted(xs);
    auto yd = distinct_sorted(ys);
    const int nx = static_cast<int>(xd.size());
    const int ny = static_cast<int>(yd.size());
    auto xrank = [&xd](double v) {
        return static_cast<int>(std::lower_bound(xd.begin(), xd.end(), v) - xd.begin());
    };
    auto yrank = [&yd](double v) {
        return static_cast<int>(std::lower_bound(yd.begin(), yd.end(), v) - yd.begin());
    };

    auto sorted = all_pairs_sorted(pts);

    // Rows are y-cells j in [0, ny]; in each row the covered cells form an
    // i-suffix. maxu[j] = largest uncovered i, or -1 when the row is full.
    std::vector<int> min_covered(ny + 1, nx + 1);
    MaxTree tree(ny + 1, nx);

    for (const auto& pr : sorted) {
        int ax = xrank(h[pr.i].x), ay = yrank(h[pr.i].y);
        int bx = xrank(h[pr.j].x), by = yrank(h[pr.j].y);
        int lo = std::min(ay, by), hi = std::max(ay, by);
        // Required i-threshold per row block.
        int l_top = 0;                                  // rows j in [hi+1, ny]
        int l_mid = (ay < by ? bx : ax) + 1;            // rows j in [lo+1, hi]
        int l_bot = std::max(ax, bx) + 1;               // rows j in [0, lo]

        int row = -1, need = 0;
        if (tree.range_max(hi + 1, ny) >= l_top) {
            row = tree.find_first(hi + 1, ny, l_top);
            need = l_top;
        } else if (tree.range_max(lo + 1, hi) >= l_mid) {
            row = tree.find_first(lo + 1, hi, l_mid);
            need = l_mid;
        } else if (tree.range_max(0, lo) >= l_bot) {
            row = tree.find_first(0, lo, l_bot);
            need = l_bot;
        }

        if (row >= 0) {
            int col = min_covered[row] - 1;  // largest uncovered i; >= need by choice of row
            (void)need;
            Point qhat{cell_mid(xd, col), cell_mid(yd, row)};
            Point qfull = Tinv.apply(qhat);
            CandidatePair cand;
            cand.pair = PointPair(pts[pr.i], pts[pr.j]);
            cand.a_idx = pr.i;
            cand.b_idx = pr.j;
            cand.witness = {qfull.x - cw.apex.x, qfull.y - cw.apex.y};
            // Branch labels at the witness: the r-point sits in the dir2-side
            // halfplane only, the r'-point in the dir1-side halfplane only.
            bool a_in_h = h[pr.i].y <= qhat.y, a_in_hp = h[pr.i].x <= qhat.x;
            bool b_in_h = h[pr.j].y <= qhat.y, b_in_hp = h[pr.j].x <= qhat.x;
            if (a_in_h && !a_in_hp && b_in_hp && !b_in_h) {
                cand.r_idx = pr.i;
                cand.rp_idx = pr.j;
            } else if (b_in_h && !b_in_hp && a_in_hp && !a_in_h) {
                cand.r_idx = pr.j;
                cand.rp_idx = pr.i;
            }
            out.pairs.push_back(cand);

            // Cover this pair's availability region (suffix per row).
            for (int j = 0; j <= ny; ++j) {
                int L = j > hi ? l_top : (j > lo ? l_mid : l_bot);
                if (L < min_covered[j]) {
                    min_covered[j] = L;
                    tree.update(j, L - 1);
                }
            }
        }
    }
    finalize(out);

    if (lim.validate_witnesses) {
        std::vector<char> member(pts.size(), 0);
        for (const auto& cand : out.pairs) {
            for (int i = 0; i < n; ++i) member[i] = cw.contains(pts[i], cand.witness) ? 1 : 0;
            int r = first_contained_pair(sorted, member);
            if (r < 0 || !(sorted[r].i == cand.a_idx && sorted[r].j == cand.b_idx)) {
                throw std::logic_error("cowedge candidate witness failed validation");
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Disc candidates: arrangement-vertex sampling with local evaluation
// ---------------------------------------------------------------------------

namespace {

struct PairKey {
    int i, j;
    bool operator==(const PairKey& o) const { return i == o.i && j == o.j; }
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const {
        return std::hash<long long>()((static_cast<long long>(k.i) << 32) ^
                                      static_cast<unsigned>(k.j));
    }
};

}  // namespace

CandidateSet disc_candidates(const std::vector<Point>& pts, const Disc& d,
                             const EnumerationLimits& lim) {
    CandidateSet out;
    out.source = "disc";
    const int n = static_cast<int>(pts.size());
    if (n < 2) return out;
    const double R = d.radius;

    // Reflected-translate centers: q is in the lens of (a, b) iff q is within
    // R of both centers.
    std::vector<Point> ctr(pts.size());
    for (int i = 0; i < n; ++i) ctr[i] = {pts[i].x - d.center.x, pts[i].y - d.center.y};
    Grid grid(ctr, R);

    // Arrangement vertices: pairwise circle crossings of nearby centers.
    std::vector<Point> verts;
    for (int i = 0; i < n; ++i) {
        grid.for_neighbors(ctr[i], 2 * R, [&](int j) {
            if (j <= i) return;
            for (Point v : circle_circle_intersections(ctr[i], R, ctr[j], R)) verts.push_back(v);
        });
    }
    double eps_cell = 1e-4 * min_positive_distance(verts);
    if (!(eps_cell > 0) || verts.empty()) eps_cell = 1e-7 * std::max(R, 1.0);

    std::vector<Point> samples;
    samples.reserve(verts.size() * 4 + pts.size() * 4);
    for (Point v : verts) {
        for (double sx : {-1.0, 1.0}) {
            for (double sy : {-1.0, 1.0}) samples.push_back({v.x + sx * eps_cell, v.y + sy * eps_cell});
        }
    }
    for (Point c : ctr) {
        for (double sx : {-1.0, 1.0}) {
            for (double sy : {-1.0, 1.0}) samples.push_back({c.x + sx * eps_cell, c.y + sy * eps_cell});
        }
    }

    // Same closed-disc predicate as Disc::contains.
    const double r2_in = R * R + kGeomEps;
    const double gather = R + 1e-6;
    std::unordered_map<PairKey, Point, PairKeyHash> found;
    std::vector<int> members;
    for (Point q : samples) {
        members.clear();
        grid.for_neighbors(q, gather, [&](int i) {
            if (dist2(q, ctr[i]) <= r2_in) members.push_back(i);
        });
        if (members.size() < 2) continue;
        double best = std::numeric_limits<double>::infinity();
        int bi = -1, bj = -1;
        for (std::size_t s = 0; s < members.size(); ++s) {
            for (std::size_t t = s + 1; t < members.size(); ++t) {
                double dd = dist(pts[members[s]], pts[members[t]]);
                if (dd < best) {
                    best = dd;
                    bi = members[s];
                    bj = members[t];
                }
            }
        }
        if (bi > bj) std::swap(bi, bj);
        found.emplace(PairKey{bi, bj}, q);
    }

    for (const auto& [key, witness] : found) {
        CandidatePair cand;
        cand.pair = PointPair(pts[key.i], pts[key.j]);
        cand.a_idx = key.i;
        cand.b_idx = key.j;
        cand.witness = witness;
        out.pairs.push_back(cand);
    }
    finalize(out);

    if (lim.validate_witnesses) {
        for (const auto& cand : out.pairs) {
            // Local oracle: only points within R of the witness can be members.
            std::vector<int> m;
            grid.for_neighbors(cand.witness, gather, [&](int i) {
                if (dist2(cand.witness, ctr[i]) <= r2_in) m.push_back(i);
            });
            double best = std::numeric_limits<double>::infinity();
            int bi = -1, bj = -1;
            for (std::size_t s = 0; s < m.size(); ++s) {
                for (std::size_t t = s + 1; t < m.size(); ++t) {
                    double dd = dist(pts[m[s]], pts[m[t]]);
                    if (dd < best) {
                        best = dd;
                        bi = m[s];
                        bj = m[t];
                    }
                }
            }
            if (bi > bj) std::swap(bi, bj);
            if (bi != std::min(cand.a_idx, cand.b_idx) || bj != std::max(cand.a_idx, cand.b_idx)) {
                throw std::logic_error("disc candidate witness failed validation");
            }
        }
    }
    return out;
}

CandidateSet short_candidates(const std::vector<Point>& pts, const Disc& d, double tau,
                              const EnumerationLimits& lim) {
    if (!(tau > 0)) throw std::invalid_argument("short_candidates: tau must be positive");
    CandidateSet all = disc_candidates(pts, d, lim);
    CandidateSet out;
    out.source = "disc";
    for (const auto& c : all.pairs) {
        if (c.pair.length <= tau) out.pairs.push_back(c);
    }
    finalize(out);
    return out;
}

// ---------------------------------------------------------------------------
// Generic arrangement sampling
// ---------------------------------------------------------------------------

namespace {

struct Ray {
    Point o;
    Vec dir;
};

std::optional<Point> ray_ray_intersection(const Ray& r1, const Ray& r2) {
    double den = cross(r1.dir, r2.dir);
    if (std::fabs(den) < 1e-15) return std::nullopt;
    Vec d = r2.o - r1.o;
    double t1 = cross(d, r2.dir) / den;
    double t2 = cross(d, r1.dir) / den;
    if (t1 < 0 || t2 < 0) return std::nullopt;
    return r1.o + r1.dir * t1;
}

// Boundary rays of the reflected-shape translate anchored at s.
std::vector<Ray> reflected_boundary_rays(const Shape& shape, Point s) {
    if (const auto* w = std::get_if<Wedge>(&shape)) {
        Point o{s.x - w->apex.x, s.y - w->apex.y};
        return {{o, -w->dir1}, {o, -w->dir2}};
    }
    if (const auto* c = std::get_if<CoWedge>(&shape)) {
        Point o{s.x - c->apex.x, s.y - c->apex.y};
        return {{o, -c->dir1}, {o, -c->dir2}};
    }
    return {};
}

// A point of the base shape well inside it, so that s - rep witnesses s.
Point shape_rep(const Shape& shape) {
    if (const auto* w = std::get_if<Wedge>(&shape)) {
        double half = 0.5 * w->angle();
        double base = std::atan2(w->dir1.y, w->dir1.x);
        return {w->apex.x + std::cos(base + half), w->apex.y + std::sin(base + half)};
    }
    if (const auto* c = std::get_if<CoWedge>(&shape)) {
        double half = 0.5 * c->angle();
        double base = std::atan2(c->dir1.y, c->dir1.x);
        return {c->apex.x + std::cos(base + half), c->apex.y + std::sin(base + half)};
    }
    if (const auto* d = std::get_if<Disc>(&shape)) return d->center;
    if (const auto* hp = std::get_if<Halfplane>(&shape)) {
        return {hp->anchor.x + hp->normal.x, hp->anchor.y + hp->normal.y};
    }
    throw std::invalid_argument("shape_rep: unsupported shape");
}

}  // namespace

CandidateSet arrangement_sample_candidates(const std::vector<Point>& pts, const Shape& shape,
                                           const EnumerationLimits& lim) {
    if (pts.size() > lim.max_n_sampling) {
        throw std::invalid_argument("arrangement_sample_candidates: dataset exceeds sampling cap");
    }
    CandidateSet out;
    out.source = std::holds_alternative<Wedge>(shape)     ? "wedge"
                 : std::holds_alternative<CoWedge>(shape) ? "cowedge"
                 : std::holds_alternative<Disc>(shape)    ? "disc"
                                                          : "halfplane";
    const int n = static_cast<int>(pts.size());
    if (n < 2) return out;

    // Arrangement vertices of the reflected-translate boundaries.
    std::vector<Point> verts;
    if (const auto* d = std::get_if<Disc>(&shape)) {
        std::vector<Point> ctr(pts.size());
        for (int i = 0; i < n; ++i) ctr[i] = {pts[i].x - d->center.x, pts[i].y - d->center.y};
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (Point v : circle_circle_intersections(ctr[i], d->radius, ctr[j], d->radius)) {
                    verts.push_back(v);
                }
            }
        }
    } else if (!std::holds_alternative<Halfplane>(shape)) {
        std::vector<Ray> rays;
        for (int i = 0; i < n; ++i) {
            for (const Ray& r : reflected_boundary_rays(shape, pts[i])) rays.push_back(r);
        }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                if (auto v = ray_ray_intersection(rays[i], rays[j])) verts.push_back(*v);
            }
        }
    }
    // Halfplane translates have parallel boundaries: no vertices.

    double eps_cell = verts.empty() ? 0.0 : 1e-4 * min_positive_distance(verts);
    double spread = 1.0;
    {
        double lox = pts[0].x, hix = pts[0].x, loy = pts[0].y, hiy = pts[0].y;
        for (Point p : pts) {
            lox = std::min(lox, p.x); hix = std::max(hix, p.x);
            loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
        }
        spread = std::max({hix - lox, hiy - loy, 1.0});
    }
    if (!(eps_cell > 0)) eps_cell = 1e-7 * spread;

    std::vector<Point> samples;
    for (Point v : verts) {
        for (double sx : {-1.0, 1.0}) {
            for (double sy : {-1.0, 1.0}) samples.push_back({v.x + sx * eps_cell, v.y + sy * eps_cell});
        }
    }
    Point rep = shape_rep(shape);
    for (Point s : pts) {
        Point base{s.x - rep.x, s.y - rep.y};
        for (double sx : {-1.0, 1.0}) {
            for (double sy : {-1.0, 1.0}) {
                samples.push_back({base.x + sx * eps_cell, base.y + sy * eps_cell});
            }
        }
    }
    // One far sample per unbounded direction.
    double rfar = 6.0 * spread + 10.0;
    for (int k = 0; k < 16; ++k) {
        double a = 2 * kPi * k / 16;
        samples.push_back({rfar * std::cos(a), rfar * std::sin(a)});
    }

    auto sorted = all_pairs_sorted(pts);
    std::unordered_map<PairKey, Point, PairKeyHash> found;
    std::vector<char> member(pts.size(), 0);
    for (Point q : samples) {
        for (int i = 0; i < n; ++i) member[i] = shape_contains(shape, pts[i], q) ? 1 : 0;
        int r = first_contained_pair(sorted, member);
        if (r < 0) continue;
        found.emplace(PairKey{sorted[r].i, sorted[r].j}, q);
    }

    for (const auto& [key, witness] : found) {
        CandidatePair cand;
        cand.pair = PointPair(pts[key.i], pts[key.j]);
        cand.a_idx = key.i;
        cand.b_idx = key.j;
        cand.witness = witness;
        if (std::holds_alternative<Wedge>(shape)) {
            cand.cls = classify(std::get<Wedge>(shape), cand.pair);
        }
        out.pairs.push_back(cand);
    }
    finalize(out);

    if (lim.validate_witnesses) {
        for (const auto& cand : out.pairs) validate_witness(pts, shape, cand);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Halfplane candidacy
// ---------------------------------------------------------------------------

bool halfplane_candidate(const std::vector<Point>& pts, const PointPair& pair) {
    const int n = static_cast<int>(pts.size());
    if (n < 2) return false;
    if (pts.size() > 600) {
        throw std::invalid_argument("halfplane_candidate: dataset too large for direction sweep");
    }
    auto sorted = all_pairs_sorted(pts);

    std::vector<double> angles;
    angles.reserve(4 * pts.size() + 8);
    for (Point s : pts) {
        for (Point e : {pair.a, pair.b}) {
            Vec v = s - e;
            if (v.norm() < 1e-12) continue;
            double a = std::atan2(v.y, v.x);
            angles.push_back(a + kPi / 2);
            angles.push_back(a - kPi / 2);
        }
    }
    for (int k = 0; k < 8; ++k) angles.push_back(2 * kPi * k / 8);
    for (double& a : angles) {
        while (a < 0) a += 2 * kPi;
        while (a >= 2 * kPi) a -= 2 * kPi;
    }
    std::sort(angles.begin(), angles.end());

    std::vector<char> member(pts.size(), 0);
    auto test_direction = [&](double theta) {
        Vec u{std::cos(theta), std::sin(theta)};
        double m = std::min(dot(u, pair.a - Point{0, 0}), dot(u, pair.b - Point{0, 0}));
        for (int i = 0; i < n; ++i) {
            member[i] = dot(u, pts[i] - Point{0, 0}) >= m - 1e-12 ? 1 : 0;
        }
        int r = first_contained_pair(sorted, member);
        if (r < 0) return false;
        return same_pair(PointPair(pts[sorted[r].i], pts[sorted[r].j]), pair);
    };

    for (std::size_t k = 0; k < angles.size(); ++k) {
        double a0 = angles[k];
        double a1 = k + 1 < angles.size() ? angles[k + 1] : angles[0] + 2 * kPi;
        if (test_direction(0.5 * (a0 + a1))) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Sector split / crossing scan
// ---------------------------------------------------------------------------

std::array<CandidateSet, 8> split_by_sector(const CandidateSet& phi_star) {
    std::array<CandidateSet, 8> out;
    for (auto& s : out) s.source = phi_star.source;
    for (const auto& c : phi_star.pairs) {
        if (c.r_idx < 0 || c.rp_idx < 0) {
            throw std::invalid_argument("split_by_sector: candidate lacks branch labels");
        }
        Point rpt = c.r_idx == c.a_idx ? c.pair.a : c.pair.b;
        Point rppt = c.rp_idx == c.a_idx ? c.pair.a : c.pair.b;
        Vec v = rppt - rpt;
        double a = std::atan2(v.y, v.x);
        if (a < 0) a += 2 * kPi;
        int sector = std::min(7, static_cast<int>(a / (kPi / 4)));
        out[static_cast<std::size_t>(sector)].pairs.push_back(c);
    }
    for (auto& s : out) finalize(s);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const CandidateSet& phi,
                                                                bool flat_only) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < phi.pairs.size(); ++i) {
        if (flat_only && phi.pairs[i].cls != PairClass::Flat) continue;
        for (std::size_t j = i + 1; j < phi.pairs.size(); ++j) {
            if (flat_only && phi.pairs[j].cls != PairClass::Flat) continue;
            if (segments_cross(phi.pairs[i].pair, phi.pairs[j].pair)) out.push_back({i, j});
        }
    }
    return out;
}

}  // namespace rcp
