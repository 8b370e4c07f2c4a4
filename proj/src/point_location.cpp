#include "rcp/point_location.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

namespace rcp {

namespace {

double norm_angle(double a) {
    while (a < 0) a += 2 * kPi;
    while (a >= 2 * kPi) a -= 2 * kPi;
    return a;
}

bool lex_less(Point p, Point q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }

}  // namespace

CurveFragment CurveFragment::segment(Point a, Point b) {
    CurveFragment f;
    f.kind = Kind::Segment;
    f.a = a;
    f.b = b;
    return f;
}

CurveFragment CurveFragment::arc(Point center, double radius, Point a, Point b) {
    CurveFragment f;
    f.kind = Kind::Arc;
    f.center = center;
    f.radius = radius;
    f.a = a;
    f.b = b;
    return f;
}

std::vector<CurveFragment> split_monotone(const CurveFragment& edge) {
    if (points_equal(edge.a, edge.b, 0.0)) {
        throw std::invalid_argument("split_monotone: zero-length edge");
    }
    if (edge.kind == CurveFragment::Kind::Segment) {
        return {edge};
    }
    const Point c = edge.center;
    const double r = edge.radius;
    double a0 = norm_angle(std::atan2(edge.a.y - c.y, edge.a.x - c.x));
    double a1 = norm_angle(std::atan2(edge.b.y - c.y, edge.b.x - c.x));
    double span = norm_angle(a1 - a0);
    if (span <= 0) span = 2 * kPi;  // a == b would be a full circle; rejected above

    std::vector<double> cuts;  // angles along the arc, relative to a0
    for (int k = 0; k < 4; ++k) {
        double ext = norm_angle(k * kPi / 2 - a0);
        if (ext > 1e-12 && ext < span - 1e-12) cuts.push_back(ext);
    }
    std::sort(cuts.begin(), cuts.end());

    std::vector<CurveFragment> out;
    Point prev = edge.a;
    for (double rel : cuts) {
        double ang = a0 + rel;
        Point p{c.x + r * std::cos(ang), c.y + r * std::sin(ang)};
        out.push_back(CurveFragment::arc(c, r, prev, p));
        prev = p;
    }
    out.push_back(CurveFragment::arc(c, r, prev, edge.b));
    return out;
}

std::vector<CurveFragment> split_full_circle(Point c, double r) {
    Point e{c.x + r, c.y}, n{c.x, c.y + r}, w{c.x - r, c.y}, s{c.x, c.y - r};
    return {CurveFragment::arc(c, r, e, n), CurveFragment::arc(c, r, n, w),
            CurveFragment::arc(c, r, w, s), CurveFragment::arc(c, r, s, e)};
}

std::vector<Point> circle_circle_intersections(Point c1, double r1, Point c2, double r2) {
    Vec d = c2 - c1;
    double dd = d.norm();
    if (dd <= 1e-15) return {};
    if (dd > r1 + r2 || dd < std::fabs(r1 - r2)) return {};
    double a = (dd * dd + r1 * r1 - r2 * r2) / (2 * dd);
    double h2 = r1 * r1 - a * a;
    Vec u{d.x / dd, d.y / dd};
    Point mid = c1 + u * a;
    if (h2 <= 0) return {mid};
    double h = std::sqrt(h2);
    Vec pp = perp(u);
    return {mid + pp * h, mid - pp * h};
}

// ---------------------------------------------------------------------------
// Locator internals
// ---------------------------------------------------------------------------

double Locator::frag_y_at(const Frag& f, double x) const {
    if (!f.is_arc) {
        double t = (x - f.a.x) / (f.b.x - f.a.x);
        t = std::clamp(t, 0.0, 1.0);
        return f.a.y + t * (f.b.y - f.a.y);
    }
    double dx = std::clamp(x - f.center.x, -f.radius, f.radius);
    double s = std::sqrt(std::max(0.0, f.radius * f.radius - dx * dx));
    return f.upper ? f.center.y + s : f.center.y - s;
}

bool Locator::above_frag(const Frag& f, Point p) const {
    if (!f.is_arc) {
        return orient_sign(f.a, f.b, p) > 0;
    }
    return p.y > frag_y_at(f, p.x);
}

double Locator::tangent_angle_right(const Frag& f, Point p) const {
    if (!f.is_arc) {
        return std::atan2(f.b.y - f.a.y, f.b.x - f.a.x);
    }
    Vec t{-(p.y - f.center.y), p.x - f.center.x};
    if (std::fabs(t.x) <= 1e-12 * f.radius) {
        bool left_extreme = p.x < f.center.x;
        if (left_extreme) return f.upper ? kPi / 2 : -kPi / 2;
        return f.upper ? -kPi / 2 : kPi / 2;
    }
    Vec dir = t.x > 0 ? t : -t;
    return std::atan2(dir.y, dir.x);
}

Point Locator::frag_point_at(const Frag& f, double t) const {
    if (!f.is_arc) {
        return {f.a.x + t * (f.b.x - f.a.x), f.a.y + t * (f.b.y - f.a.y)};
    }
    double aa = std::atan2(f.a.y - f.center.y, f.a.x - f.center.x);
    double ab = std::atan2(f.b.y - f.center.y, f.b.x - f.center.x);
    // The fragment is x-monotone, so the angular interval from a to b is the
    // short way around within one semicircle.
    double d = ab - aa;
    if (d > kPi) d -= 2 * kPi;
    if (d < -kPi) d += 2 * kPi;
    double ang = aa + t * d;
    return {f.center.x + f.radius * std::cos(ang), f.center.y + f.radius * std::sin(ang)};
}

int Locator::new_trap() {
    traps_.push_back(Trap{});
    return static_cast<int>(traps_.size()) - 1;
}

int Locator::new_leaf(int trap) {
    Node n;
    n.type = Node::Type::Leaf;
    n.trap = trap;
    nodes_.push_back(n);
    traps_[trap].leaf = static_cast<int>(nodes_.size()) - 1;
    return traps_[trap].leaf;
}

int Locator::descend(Point p) const {
    int cur = root_;
    while (nodes_[cur].type != Node::Type::Leaf) {
        const Node& n = nodes_[cur];
        if (n.type == Node::Type::X) {
            cur = lex_less(p, n.p) ? n.left : n.right;
        } else {
            cur = above_frag(frags_[n.frag], p) ? n.left : n.right;
        }
    }
    return nodes_[cur].trap;
}

int Locator::locate_left_endpoint(const Frag& f) const {
    Point p = f.a;
    int cur = root_;
    while (nodes_[cur].type != Node::Type::Leaf) {
        const Node& n = nodes_[cur];
        if (n.type == Node::Type::X) {
            // Equal endpoint: the fragment continues rightward.
            cur = lex_less(p, n.p) ? n.left : n.right;
        } else {
            const Frag& g = frags_[n.frag];
            bool up;
            if (p == g.a) {
                up = tangent_angle_right(f, p) > tangent_angle_right(g, p);
            } else if (p == g.b) {
                // f starts where g ends; compare slopes approaching from the left.
                up = tangent_angle_right(f, p) > tangent_angle_right(g, p);
            } else {
                up = above_frag(g, p);
            }
            cur = up ? n.left : n.right;
        }
    }
    return nodes_[cur].trap;
}

std::vector<int> Locator::find_walked(const Frag& f, int) const {
    // Does this trapezoid contain the initial portion of f just right of f.a?
    auto holds_start = [&](int tid) {
        const Trap& t = traps_[tid];
        if (lex_less(f.a, t.leftp) || !lex_less(f.a, t.rightp)) return false;
        double hi = std::min(t.rightp.x, f.b.x);
        if (!(hi > f.a.x)) return false;
        Point probe{0.5 * (f.a.x + hi), 0.0};
        probe.y = frag_y_at(f, probe.x);
        bool below_top = t.top < 0 || !above_frag(frags_[t.top], probe);
        bool above_bot = t.bot < 0 || above_frag(frags_[t.bot], probe);
        return below_top && above_bot;
    };
    int cur = locate_left_endpoint(f);
    if (!holds_start(cur)) {
        // The DAG descent can land next to the target when f.a coincides with
        // existing vertices. Search the neighborhood.
        std::vector<int> queue{cur};
        std::vector<char> seen(traps_.size(), 0);
        seen[static_cast<std::size_t>(cur)] = 1;
        int found = -1;
        for (std::size_t head = 0; head < queue.size() && head < 64; ++head) {
            const Trap& t = traps_[queue[head]];
            for (int nb : {t.ur, t.lr, t.ul, t.ll}) {
                if (nb < 0 || seen[static_cast<std::size_t>(nb)]) continue;
                seen[static_cast<std::size_t>(nb)] = 1;
                if (holds_start(nb)) {
                    found = nb;
                    break;
                }
                queue.push_back(nb);
            }
            if (found >= 0) break;
        }
        if (found < 0) throw std::runtime_error("Locator: lost fragment start");
        cur = found;
    }
    std::vector<int> walked;
    walked.push_back(cur);
    while (lex_less(traps_[cur].rightp, f.b)) {
        const Trap& t = traps_[cur];
        int next = above_frag(f, t.rightp) ? t.lr : t.ur;
        if (next < 0) throw std::runtime_error("Locator: inconsistent trapezoid walk");
        walked.push_back(next);
        cur = next;
    }
    return walked;
}

void Locator::insert_fragment(int fid) {
    const Frag f = frags_[fid];
    const Point p = f.a, q = f.b;
    std::vector<int> walked = find_walked(f, fid);
    const int k = static_cast<int>(walked.size()) - 1;

    const Trap first = traps_[walked.front()];
    const Trap last = traps_[walked.back()];
    const bool needL = lex_less(first.leftp, p);
    const bool needR = lex_less(q, last.rightp);

    int L = -1, R = -1;
    if (needL) {
        L = new_trap();
        traps_[L].top = first.top;
        traps_[L].bot = first.bot;
        traps_[L].leftp = first.leftp;
        traps_[L].rightp = p;
        traps_[L].ul = first.ul;
        traps_[L].ll = first.ll;
        new_leaf(L);
    }
    if (needR) {
        R = new_trap();
        traps_[R].top = last.top;
        traps_[R].bot = last.bot;
        traps_[R].leftp = q;
        traps_[R].rightp = last.rightp;
        traps_[R].ur = last.ur;
        traps_[R].lr = last.lr;
        new_leaf(R);
    }

    // Upper and lower pieces along the fragment, merged across walked traps.
    std::vector<int> upper_of(walked.size()), lower_of(walked.size());
    int curU = new_trap();
    traps_[curU].top = first.top;
    traps_[curU].bot = fid;
    traps_[curU].leftp = p;
    new_leaf(curU);
    int curD = new_trap();
    traps_[curD].top = fid;
    traps_[curD].bot = first.bot;
    traps_[curD].leftp = p;
    new_leaf(curD);
    upper_of[0] = curU;
    lower_of[0] = curD;

    for (int i = 1; i <= k; ++i) {
        const Trap prev = traps_[walked[i - 1]];  // by value: new_trap() may reallocate
        const Trap here = traps_[walked[i]];
        Point v = prev.rightp;
        if (above_frag(f, v)) {
            // Upper piece closes at v; lower continues.
            traps_[curU].rightp = v;
            int nU = new_trap();
            traps_[nU].top = here.top;
            traps_[nU].bot = fid;
            traps_[nU].leftp = v;
            new_leaf(nU);
            // Chain along the fragment (shared bottom f).
            traps_[curU].lr = nU;
            traps_[nU].ll = curU;
            // Outer transfers across v.
            if (prev.ur >= 0) {
                traps_[curU].ur = prev.ur;
                traps_[prev.ur].ul = curU;
            }
            if (here.ul >= 0) {
                traps_[nU].ul = here.ul;
                traps_[here.ul].ur = nU;
            }
            curU = nU;
        } else {
            traps_[curD].rightp = v;
            int nD = new_trap();
            traps_[nD].top = fid;
            traps_[nD].bot = here.bot;
            traps_[nD].leftp = v;
            new_leaf(nD);
            traps_[curD].ur = nD;
            traps_[nD].ul = curD;
            if (prev.lr >= 0) {
                traps_[curD].lr = prev.lr;
                traps_[prev.lr].ll = curD;
            }
            if (here.ll >= 0) {
                traps_[nD].ll = here.ll;
                traps_[here.ll].lr = nD;
            }
            curD = nD;
        }
        upper_of[i] = curU;
        lower_of[i] = curD;
    }
    traps_[curU].rightp = q;
    traps_[curD].rightp = q;

    // Left-side wiring.
    int firstU = upper_of[0], firstD = lower_of[0];
    if (needL) {
        traps_[L].ur = firstU;
        traps_[L].lr = firstD;
        traps_[firstU].ul = L;
        traps_[firstD].ll = L;
        if (first.ul >= 0) traps_[first.ul].ur = L;
        if (first.ll >= 0) traps_[first.ll].lr = L;
    } else {
        if (first.ul >= 0) {
            traps_[firstU].ul = first.ul;
            traps_[first.ul].ur = firstU;
        }
        if (first.ll >= 0) {
            traps_[firstD].ll = first.ll;
            traps_[first.ll].lr = firstD;
        }
    }
    // Right-side wiring.
    if (needR) {
        traps_[curU].ur = R;
        traps_[curD].lr = R;
        traps_[R].ul = curU;
        traps_[R].ll = curD;
        if (last.ur >= 0) traps_[last.ur].ul = R;
        if (last.lr >= 0) traps_[last.lr].ll = R;
    } else {
        if (last.ur >= 0) {
            traps_[curU].ur = last.ur;
            traps_[last.ur].ul = curU;
        }
        if (last.lr >= 0) {
            traps_[curD].lr = last.lr;
            traps_[last.lr].ll = curD;
        }
    }

    // History DAG: overwrite each walked trap's leaf node in place.
    for (int i = 0; i <= k; ++i) {
        const int tid = walked[i];
        const int node = traps_[tid].leaf;
        int ynode;
        {
            Node yn;
            yn.type = Node::Type::Y;
            yn.frag = fid;
            yn.left = traps_[upper_of[i]].leaf;
            yn.right = traps_[lower_of[i]].leaf;
            nodes_.push_back(yn);
            ynode = static_cast<int>(nodes_.size()) - 1;
        }
        int sub = ynode;
        if (i == k && needR) {
            Node xn;
            xn.type = Node::Type::X;
            xn.p = q;
            xn.left = sub;
            xn.right = traps_[R].leaf;
            nodes_.push_back(xn);
            sub = static_cast<int>(nodes_.size()) - 1;
        }
        if (i == 0 && needL) {
            Node xn;
            xn.type = Node::Type::X;
            xn.p = p;
            xn.left = traps_[L].leaf;
            xn.right = sub;
            nodes_.push_back(xn);
            sub = static_cast<int>(nodes_.size()) - 1;
        }
        nodes_[node] = nodes_[sub];  // splice subtree root into the old leaf slot
        traps_[tid].dead = true;
    }
}

Point Locator::trap_sample(const Trap& t) const {
    double x0 = t.leftp.x, x1 = t.rightp.x;
    double xm = (x1 - x0 > 1e-13) ? 0.5 * (x0 + x1) : x0;
    double yt = t.top >= 0 ? frag_y_at(frags_[t.top], xm) : box_hi_.y;
    double yb = t.bot >= 0 ? frag_y_at(frags_[t.bot], xm) : box_lo_.y;
    return {xm, 0.5 * (yt + yb)};
}

void Locator::assign_labels(const std::function<int(Point)>& face_label) {
    for (auto& t : traps_) {
        if (t.dead) continue;
        t.label = face_label(unrotate(trap_sample(t)));
    }
}

// ---------------------------------------------------------------------------
// Build
// ---------------------------------------------------------------------------

namespace {

// Interior crossing detection for the optional validation pass.
bool fragments_cross(const CurveFragment& f, const CurveFragment& g) {
    auto interior = [](Point p, const CurveFragment& h) {
        return !points_equal(p, h.a, 1e-9) && !points_equal(p, h.b, 1e-9);
    };
    auto on_arc = [](Point p, const CurveFragment& h) {
        double aa = norm_angle(std::atan2(h.a.y - h.center.y, h.a.x - h.center.x));
        double ab = norm_angle(std::atan2(h.b.y - h.center.y, h.b.x - h.center.x));
        double ap = norm_angle(std::atan2(p.y - h.center.y, p.x - h.center.x));
        double span = norm_angle(ab - aa);
        double off = norm_angle(ap - aa);
        return off <= span + 1e-9;
    };
    using K = CurveFragment::Kind;
    if (f.kind == K::Segment && g.kind == K::Segment) {
        try {
            return segments_cross(PointPair(f.a, f.b), PointPair(g.a, g.b));
        } catch (const std::invalid_argument&) {
            return true;  // collinear overlap counts as crossing input
        }
    }
    if (f.kind == K::Arc && g.kind == K::Arc) {
        for (Point p : circle_circle_intersections(f.center, f.radius, g.center, g.radius)) {
            if (interior(p, f) && interior(p, g) && on_arc(p, f) && on_arc(p, g)) return true;
        }
        return false;
    }
    const CurveFragment& seg = f.kind == K::Segment ? f : g;
    const CurveFragment& arc = f.kind == K::Segment ? g : f;
    auto chord = disc_line_chord(Disc(arc.center, arc.radius), Line{seg.a, seg.b});
    if (!chord) return false;
    for (Point p : {chord->a, chord->b}) {
        double t = dot(p - seg.a, seg.b - seg.a) / dist2(seg.a, seg.b);
        if (t <= 1e-9 || t >= 1 - 1e-9) continue;
        if (interior(p, seg) && interior(p, arc) && on_arc(p, arc)) return true;
    }
    return false;
}

}  // namespace

Locator Locator::build(const std::vector<CurveFragment>& fragments,
                       const std::function<int(Point)>& face_label, std::uint64_t seed,
                       int validate_crossings) {
    Locator loc;
    if (fragments.empty()) {
        loc.default_label_ = face_label(Point{0, 0});
        return loc;
    }

    bool validate = validate_crossings == 1 ||
                    (validate_crossings < 0 && fragments.size() <= 1200);
    if (validate) {
        for (std::size_t i = 0; i < fragments.size(); ++i) {
            for (std::size_t j = i + 1; j < fragments.size(); ++j) {
                if (fragments_cross(fragments[i], fragments[j])) {
                    throw std::invalid_argument("Locator::build: fragments " + std::to_string(i) +
                                                " and " + std::to_string(j) + " cross");
                }
            }
        }
    }

    // Pick an internal rotation that leaves no segment near-vertical.
    double angle = 0.0;
    for (int attempt = 0; attempt < 48; ++attempt) {
        double cand = 0.202411586 + attempt * 0.0734561289;
        double c = std::cos(cand), s = std::sin(cand);
        bool ok = true;
        for (const auto& fr : fragments) {
            if (fr.kind != CurveFragment::Kind::Segment) continue;
            double dx = c * (fr.b.x - fr.a.x) - s * (fr.b.y - fr.a.y);
            double dy = s * (fr.b.x - fr.a.x) + c * (fr.b.y - fr.a.y);
            double len = std::hypot(dx, dy);
            if (len == 0.0 || std::fabs(dx) < 1e-4 * len) {
                ok = false;
                break;
            }
        }
        if (ok) {
            angle = cand;
            break;
        }
        if (attempt == 47) throw std::runtime_error("Locator::build: no valid rotation found");
    }
    loc.cosr_ = std::cos(angle);
    loc.sinr_ = std::sin(angle);

    // Internal fragments: rotate, then split rotated arcs at x extrema.
    for (const auto& fr : fragments) {
        if (fr.kind == CurveFragment::Kind::Segment) {
            Frag g;
            g.is_arc = false;
            Point ra = loc.rotate(fr.a), rb = loc.rotate(fr.b);
            if (lex_less(rb, ra)) std::swap(ra, rb);
            g.a = ra;
            g.b = rb;
            loc.frags_.push_back(g);
        } else {
            CurveFragment rot = CurveFragment::arc(loc.rotate(fr.center), fr.radius,
                                                   loc.rotate(fr.a), loc.rotate(fr.b));
            for (const auto& piece : split_monotone(rot)) {
                Frag g;
                g.is_arc = true;
                g.center = piece.center;
                g.radius = piece.radius;
                Point ra = piece.a, rb = piece.b;
                if (lex_less(rb, ra)) std::swap(ra, rb);
                g.a = ra;
                g.b = rb;
                double midx = 0.5 * (ra.x + rb.x);
                double midy = 0.5 * (ra.y + rb.y);
                g.upper = midy >= g.center.y ||
                          (std::fabs(midy - g.center.y) < 1e-12 && midx < g.center.x);
                // Reclassify via the higher-precision test on the endpoints.
                double sa = ra.y - g.center.y, sb = rb.y - g.center.y;
                if (std::fabs(sa) > std::fabs(sb)) {
                    g.upper = sa > 0;
                } else if (std::fabs(sb) > 0) {
                    g.upper = sb > 0;
                }
                loc.frags_.push_back(g);
            }
        }
    }

    // Bounding box with margin.
    double lox = 1e300, loy = 1e300, hix = -1e300, hiy = -1e300;
    auto grow = [&](Point p) {
        lox = std::min(lox, p.x);
        loy = std::min(loy, p.y);
        hix = std::max(hix, p.x);
        hiy = std::max(hiy, p.y);
    };
    for (const auto& g : loc.frags_) {
        grow(g.a);
        grow(g.b);
        if (g.is_arc) {
            grow({g.center.x - g.radius, g.center.y - g.radius});
            grow({g.center.x + g.radius, g.center.y + g.radius});
        }
    }
    double span = std::max({hix - lox, hiy - loy, 1.0});
    double margin = 0.5 * span + 1.0;
    loc.box_lo_ = {lox - margin, loy - margin};
    loc.box_hi_ = {hix + margin, hiy + margin};
    loc.tie_eps_ = 1e-12 * span;

    // Initial trapezoid covering the box.
    int t0 = loc.new_trap();
    loc.traps_[t0].leftp = loc.box_lo_;
    loc.traps_[t0].rightp = loc.box_hi_;
    loc.root_ = loc.new_leaf(t0);

    std::vector<int> order(loc.frags_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    for (int fid : order) loc.insert_fragment(fid);

    loc.assign_labels(face_label);
    return loc;
}

int Locator::locate(Point q) const { return locate_with_depth(q).first; }

std::pair<int, int> Locator::locate_with_depth(Point q) const {
    if (nodes_.empty()) return {default_label_, 0};
    Point nudged{q.x + tie_eps_, q.y + tie_eps_};
    Point p = rotate(nudged);
    p.x = std::clamp(p.x, box_lo_.x + tie_eps_, box_hi_.x - tie_eps_);
    p.y = std::clamp(p.y, box_lo_.y + tie_eps_, box_hi_.y - tie_eps_);
    int cur = root_;
    int depth = 0;
    while (nodes_[cur].type != Node::Type::Leaf) {
        const Node& n = nodes_[cur];
        if (n.type == Node::Type::X) {
            cur = lex_less(p, n.p) ? n.left : n.right;
        } else {
            cur = above_frag(frags_[n.frag], p) ? n.left : n.right;
        }
        ++depth;
    }
    return {traps_[nodes_[cur].trap].label, depth};
}

std::size_t Locator::trapezoid_count() const {
    std::size_t c = 0;
    for (const auto& t : traps_) {
        if (!t.dead) ++c;
    }
    return c;
}

void Locator::dump_svg(const std::string& path) const {
    std::ofstream out(path);
    double w = box_hi_.x - box_lo_.x, h = box_hi_.y - box_lo_.y;
    out << "<svg xmlns='http://www.w3.org/2000/svg' viewBox='" << box_lo_.x << " " << -box_hi_.y
        << " " << w << " " << h << "'>\n";
    double sw = 0.0015 * std::max(w, h);
    for (const auto& t : traps_) {
        if (t.dead) continue;
        for (double x : {t.leftp.x, t.rightp.x}) {
            double yt = t.top >= 0 ? frag_y_at(frags_[t.top], x) : box_hi_.y;
            double yb = t.bot >= 0 ? frag_y_at(frags_[t.bot], x) : box_lo_.y;
            out << "<line x1='" << x << "' y1='" << -yb << "' x2='" << x << "' y2='" << -yt
                << "' stroke='#bbbbbb' stroke-width='" << sw << "'/>\n";
        }
    }
    for (const auto& g : frags_) {
        if (!g.is_arc) {
            out << "<line x1='" << g.a.x << "' y1='" << -g.a.y << "' x2='" << g.b.x << "' y2='"
                << -g.b.y << "' stroke='black' stroke-width='" << sw << "'/>\n";
        } else {
            out << "<path d='M " << g.a.x << " " << -g.a.y << " A " << g.radius << " " << g.radius
                << " 0 0 " << (g.upper ? 0 : 1) << " " << g.b.x << " " << -g.b.y
                << "' fill='none' stroke='black' stroke-width='" << sw << "'/>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace rcp
