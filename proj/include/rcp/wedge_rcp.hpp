#pragma once

#include "rcp/candidate_pairs.hpp"
#include "rcp/geometry.hpp"
#include "rcp/point_location.hpp"

#include <optional>

namespace rcp {

/// Linear-space, logarithmic-query structure answering closest-pair queries
/// for translates of a fixed wedge. Candidate pairs are mapped to dominance
/// corners in quadrant coordinates; their southwest quadrants are overlaid in
/// length order and the resulting staircase subdivision is searched by point
/// location.
class WedgeRcpStructure {
public:
    WedgeRcpStructure() = default;

    static WedgeRcpStructure build(const std::vector<Point>& pts, const Wedge& w,
                                   const EnumerationLimits& lim = {});

    /// Closest pair of S inside the translate W_q, or nothing.
    std::optional<PointPair> query(Point q) const;
    std::pair<std::optional<PointPair>, int> query_with_depth(Point q) const;

    const CandidateSet& candidates() const { return phi_; }
    std::size_t candidate_count() const { return phi_.pairs.size(); }
    /// Distinct vertices of the final overlay subdivision (corners plus stops).
    std::size_t subdivision_vertex_count() const { return vertex_count_; }
    /// Vertices created by the overlay steps: crossings of each new translate
    /// boundary with the previously drawn subdivision. At most two per step.
    std::size_t overlay_crossing_count() const { return crossings_; }
    /// Largest number of crossing vertices any single overlay step created.
    std::size_t max_step_crossings() const { return max_step_crossings_; }
    std::size_t fragment_count() const { return fragments_; }
    std::size_t trapezoid_count() const { return loc_.trapezoid_count(); }

private:
    Wedge w_;
    AffineMap f_;
    CandidateSet phi_;
    Locator loc_;
    std::size_t vertex_count_ = 0;
    std::size_t crossings_ = 0;
    std::size_t max_step_crossings_ = 0;
    std::size_t fragments_ = 0;
    Point clamp_lo_, clamp_hi_;
    bool has_structure_ = false;
};

}  // namespace rcp
