#pragma once

#include "rcp/geometry.hpp"
#include "rcp/oracle.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rcp {

enum class PairClass { Unclassified, Flat, Steep };

/// A pair that is the closest pair of S within at least one range of the
/// query space, together with a translate parameter witnessing that.
struct CandidatePair {
    PointPair pair;
    std::size_t index = 0;  // rank by length within its set
    PairClass cls = PairClass::Unclassified;
    Point witness;
    int a_idx = -1, b_idx = -1;  // indices into the source dataset
    // Co-wedge only: which point lies on which branch of the associated
    // translate (r_idx on the dir2 branch, rp_idx on dir1). -1 when unknown.
    int r_idx = -1, rp_idx = -1;
};

struct CandidateSet {
    std::vector<CandidatePair> pairs;  // strictly increasing lengths
    std::string source;                // "wedge" | "cowedge" | "disc" | "halfplane"
};

struct EnumerationLimits {
    std::size_t max_n_sampling = 400;
    std::size_t max_n_direct = 2000;
    bool validate_witnesses = true;
};

/// Exact candidate pairs for wedge translates, via a dominance sweep in
/// quadrant coordinates over pairs sorted by length. O(n^2 log n).
CandidateSet wedge_candidates(const std::vector<Point>& pts, const Wedge& w,
                              const EnumerationLimits& lim = {});

/// Flat/steep classification of a wedge candidate pair.
PairClass classify(const Wedge& w, const PointPair& pair);

/// Exact candidate pairs for co-wedge translates, via a sweep over the rank
/// grid of the branch-aligned frame. O(n^2 log n).
CandidateSet cowedge_candidates(const std::vector<Point>& pts, const CoWedge& c,
                                const EnumerationLimits& lim = {});

/// Exact candidate pairs for disc translates. Arrangement-vertex sampling of
/// the reflected-translate circles, evaluated with neighborhood-local oracles.
CandidateSet disc_candidates(const std::vector<Point>& pts, const Disc& d,
                             const EnumerationLimits& lim = {});

/// disc_candidates filtered to lengths at most tau.
CandidateSet short_candidates(const std::vector<Point>& pts, const Disc& d, double tau,
                              const EnumerationLimits& lim = {});

/// Generic exact enumeration: one rcp-oracle probe per cell of the arrangement
/// of reflected-shape translates. Cells are hit by perturbing every pairwise
/// boundary intersection in the four diagonal directions, far samples per
/// unbounded direction, and a perturbed sample near every input point.
CandidateSet arrangement_sample_candidates(const std::vector<Point>& pts, const Shape& shape,
                                           const EnumerationLimits& lim = {});

/// True when the pair is the closest pair of S inside some halfplane
/// (any orientation). Decided by sweeping the critical boundary directions.
bool halfplane_candidate(const std::vector<Point>& pts, const PointPair& pair);

/// Partition of a co-wedge candidate set (with r/r' labels) into the eight
/// octant sectors of the vector from r-point to r'-point.
std::array<CandidateSet, 8> split_by_sector(const CandidateSet& phi_star);

/// Pairs of phi that cross, as index pairs into phi.pairs. Empty for sets
/// obeying the flat/short non-crossing lemmas.
std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const CandidateSet& phi,
                                                                bool flat_only);

}  // namespace rcp
