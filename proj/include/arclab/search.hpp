#pragma once

#include "arclab/arc.hpp"

#include <cstdint>
#include <vector>

namespace arclab {

/// All points of F_q^k whose first nonzero coordinate is 1, in ascending
/// lexicographic order of coordinate codes. One representative per
/// projective point.
std::vector<Vek> normalized_points(const Field& f, int k);

/// Normalized points x, in lexicographic order, for which a's points plus x
/// still have every k-subset independent. a itself should be an arc.
std::vector<Vek> extend_candidates(const Arc& a);

struct SearchOptions {
    /// Start from the empty set over all normalized points instead of the
    /// standard frame. Exponentially slower; useful as a cross-check on
    /// small fields.
    bool naive = false;
    /// Node limit applied to each root branch independently, so results do
    /// not depend on the number of worker threads.
    std::uint64_t node_budget = UINT64_MAX;
    /// Wall-clock limit in seconds, 0 for none. A triggered limit is
    /// reported as budget exhaustion (and is inherently timing-dependent).
    double time_budget_seconds = 0.0;
    int jobs = 1;
};

struct SearchResult {
    int max_size = 0;
    std::vector<Vek> witness;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
    double elapsed_seconds = 0.0;
};

/// Exhaustive depth-first search for a largest arc in F_q^k.
///
/// Default mode fixes the frame e_1, ..., e_k, (1,...,1) as a root (every
/// largest arc is projectively equivalent to one through the frame) and
/// extends it with normalized points in ascending order. Candidate lists
/// shrink incrementally: after appending x, a candidate c survives only if
/// det(Z, x, c) != 0 for every (k-2)-subset Z of the current points.
///
/// Root branches are explored independently with branch-local bounds, so
/// node counts and the returned witness are identical for any `jobs`.
SearchResult max_arc_size(const Field& f, int k, const SearchOptions& opts = {});

} // namespace arclab
