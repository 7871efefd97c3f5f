// Arcs: ordered sequences of vectors in F_q^k in which every k-subset is a
// basis (equivalently, generator matrices of MDS codes, points as columns).
// Points are stored exactly as given; representatives are never rescaled.
#pragma once

#include "arclab/linalg.hpp"

#include <vector>

namespace arclab {

/// Ordered point sequence with its field and dimension. Construction checks
/// shapes and the pigeonhole size bound for k >= 2; the arc property itself
/// is checked by mds_check.
class Arc {
public:
    Arc(Field field, int k, std::vector<Vek> points);

    const Field& field() const noexcept { return field_; }
    int k() const noexcept { return k_; }
    int size() const noexcept { return static_cast<int>(points_.size()); }
    const std::vector<Vek>& points() const noexcept { return points_; }
    const Vek& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }

    /// Tangent count per (k-2)-subset: t = q + k - 1 - |S|.
    /// Negative only in the degenerate k = 1 regime (duals of frames).
    int t() const noexcept { return static_cast<int>(field_.q()) + k_ - 1 - size(); }

private:
    Field field_;
    int k_;
    std::vector<Vek> points_;
};

struct MdsResult {
    bool pass = false;
    /// Lexicographically first index set whose k points are dependent; empty on pass.
    std::vector<int> witness;
};

/// Incremental check: each point against every (k-1)-subset of its
/// predecessors. On failure the witness comes from a full lexicographic scan.
MdsResult mds_check(const Field& f, int k, const std::vector<Vek>& points);
MdsResult mds_check(const Arc& a);

/// Normal rational curve: (1, s, ..., s^{k-1}) for every s in code order,
/// then (0, ..., 0, 1). Size q+1. Requires 2 <= k <= q.
Arc nrc(const Field& f, int k);

/// Char-2 plane hyperoval: the conic points (1, s, s^2), then (0,0,1),
/// then the nucleus (0,1,0). Size q+2, k = 3.
Arc hyperoval(const Field& f);

/// e_1, ..., e_k followed by the all-ones vector; size k+1, an arc over any field.
Arc bush_frame(const Field& f, int k);

/// Columns of an (n-k) x n matrix H with G H^T = 0, where G has the arc's
/// points as columns. Pivot order is deterministic, so the output is
/// reproducible. The dual of an MDS arc is MDS.
Arc dual_arc(const Arc& a);

/// Classification of the q+1 pencil hyperplanes through span(Y), |Y| = k-2:
/// each contains at most one point of S beyond Y (else the input is not an
/// arc and the census throws). Unisecants pair the form with its extra point.
struct TangentCensus {
    int tangent_count = 0;
    std::vector<LinearForm> tangents;
    struct Unisecant {
        LinearForm form;
        int point;
    };
    std::vector<Unisecant> unisecants;
};

TangentCensus secant_tangent_census(const Arc& a, const std::vector<int>& y_indices);

} // namespace arclab
