#include "arclab/arc.hpp"

#include "arclab/combi.hpp"

#include <algorithm>
#include <stdexcept>

namespace arclab {

Arc::Arc(Field field, int k, std::vector<Vek> points)
    : field_(std::move(field)), k_(k), points_(std::move(points)) {
    if (k_ < 1) throw std::invalid_argument("arc: dimension must be >= 1");
    for (const Vek& pt : points_) {
        if (pt.size() != static_cast<std::size_t>(k_))
            throw std::invalid_argument("arc: point length differs from k");
        for (Fe c : pt)
            if (c.code >= field_.q())
                throw std::invalid_argument("arc: element code out of range");
    }
    // Through any (k-2)-subset pass q+1 hyperplanes, each holding at most one
    // further arc point, so |S| <= q+k-1 whenever k >= 2.
    if (k_ >= 2 && t() < 0)
        throw std::invalid_argument("arc: size exceeds q+k-1");
}

namespace {

std::vector<int> lex_first_witness(const Field& f, int k, const std::vector<Vek>& points) {
    std::vector<int> witness;
    for_each_combination(static_cast<int>(points.size()), k, [&](const std::vector<int>& c) {
        if (!witness.empty()) return;
        std::vector<Vek> rows;
        rows.reserve(static_cast<std::size_t>(k));
        for (int i : c) rows.push_back(points[static_cast<std::size_t>(i)]);
        if (det_rows_destructive(f, rows) == f.zero()) witness = c;
    });
    return witness;
}

} // namespace

MdsResult mds_check(const Field& f, int k, const std::vector<Vek>& points) {
    if (k < 1) throw std::invalid_argument("mds_check: dimension must be >= 1");
    for (const Vek& pt : points)
        if (pt.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("mds_check: point length differs from k");

    const int n = static_cast<int>(points.size());
    std::vector<Vek> rows;
    for (int j = k - 1; j < n; ++j) {
        bool bad = false;
        for_each_combination(j, k - 1, [&](const std::vector<int>& c) {
            if (bad) return;
            rows.clear();
            for (int i : c) rows.push_back(points[static_cast<std::size_t>(i)]);
            rows.push_back(points[static_cast<std::size_t>(j)]);
            if (det_rows_destructive(f, rows) == f.zero()) bad = true;
        });
        if (bad) return MdsResult{false, lex_first_witness(f, k, points)};
    }
    return MdsResult{true, {}};
}

MdsResult mds_check(const Arc& a) { return mds_check(a.field(), a.k(), a.points()); }

Arc nrc(const Field& f, int k) {
    if (k < 2 || static_cast<std::uint32_t>(k) > f.q())
        throw std::invalid_argument("nrc: requires 2 <= k <= q");
    std::vector<Vek> pts;
    pts.reserve(f.q() + 1);
    for (std::uint32_t s = 0; s < f.q(); ++s) {
        Vek row(static_cast<std::size_t>(k));
        Fe acc = f.one();
        for (int i = 0; i < k; ++i) {
            row[static_cast<std::size_t>(i)] = acc;
            acc = f.mul(acc, Fe{s});
        }
        pts.push_back(std::move(row));
    }
    Vek last(static_cast<std::size_t>(k), f.zero());
    last.back() = f.one();
    pts.push_back(std::move(last));
    return Arc(f, k, std::move(pts));
}

Arc hyperoval(const Field& f) {
    if (f.p() != 2)
        throw std::invalid_argument("hyperoval: defined here only in characteristic 2");
    std::vector<Vek> pts;
    pts.reserve(f.q() + 2);
    for (std::uint32_t s = 0; s < f.q(); ++s)
        pts.push_back(Vek{f.one(), Fe{s}, f.mul(Fe{s}, Fe{s})});
    pts.push_back(Vek{f.zero(), f.zero(), f.one()});
    pts.push_back(Vek{f.zero(), f.one(), f.zero()}); // nucleus
    return Arc(f, 3, std::move(pts));
}

Arc bush_frame(const Field& f, int k) {
    if (k < 2) throw std::invalid_argument("bush_frame: dimension must be >= 2");
    std::vector<Vek> pts;
    pts.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) {
        Vek e(static_cast<std::size_t>(k), f.zero());
        e[static_cast<std::size_t>(i)] = f.one();
        pts.push_back(std::move(e));
    }
    pts.emplace_back(static_cast<std::size_t>(k), f.one());
    return Arc(f, k, std::move(pts));
}

Arc dual_arc(const Arc& a) {
    const Field& f = a.field();
    const int k = a.k();
    const int n = a.size();
    if (n <= k) throw std::invalid_argument("dual_arc: need more points than the dimension");

    // Rows of G are coordinates; points sit in the columns. The kernel basis
    // of x -> Gx, taken per free column of the RREF in ascending order, gives
    // the rows of H.
    std::vector<Vek> g(static_cast<std::size_t>(k), Vek(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a[j][static_cast<std::size_t>(i)];
    const std::vector<int> pivots = rref(f, g);
    if (static_cast<int>(pivots.size()) != k)
        throw std::invalid_argument("dual_arc: points do not span F_q^k");

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Vek> h;
    h.reserve(static_cast<std::size_t>(n - k));
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        Vek v(static_cast<std::size_t>(n), f.zero());
        v[static_cast<std::size_t>(free_col)] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] =
                f.neg(g[i][static_cast<std::size_t>(free_col)]);
        h.push_back(std::move(v));
    }

    std::vector<Vek> dual_pts(static_cast<std::size_t>(n),
                              Vek(static_cast<std::size_t>(n - k)));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n - k; ++i)
            dual_pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return Arc(f, n - k, std::move(dual_pts));
}

TangentCensus secant_tangent_census(const Arc& a, const std::vector<int>& y_indices) {
    const Field& f = a.field();
    const int k = a.k();
    const int n = a.size();
    if (k < 2) throw std::invalid_argument("census: requires k >= 2");

    std::vector<int> y = y_indices;
    std::sort(y.begin(), y.end());
    if (static_cast<int>(y.size()) != k - 2)
        throw std::invalid_argument("census: Y must have exactly k-2 indices");
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] < 0 || y[i] >= n)
            throw std::invalid_argument("census: Y index out of range");
        if (i > 0 && y[i] == y[i - 1])
            throw std::invalid_argument("census: Y indices must be distinct");
    }

    std::vector<Vek> y_pts;
    y_pts.reserve(y.size());
    for (int i : y) y_pts.push_back(a[i]);

    TangentCensus census;
    for (LinearForm& form : pencil_forms(f, y_pts)) {
        int hit = -1;
        int hits = 0;
        std::size_t yi = 0;
        for (int i = 0; i < n; ++i) {
            if (yi < y.size() && y[yi] == i) {
                ++yi;
                continue;
            }
            if (eval(f, form, a[i]) == f.zero()) {
                ++hits;
                hit = i;
            }
        }
        if (hits == 0) {
            census.tangents.push_back(std::move(form));
        } else if (hits == 1) {
            census.unisecants.push_back({std::move(form), hit});
        } else {
            throw std::domain_error(
                "census: a hyperplane through Y meets two further points; not an arc");
        }
    }
    census.tangent_count = static_cast<int>(census.tangents.size());
    return census;
}

} // namespace arclab
