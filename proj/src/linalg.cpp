#include "arclab/linalg.hpp"

#include <stdexcept>

namespace arclab {

Fe dot(const Field& f, const Vek& a, const Vek& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Fe acc = f.zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Fe eval(const Field& f, const LinearForm& alpha, const Vek& x) {
    return dot(f, alpha.coeffs, x);
}

Fe det_rows_destructive(const Field& f, std::vector<Vek>& rows) {
    const std::size_t k = rows.size();
    for (const Vek& r : rows)
        if (r.size() != k) throw std::invalid_argument("det: matrix is not square");
    Fe det = f.one();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && rows[piv][col] == f.zero()) ++piv;
        if (piv == k) return f.zero();
        if (piv != col) {
            std::swap(rows[piv], rows[col]);
            det = f.neg(det);
        }
        det = f.mul(det, rows[col][col]);
        const Fe pinv = f.inv(rows[col][col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            if (rows[r][col] == f.zero()) continue;
            const Fe factor = f.mul(rows[r][col], pinv);
            for (std::size_t c = col; c < k; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[col][c]));
        }
    }
    return det;
}

Fe det_rows(const Field& f, std::span<const Vek> rows) {
    std::vector<Vek> copy(rows.begin(), rows.end());
    return det_rows_destructive(f, copy);
}

Fe det_seq(const Field& f, std::initializer_list<std::span<const Vek>> groups) {
    std::vector<Vek> rows;
    for (const auto& g : groups)
        rows.insert(rows.end(), g.begin(), g.end());
    return det_rows_destructive(f, rows);
}

std::vector<int> rref(const Field& f, std::vector<Vek>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    for (const Vek& r : rows)
        if (r.size() != ncols) throw std::invalid_argument("rref: ragged rows");
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < rows.size(); ++col) {
        std::size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == f.zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        const Fe pinv = f.inv(rows[row][col]);
        for (std::size_t c = col; c < ncols; ++c)
            rows[row][c] = f.mul(rows[row][c], pinv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == f.zero()) continue;
            const Fe factor = rows[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[row][c]));
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank_of(const Field& f, std::vector<Vek> rows) {
    return static_cast<int>(rref(f, rows).size());
}

LinearForm normalize_form(const Field& f, Vek covector) {
    std::size_t lead = 0;
    while (lead < covector.size() && covector[lead] == f.zero()) ++lead;
    if (lead == covector.size())
        throw std::invalid_argument("cannot normalize the zero covector");
    const Fe scale = f.inv(covector[lead]);
    for (Fe& c : covector) c = f.mul(c, scale);
    return LinearForm{std::move(covector), true};
}

std::vector<LinearForm> nullspace_forms(const Field& f, const std::vector<Vek>& points) {
    if (points.empty())
        throw std::invalid_argument("nullspace: dimension unknown for empty input");
    const std::size_t k = points[0].size();
    for (const Vek& pt : points)
        if (pt.size() != k || k == 0)
            throw std::invalid_argument("nullspace: ragged or empty points");
    if (points.size() >= k)
        throw std::invalid_argument("nullspace: need at most k-1 points");

    std::vector<Vek> m = points;
    const std::vector<int> pivots = rref(f, m);
    if (pivots.size() != points.size())
        throw std::invalid_argument("nullspace: points are linearly dependent");

    std::vector<LinearForm> forms;
    std::vector<bool> is_pivot(k, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t free_col = 0; free_col < k; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vek alpha(k, f.zero());
        alpha[free_col] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            alpha[static_cast<std::size_t>(pivots[i])] = f.neg(m[i][free_col]);
        forms.push_back(normalize_form(f, std::move(alpha)));
    }
    return forms;
}

std::pair<LinearForm, LinearForm> pencil(const Field& f, const std::vector<Vek>& y_points) {
    if (y_points.empty())
        throw std::invalid_argument("pencil: expected k-2 points with k >= 2");
    const std::size_t k = y_points[0].size();
    if (y_points.size() != k - 2)
        throw std::invalid_argument("pencil: expected exactly k-2 points");
    std::vector<LinearForm> forms = nullspace_forms(f, y_points);
    return {forms[0], forms[1]};
}

std::vector<LinearForm> pencil_forms(const Field& f, const std::vector<Vek>& y_points) {
    std::vector<LinearForm> base;
    if (y_points.empty()) {
        // k = 2: the pencil through the origin is every hyperplane of the plane.
        base.push_back(LinearForm{{f.one(), f.zero()}, true});
        base.push_back(LinearForm{{f.zero(), f.one()}, true});
    } else {
        auto [a1, a2] = pencil(f, y_points);
        base.push_back(std::move(a1));
        base.push_back(std::move(a2));
    }
    const std::size_t k = base[0].coeffs.size();
    std::vector<LinearForm> out;
    out.reserve(f.q() + 1);
    for (std::uint32_t mu = 0; mu < f.q(); ++mu) {
        Vek v(k);
        for (std::size_t i = 0; i < k; ++i)
            v[i] = f.add(base[0].coeffs[i], f.mul(Fe{mu}, base[1].coeffs[i]));
        out.push_back(normalize_form(f, std::move(v)));
    }
    out.push_back(base[1]);
    return out;
}

} // namespace arclab
