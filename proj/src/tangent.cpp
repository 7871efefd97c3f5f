#include "arclab/tangent.hpp"

#include "arclab/combi.hpp"

#include <algorithm>
#include <string>

namespace arclab {

std::vector<int> TangentBundle::canonical_key(const std::vector<int>& y_indices) const {
    std::vector<int> key = y_indices;
    std::sort(key.begin(), key.end());
    if (static_cast<int>(key.size()) != arc_.k() - 2)
        throw std::invalid_argument("tangent: Y must have exactly k-2 indices");
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] < 0 || key[i] >= arc_.size())
            throw std::invalid_argument("tangent: Y index out of range");
        if (i > 0 && key[i] == key[i - 1])
            throw std::invalid_argument("tangent: Y indices must be distinct");
    }
    return key;
}

const std::vector<LinearForm>& TangentBundle::forms(const std::vector<int>& y_indices) {
    std::vector<int> key = canonical_key(y_indices);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const Field& f = arc_.field();
    std::vector<Vek> y_pts;
    y_pts.reserve(key.size());
    for (int i : key) y_pts.push_back(arc_[i]);

    std::vector<LinearForm> tangents;
    for (LinearForm& form : pencil_forms(f, y_pts)) {
        bool misses_rest = true;
        std::size_t yi = 0;
        for (int i = 0; i < arc_.size() && misses_rest; ++i) {
            if (yi < key.size() && key[yi] == i) {
                ++yi;
                continue;
            }
            if (eval(f, form, arc_[i]) == f.zero()) misses_rest = false;
        }
        if (misses_rest) tangents.push_back(std::move(form));
    }
    if (static_cast<int>(tangents.size()) != arc_.t())
        throw std::domain_error("tangent: count differs from q+k-1-|S|; not an arc");
    std::sort(tangents.begin(), tangents.end(),
              [](const LinearForm& x, const LinearForm& y) { return x.coeffs < y.coeffs; });
    return cache_.emplace(std::move(key), std::move(tangents)).first->second;
}

Fe TangentBundle::value(const std::vector<int>& y_indices, const Vek& x) {
    const Field& f = arc_.field();
    Fe acc = f.one();
    for (const LinearForm& form : forms(y_indices))
        acc = f.mul(acc, eval(f, form, x));
    return acc;
}

Fe TangentBundle::value_at(const std::vector<int>& y_indices, int point_index) {
    if (point_index < 0 || point_index >= arc_.size())
        throw std::invalid_argument("tangent: point index out of range");
    return value(y_indices, arc_[point_index]);
}

void TangentBundle::prebuild() {
    for_each_combination(arc_.size(), arc_.k() - 2,
                         [&](const std::vector<int>& c) { forms(c); });
}

void TangentBundle::rescale_form(const std::vector<int>& y_indices, std::size_t form_index,
                                 Fe lambda) {
    const Field& f = arc_.field();
    if (lambda == f.zero())
        throw std::invalid_argument("tangent: rescale factor must be nonzero");
    forms(y_indices); // populate
    std::vector<LinearForm>& entry = cache_.at(canonical_key(y_indices));
    if (form_index >= entry.size())
        throw std::invalid_argument("tangent: form index out of range");
    for (Fe& c : entry[form_index].coeffs) c = f.mul(c, lambda);
    entry[form_index].normalized = false;
}

Fe segre_product(TangentBundle& tb, const SegreQuery& query) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const int k = arc.k();
    const int n = static_cast<int>(query.a.size());
    if (query.b.size() != static_cast<std::size_t>(n))
        throw SegreQueryError("segre: |A| and |B| differ", 0);
    if (static_cast<int>(query.d.size()) != k - n - 1)
        throw SegreQueryError("segre: |D| must equal k-|A|-1", 0);

    Fe acc = f.one();
    std::vector<int> base;
    for (int i = 1; i <= n; ++i) {
        base.assign(query.d.begin(), query.d.end());
        base.insert(base.end(), query.a.begin(), query.a.begin() + (i - 1));
        base.insert(base.end(), query.b.begin() + i, query.b.end());
        std::sort(base.begin(), base.end());
        const bool unique = std::adjacent_find(base.begin(), base.end()) == base.end();
        if (!unique || static_cast<int>(base.size()) != k - 2)
            throw SegreQueryError(
                "segre: base set of factor " + std::to_string(i) + " is not k-2 distinct points",
                i);
        const int ai = query.a[static_cast<std::size_t>(i - 1)];
        const int bi = query.b[static_cast<std::size_t>(i - 1)];
        if (std::binary_search(base.begin(), base.end(), ai) ||
            std::binary_search(base.begin(), base.end(), bi))
            throw SegreQueryError(
                "segre: factor " + std::to_string(i) + " evaluates on its own base set", i);
        acc = f.mul(acc, f.div(tb.value_at(base, ai), tb.value_at(base, bi)));
    }
    return acc;
}

std::uint64_t sigma(const std::vector<int>& b, const std::vector<int>& l, int t) {
    if (t < 0) throw std::invalid_argument("sigma: t must be >= 0");
    std::vector<bool> in_b(l.size(), false);
    for (int x : b) {
        bool found = false;
        for (std::size_t i = 0; i < l.size(); ++i)
            if (l[i] == x) {
                if (in_b[i]) throw std::invalid_argument("sigma: repeated element in B");
                in_b[i] = true;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("sigma: B is not a subset of L");
    }
    std::uint64_t inversions = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!in_b[i]) continue;
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (!in_b[j]) ++inversions;
    }
    return static_cast<std::uint64_t>(t + 1) * inversions;
}

} // namespace arclab
