// Tangent machinery for an arc S: for each (k-2)-subset Y of S (by indices)
// there are exactly t = q+k-1-|S| hyperplanes through span(Y) meeting no
// further point of S. T_Y(x) multiplies their forms at x, and the Segre
// product P_D(A,B) multiplies ratios of such values. Each T_Y is canonical
// only up to a scalar; every identity consumed downstream is invariant under
// rescaling any single cached form.
#pragma once

#include "arclab/arc.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace arclab {

/// Per-arc cache of tangent forms keyed by the sorted index set Y.
/// Forms are normalized and ordered lexicographically by their coefficient
/// codes. Populate lazily from one thread, or call prebuild() up front and
/// share read-only afterwards.
class TangentBundle {
public:
    explicit TangentBundle(const Arc& arc) : arc_(arc) {}

    const Arc& arc() const noexcept { return arc_; }

    /// The t tangent forms at Y (any index order; validated and sorted).
    const std::vector<LinearForm>& forms(const std::vector<int>& y_indices);

    /// T_Y(x): product of the tangent forms at x; the empty product is 1.
    Fe value(const std::vector<int>& y_indices, const Vek& x);
    Fe value_at(const std::vector<int>& y_indices, int point_index);

    /// Fills the cache for every (k-2)-subset of the arc.
    void prebuild();

    /// Rescales one cached form by a nonzero scalar. Consistency-check hook:
    /// all Segre products and identity verdicts must be unaffected.
    void rescale_form(const std::vector<int>& y_indices, std::size_t form_index, Fe lambda);

private:
    std::vector<int> canonical_key(const std::vector<int>& y_indices) const;

    const Arc& arc_;
    std::map<std::vector<int>, std::vector<LinearForm>> cache_;
};

/// Malformed Segre query; term is the 1-based offending factor index.
struct SegreQueryError : std::invalid_argument {
    SegreQueryError(const std::string& what, int term_index)
        : std::invalid_argument(what), term(term_index) {}
    int term;
};

/// P_D(A, B) with A = (a_1..a_n), B = (b_0..b_{n-1}) index sequences and D an
/// index set of size k-n-1: the product over i of
/// T_{D u {a_1..a_{i-1}, b_i..b_{n-1}}}(a_i) / same(b_{i-1}).
/// For each i that base set must have exactly k-2 distinct members and
/// contain neither a_i nor b_{i-1}; violations throw SegreQueryError.
struct SegreQuery {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> d;
};

Fe segre_product(TangentBundle& tb, const SegreQuery& query);

/// sigma(B, L) = (t+1) * inv(B, L) where inv counts, over b in B, the
/// members of L \ B appearing after b in L: the transposition count that
/// moves B to the tail of L. Only the parity is consumed downstream.
std::uint64_t sigma(const std::vector<int>& b, const std::vector<int>& l, int t);

} // namespace arclab
