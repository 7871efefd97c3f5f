// Exact linear algebra over GF(p^h): determinants by Gaussian elimination,
// row reduction, annihilator (nullspace) forms, and the pencil of the q+1
// hyperplanes through a codimension-2 subspace. Matrices are row-major and
// every vector sequence is read as a sequence of rows.
#pragma once

#include "arclab/gf.hpp"

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace arclab {

using Vek = std::vector<Fe>;

/// Covector with a normalization flag; normalized means the first nonzero
/// coordinate equals 1 (and the covector is not zero).
struct LinearForm {
    Vek coeffs;
    bool normalized = false;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

Fe dot(const Field& f, const Vek& a, const Vek& b);
Fe eval(const Field& f, const LinearForm& alpha, const Vek& x);

/// Determinant of the square matrix whose rows are the given vectors.
Fe det_rows(const Field& f, std::span<const Vek> rows);
/// Same, but consumes the buffer (no internal copy).
Fe det_rows_destructive(const Field& f, std::vector<Vek>& rows);
/// Determinant of the rows obtained by concatenating the groups in order.
Fe det_seq(const Field& f, std::initializer_list<std::span<const Vek>> groups);

/// Reduces rows in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(const Field& f, std::vector<Vek>& rows);
int rank_of(const Field& f, std::vector<Vek> rows);

/// Scales so the first nonzero coordinate is 1. Throws on the zero covector.
LinearForm normalize_form(const Field& f, Vek covector);

/// Normalized forms spanning the annihilator of m <= k-1 independent points,
/// ordered by free column. Throws if the points are dependent.
std::vector<LinearForm> nullspace_forms(const Field& f, const std::vector<Vek>& points);

/// The two base forms of the pencil through span of k-2 independent points.
std::pair<LinearForm, LinearForm> pencil(const Field& f, const std::vector<Vek>& y_points);

/// All q+1 normalized hyperplane forms through the codimension-2 span:
/// alpha1 + mu*alpha2 for every mu, then alpha2.
std::vector<LinearForm> pencil_forms(const Field& f, const std::vector<Vek>& y_points);

} // namespace arclab
