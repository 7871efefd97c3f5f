// Verifiers for the polynomial identities behind coordinate-free arc
// arguments. Every checker evaluates its identity literally, term by term,
// in exact field arithmetic: no cancellation, reordering, or simplification
// is applied, and (-1)^e factors are taken mod 2 as field signs. All index
// sequences refer to positions in the bundle's arc.
#pragma once

#include "arclab/tangent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace arclab {

struct IdentityReport {
    std::string lemma;
    /// Named index sequences describing the configuration.
    std::vector<std::pair<std::string, std::vector<int>>> config;
    Fe lhs{};
    Fe rhs{};
    bool pass = false;
    std::string note;
    friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

/// Segre's lemma of tangents: with |D| = k-3 and x, y, z distinct points off D,
///   T_{{x}uD}(y) T_{{y}uD}(z) T_{{z}uD}(x)
///     = (-1)^{t+1} T_{{x}uD}(z) T_{{y}uD}(x) T_{{z}uD}(y).
/// Requires t >= 1.
IdentityReport check_lemma_of_tangents(TangentBundle& tb, const std::vector<int>& d,
                                       int x, int y, int z);

/// Tangent-function interpolation: with |Y| = k-2 and E disjoint from Y,
/// |E| = t+2 (needs |S| >= k+t and t >= 1),
///   0 = sum_{a in E} T_Y(a) prod_{z in E\{a}} det(z, a, Y)^{-1}.
IdentityReport check_interpolation(TangentBundle& tb, const std::vector<int>& y,
                                   const std::vector<int>& e);

/// Coordinate-free main identity. A, L, D, Omega are pairwise disjoint
/// ascending subsequences with |A| = n, |L| = r, |D| = k-1-r,
/// |Omega| = t+1-n, and n <= r <= n+p-1, r <= t+2:
///   sum_{B subset L, |B|=n} (-1)^{sigma(B,L)} P_{D u (L\B)}(A, B)
///       prod_{z in Omega u B} det(z, A, L\B, D)^{-1}
///   = (-1)^{(r-n)(nt+n+1)} sum_{Delta subset Omega, |Delta|=r-n}
///       P_D(A u Delta, L) prod_{z in (Omega\Delta) u L} det(z, A, Delta, D)^{-1}.
struct MainLemmaConfig {
    std::vector<int> a, l, d, omega;
};
IdentityReport check_main_lemma(TangentBundle& tb, const MainLemmaConfig& cfg);

/// The left-hand sum above, one value per B in lexicographic position order.
std::vector<Fe> main_lemma_lhs_terms(TangentBundle& tb, const MainLemmaConfig& cfg);

/// Hyperoval identity (|S| = q+2, n >= k-p). With m = |X| = |Y|,
/// |A| = n-m, |L| = k-1-m, |Omega| = k-2-n, M = {1..m}:
///   0 = sum_{B subset L, |B|=n-m} sum_{tau subset M}
///       (-1)^{sigma(B,L)+sigma(X_tau,X)+|tau|}
///       P_{(L\B) u X_{M\tau}}(A u Y_tau, B u X_tau)
///       prod_{z in Omega u B u X_tau u Y_{M\tau}} det(z, A, X_{M\tau}, Y_tau, L\B)^{-1}.
/// With m = 0 the sum reduces term for term to the main-identity left side at
/// r = k-1, D empty.
struct TwoToTheNConfig {
    std::vector<int> a, l, omega, x, y;
};
IdentityReport check_twotothen(TangentBundle& tb, const TwoToTheNConfig& cfg);

/// Term values, outer loop B in lexicographic position order, inner loop tau
/// as an ascending bitmask over M.
std::vector<Fe> twotothen_terms(TangentBundle& tb, const TwoToTheNConfig& cfg);

/// Laplace-type expansion, a pure multilinear identity over any field:
/// with W = (w_1..w_{n+1}), |X| = n, |L| = k-n-1, any y,
///   sum_j (-1)^{j-1} det(y, W\w_j, L) det(w_j, X, L) = det(W, L) det(y, X, L).
/// Holds for every input of the right shape, degenerate ones included.
IdentityReport check_laplace(const Field& f, const std::vector<Vek>& w,
                             const std::vector<Vek>& x_vectors,
                             const std::vector<Vek>& l_vectors, const Vek& y);

/// Tail identity: with |L| = r, |D| = k-1-r, |Omega| = t+2 pairwise disjoint,
/// 1 <= r <= t+2, r <= p-1, and l0 the first member of L:
///   0 = sum_{Delta subset Omega, |Delta|=r} P_D(Delta, L)
///       prod_{z in (Omega\Delta) u (L\l0)} det(z, Delta, D)^{-1}.
/// At r = 1 this is the interpolation sum divided by T_D(l0).
struct AppendixConfig {
    std::vector<int> l, d, omega;
};
IdentityReport check_appendix(TangentBundle& tb, const AppendixConfig& cfg);

/// Interchanging adjacent members of A (positions pos, pos+1) scales the
/// Segre product by (-1)^{t+1}.
IdentityReport check_numerator_swap(TangentBundle& tb, const SegreQuery& query,
                                    std::size_t pos);
/// Same statement for B.
IdentityReport check_denominator_swap(TangentBundle& tb, const SegreQuery& query,
                                      std::size_t pos);

/// Switch identity: for |A| = |B|-1, |D| = k-2-|B|, x != y off D u A u B,
///   T_{DuB}(y)/T_{DuB}(x) * P_{Du{y}}({x}uA, B) = (-1)^{t+1} P_{Du{x}}({y}uA, B).
IdentityReport check_switch(TangentBundle& tb, const std::vector<int>& d,
                            const std::vector<int>& a, const std::vector<int>& b,
                            int x, int y);

enum class Lemma {
    Tangents,
    Interpolation,
    Signs,
    Switch,
    Main,
    TwoToTheN,
    Laplace,
    Appendix,
};

std::optional<Lemma> lemma_from_name(std::string_view name);
std::string_view lemma_name(Lemma lemma);

/// Exhaustive when the number of valid configurations fits the budget,
/// otherwise `samples` seeded draws. Sampled modes walk the structural cells
/// (for instance the (n, r) grid) round-robin so a fixed seed covers every
/// cell deterministically.
struct SamplingPolicy {
    std::uint64_t exhaustive_budget = 100000;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    /// Sequence-length cap for the signs / switch / main / twotothen suites.
    int max_n = 2;
    /// Reports kept verbatim; counts and the first failure are always kept.
    std::size_t keep_reports = static_cast<std::size_t>(-1);
    /// Parallel evaluation width. Configurations are independent and the
    /// merge is configuration-ordered, so any width gives identical results.
    int jobs = 1;
};

struct SuiteResult {
    Lemma lemma = Lemma::Tangents;
    bool exhaustive = false;
    std::uint64_t config_count = 0; // valid configurations (saturated estimate)
    std::uint64_t total = 0;        // checks actually run
    std::uint64_t passed = 0;
    bool no_valid_config = false;
    std::optional<IdentityReport> first_fail;
    std::vector<IdentityReport> reports;

    bool all_pass() const { return !no_valid_config && total > 0 && passed == total; }
};

SuiteResult run_suite(TangentBundle& tb, Lemma lemma, const SamplingPolicy& policy);

/// Random Laplace instances over f with 2 <= k <= max_k; every other draw
/// forces y into span(X u L) to exercise the degenerate rank cases.
SuiteResult run_laplace_suite(const Field& f, int max_k, const SamplingPolicy& policy);

} // namespace arclab
