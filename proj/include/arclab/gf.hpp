// Exact arithmetic in GF(p^h). Elements are integer codes in [0, q):
// the base-p digits c_0..c_{h-1} of a code are the coefficients of
// c_0 + c_1 x + ... + c_{h-1} x^{h-1} modulo a fixed irreducible polynomial.
// No floating point is used anywhere.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace arclab {

// Canonical element code. All arithmetic goes through Field.
struct Fe {
    std::uint32_t code = 0;
    friend constexpr bool operator==(const Fe&, const Fe&) = default;
    friend constexpr auto operator<=>(const Fe&, const Fe&) = default;
};

/// Immutable description of GF(p^h) with exact operations.
///
/// The modulus is the lexicographically smallest monic irreducible of
/// degree h over F_p, where candidates are compared by encoding their
/// non-leading coefficients low-to-high as a base-p integer. For h = 1
/// this convention yields the polynomial x and arithmetic is plain mod p.
class Field {
public:
    /// Builds GF(p^h) with the canonical modulus. Throws std::invalid_argument
    /// if p is not prime, h < 1, or p^h exceeds max_order().
    static Field make(std::uint32_t p, std::uint32_t h);

    /// Same field but with a caller-supplied modulus (low-first coefficients,
    /// length h+1, monic, irreducible). Intended for cross-checks.
    static Field with_modulus(std::uint32_t p, std::uint32_t h,
                              std::vector<std::uint32_t> modulus);

    /// Size guard for field construction: 2^20 by default, overridable via
    /// the ARCLAB_MAX_Q environment variable.
    static std::uint32_t max_order();

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t h() const noexcept { return h_; }
    std::uint32_t q() const noexcept { return q_; }

    /// Modulus coefficients, low-first, length h+1, leading coefficient 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::string modulus_string() const;

    Fe zero() const noexcept { return Fe{0}; }
    Fe one() const noexcept { return Fe{1}; }

    /// Validates code < q.
    Fe element(std::uint64_t code) const;

    /// Polynomial coefficients of a, low-first, length h.
    std::vector<std::uint32_t> coeffs(Fe a) const;
    Fe from_coeffs(std::span<const std::uint32_t> c) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    /// Throws std::domain_error on inv(0).
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const;
    /// Square-and-multiply; pow(a, 0) = 1. Negative exponents invert first,
    /// so pow(0, e) with e < 0 throws.
    Fe pow(Fe a, std::int64_t e) const;

    /// (-1)^exponent as a field element; signs are always consumed mod 2.
    Fe minus_one_pow(std::uint64_t exponent) const;

private:
    Field() = default;
    void init_tables();
    Fe mul_poly(Fe a, Fe b) const;
    Fe pow_poly(Fe a, std::uint64_t e) const;

    std::uint32_t p_ = 0, h_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    // log/antilog tables, built when q <= 2^16; add stays digit-wise.
    std::vector<std::uint32_t> log_, exp_;
    bool tables_ = false;
};

bool is_prime(std::uint32_t n);

/// Trial division against all lower-degree monic polynomials.
bool poly_is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

} // namespace arclab
