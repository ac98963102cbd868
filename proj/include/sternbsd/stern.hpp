#pragma once

/**
 * Stern polynomials B_n(t).
 *
 *   B_0 = 0, B_1 = 1, B_{2m} = t * B_m, B_{2m+1} = B_m + B_{m+1}
 *
 * Coefficients are unsigned 64-bit integers; every arithmetic step is checked
 * and throws OverflowError instead of wrapping.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sternbsd {

using Coefficient = std::uint64_t;

class SternPolynomial {
public:
    SternPolynomial() = default;  // zero polynomial
    explicit SternPolynomial(std::vector<Coefficient> coeffs);

    static SternPolynomial one() { return SternPolynomial({1}); }
    static SternPolynomial monomial(std::size_t exponent);

    /// coeffs()[l] is the coefficient of t^l. Empty for the zero polynomial,
    /// otherwise the last entry is nonzero.
    std::span<const Coefficient> coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Coefficient operator[](std::size_t l) const noexcept { return l < coeffs_.size() ? coeffs_[l] : 0; }

    SternPolynomial times_t() const;

    friend SternPolynomial operator+(const SternPolynomial& p, const SternPolynomial& q);
    friend SternPolynomial operator*(const SternPolynomial& p, const SternPolynomial& q);
    friend bool operator==(const SternPolynomial&, const SternPolynomial&) = default;

private:
    std::vector<Coefficient> coeffs_;
};

SternPolynomial stern_of(std::uint64_t n);

/// Largest n_max stern_table accepts by default.
inline constexpr std::uint64_t kDefaultSternTableBudget = std::uint64_t{1} << 24;

/// B_0 .. B_{n_max}, filled bottom-up.
std::vector<SternPolynomial> stern_table(std::uint64_t n_max,
                                         std::uint64_t budget = kDefaultSternTableBudget);

/// Throws DomainError on the zero polynomial.
std::size_t degree(const SternPolynomial& p);
Coefficient leading_coefficient(const SternPolynomial& p);

/// Horner evaluation at t0, overflow-checked.
std::uint64_t evaluate(const SternPolynomial& p, std::uint64_t t0);

enum class Sign { Plus, Minus };

/// B_{2^a - r} * B_m + B_r * B_{m+1}   (Plus,  index 2^a m + r)
/// B_{2^a - r} * B_m + B_r * B_{m-1}   (Minus, index 2^a m - r)
///
/// Built by multiplying and adding the four constituent polynomials; it never
/// evaluates B at the composite index, so it can be used to cross-check stern_of.
SternPolynomial schinzel_compose(unsigned a, std::uint64_t m, std::uint64_t r, Sign sign);

} // namespace sternbsd
