#include "sternbsd/stern.hpp"

#include "sternbsd/error.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace sternbsd {

SternPolynomial::SternPolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

SternPolynomial SternPolynomial::monomial(std::size_t exponent) {
    std::vector<Coefficient> c(exponent + 1, 0);
    c.back() = 1;
    return SternPolynomial(std::move(c));
}

SternPolynomial SternPolynomial::times_t() const {
    if (is_zero())
        return {};
    std::vector<Coefficient> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return SternPolynomial(std::move(c));
}

SternPolynomial operator+(const SternPolynomial& p, const SternPolynomial& q) {
    std::vector<Coefficient> c(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
    for (std::size_t l = 0; l < c.size(); ++l)
        c[l] = checked_add(p[l], q[l]);
    return SternPolynomial(std::move(c));
}

SternPolynomial operator*(const SternPolynomial& p, const SternPolynomial& q) {
    if (p.is_zero() || q.is_zero())
        return {};
    std::vector<Coefficient> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(p.coeffs_[i], q.coeffs_[j]));
    return SternPolynomial(std::move(c));
}

SternPolynomial stern_of(std::uint64_t n) {
    if (n == 0)
        return {};
    // Walk the bits of n from the top, carrying the pair (B_m, B_{m+1}) where m
    // is the prefix read so far:
    //   bit 0: (B_2m, B_2m+1)   = (t B_m, B_m + B_{m+1})
    //   bit 1: (B_2m+1, B_2m+2) = (B_m + B_{m+1}, t B_{m+1})
    SternPolynomial lo = SternPolynomial::one();         // B_1
    SternPolynomial hi = SternPolynomial::monomial(1);   // B_2
    for (int bit = std::bit_width(n) - 2; bit >= 0; --bit) {
        SternPolynomial sum = lo + hi;
        if ((n >> bit) & 1u) {
            lo = std::move(sum);
            hi = hi.times_t();
        } else {
            hi = std::move(sum);
            lo = lo.times_t();
        }
    }
    return lo;
}

std::vector<SternPolynomial> stern_table(std::uint64_t n_max, std::uint64_t budget) {
    if (n_max > budget)
        throw CapacityError("stern_table: n_max=" + std::to_string(n_max) + " exceeds budget " +
                            std::to_string(budget));
    std::vector<SternPolynomial> table;
    table.reserve(n_max + 1);
    table.emplace_back();
    if (n_max >= 1)
        table.push_back(SternPolynomial::one());
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const std::uint64_t m = n / 2;
        if (n % 2 == 0)
            table.push_back(table[m].times_t());
        else
            table.push_back(table[m] + table[m + 1]);
    }
    return table;
}

std::size_t degree(const SternPolynomial& p) {
    if (p.is_zero())
        throw DomainError("degree of the zero polynomial is undefined");
    return p.coeffs().size() - 1;
}

Coefficient leading_coefficient(const SternPolynomial& p) {
    if (p.is_zero())
        throw DomainError("leading coefficient of the zero polynomial is undefined");
    return p.coeffs().back();
}

std::uint64_t evaluate(const SternPolynomial& p, std::uint64_t t0) {
    std::uint64_t acc = 0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = checked_add(checked_mul(acc, t0), *it);
    return acc;
}

SternPolynomial schinzel_compose(unsigned a, std::uint64_t m, std::uint64_t r, Sign sign) {
    if (sign == Sign::Minus && m < 1)
        throw DomainError("schinzel_compose: m must be positive for the minus form");
    const std::uint64_t span = pow2(a);
    if (r > span)
        throw DomainError("schinzel_compose: r must satisfy 0 <= r <= 2^a");
    // The composite index has to be representable even though it is never used.
    const std::uint64_t base = checked_mul(span, m);
    if (sign == Sign::Plus)
        (void)checked_add(base, r);

    const std::uint64_t neighbour = sign == Sign::Plus ? checked_add(m, 1) : m - 1;
    return stern_of(span - r) * stern_of(m) + stern_of(r) * stern_of(neighbour);
}

} // namespace sternbsd
