#pragma once

// Exhaustive enumeration of fixed-width BSD and hyperbinary representations.
// This is the ground truth the Stern-polynomial identities and the interval
// tables are checked against; it is exact but exponential in the worst case.

#include "sternbsd/naf.hpp"
#include "sternbsd/stern.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sternbsd {

/// Digits in {0, 1, 2}; digits[j] is the coefficient of 2^j.
struct HyperDigits {
    std::vector<std::uint8_t> digits;

    std::size_t length() const noexcept { return digits.size(); }
    friend bool operator==(const HyperDigits&, const HyperDigits&) = default;
};

std::uint64_t hyper_value(const HyperDigits& h);
std::size_t one_count(const HyperDigits& h);
/// Most-significant digit first, e.g. "012".
std::string to_string(const HyperDigits& h);

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

/// Widest bit budget the enumerators accept.
inline constexpr unsigned kMaxEnumerationBits = 62;

/// Every i-digit BSD string of n, in lexicographic order of the digit vectors
/// (least-significant digit compared first, -1 < 0 < 1). Throws LimitError once
/// more than `limit` strings would be produced.
std::vector<BsdDigits> enumerate_bsd(std::int64_t n, unsigned i,
                                     std::uint64_t limit = kDefaultEnumerationLimit);

/// Every i-digit hyperbinary string of n, ordered like enumerate_bsd with 0 < 1 < 2.
std::vector<HyperDigits> enumerate_hyper(std::uint64_t n, unsigned i,
                                         std::uint64_t limit = kDefaultEnumerationLimit);

struct WeightDistribution {
    std::int64_t n = 0;
    unsigned i = 0;
    /// zero-count -> number of i-digit BSD strings of n with that many zeros.
    /// Only nonzero counts are stored.
    std::map<unsigned, std::uint64_t> counts;

    std::uint64_t total() const;
    /// counts read as coefficients: sum counts[l] t^l.
    SternPolynomial as_polynomial() const;
};

WeightDistribution weight_distribution(std::int64_t n, unsigned i,
                                       std::uint64_t limit = kDefaultEnumerationLimit);

/// Digit-wise b -> 1 - b. An i-digit BSD string of n maps to an i-digit
/// hyperbinary string of 2^i - 1 - n.
HyperDigits bsd_to_hyper(const BsdDigits& d);
/// Digit-wise h -> 1 - h; inverse of bsd_to_hyper.
BsdDigits hyper_to_bsd(const HyperDigits& h);

} // namespace sternbsd
