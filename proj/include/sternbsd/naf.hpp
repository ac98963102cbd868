#pragma once

// Binary signed-digit strings, the non-adjacent form, and the NAF-intervals
// I_k = [ceil(2^k/3), ceil(2^(k+1)/3)) together with their A/B/C partition.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sternbsd {

/// Digits in {-1, 0, 1}; digits[j] is the coefficient of 2^j.
struct BsdDigits {
    std::vector<std::int8_t> digits;

    std::size_t length() const noexcept { return digits.size(); }
    friend bool operator==(const BsdDigits&, const BsdDigits&) = default;
};

std::int64_t bsd_value(const BsdDigits& d);
std::size_t zero_count(const BsdDigits& d);
std::size_t hamming_weight(const BsdDigits& d);

/// No two adjacent nonzero digits.
bool is_naf(const BsdDigits& d);
/// NAF with a nonzero top digit (the empty string counts as the reduced NAF of 0).
bool is_reduced_naf(const BsdDigits& d);

/// Most-significant digit first, -1 written as "-1": "10-1" is 3, "1-11" is 3.
std::string to_string(const BsdDigits& d);
/// Inverse of to_string; throws FormatError on any other character.
BsdDigits parse_bsd(std::string_view text);

/// The unique reduced NAF of n (mod-4 recoding). Empty for n = 0.
BsdDigits naf_encode(std::uint64_t n);

/// Length of the reduced NAF. DomainError for n = 0.
unsigned naf_bitlength(std::uint64_t n);

struct Interval {
    std::uint64_t low;   // inclusive
    std::uint64_t high;  // exclusive

    bool contains(std::uint64_t n) const noexcept { return low <= n && n < high; }
    std::uint64_t size() const noexcept { return high - low; }
};

/// Largest k for which interval(k) and partition(k) are representable.
inline constexpr unsigned kMaxNafBitlength = 62;

/// I_k. DomainError for k < 1 or k > kMaxNafBitlength.
Interval interval(unsigned k);

/// |I_k|: floor(2^k/3) for even k, ceil(2^k/3) for odd k.
std::uint64_t interval_length(unsigned k);

/// Lower bound a_k of I_k (ceil(2^k/3)).
inline std::uint64_t interval_start(unsigned k) { return interval(k).low; }

/// I_k = A_k ++ B_k ++ C_k with |A_k| = |C_k| = |I_{k-2}| and |B_k| = |I_{k-1}|.
struct NafPartition {
    unsigned k;
    std::uint64_t a;
    std::uint64_t b;
    std::uint64_t c;
    std::uint64_t midpoint;   // 2^(k-1)
    std::uint64_t upper;      // a_{k+1}
    std::uint64_t len_outer;  // |I_{k-2}|
    std::uint64_t len_mid;    // |I_{k-1}|

    friend bool operator==(const NafPartition&, const NafPartition&) = default;
};

/// Bounds from a_k = 2^(k-2) + a_{k-2} and the sub-interval lengths, checked
/// against the ceil(2^k/3) closed form. DomainError for k < 3.
NafPartition partition(unsigned k);

enum class Block { A, B, C, Midpoint };

/// Which sub-block of partition(k) holds n. DomainError if n is outside I_k.
Block block_of(const NafPartition& p, std::uint64_t n);
const char* to_string(Block b);

/// 2^k - n. DomainError unless n lies in I_k.
std::uint64_t sibling(std::uint64_t n, unsigned k);

} // namespace sternbsd
