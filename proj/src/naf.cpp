#include "sternbsd/naf.hpp"

#include "sternbsd/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace sternbsd {

std::int64_t bsd_value(const BsdDigits& d) {
    if (d.length() > 63)
        throw OverflowError("bsd_value: more than 63 digits");
    std::int64_t v = 0;
    for (std::size_t j = d.length(); j-- > 0;)
        v = 2 * v + d.digits[j];
    return v;
}

std::size_t zero_count(const BsdDigits& d) {
    return static_cast<std::size_t>(std::count(d.digits.begin(), d.digits.end(), std::int8_t{0}));
}

std::size_t hamming_weight(const BsdDigits& d) { return d.length() - zero_count(d); }

bool is_naf(const BsdDigits& d) {
    for (std::size_t j = 0; j + 1 < d.length(); ++j)
        if (d.digits[j] != 0 && d.digits[j + 1] != 0)
            return false;
    return std::all_of(d.digits.begin(), d.digits.end(), [](std::int8_t x) { return x >= -1 && x <= 1; });
}

bool is_reduced_naf(const BsdDigits& d) { return is_naf(d) && (d.digits.empty() || d.digits.back() != 0); }

std::string to_string(const BsdDigits& d) {
    std::string s;
    s.reserve(d.length() + 4);
    for (auto it = d.digits.rbegin(); it != d.digits.rend(); ++it)
        s += *it < 0 ? "-1" : (*it == 0 ? "0" : "1");
    return s;
}

BsdDigits parse_bsd(std::string_view text) {
    std::vector<std::int8_t> msb_first;
    for (std::size_t j = 0; j < text.size(); ++j) {
        switch (text[j]) {
        case '1': msb_first.push_back(1); break;
        case '0': msb_first.push_back(0); break;
        case '-':
            if (j + 1 == text.size() || text[j + 1] != '1')
                throw FormatError("'-' must be followed by '1' in \"" + std::string(text) + "\"");
            msb_first.push_back(-1);
            ++j;
            break;
        default: throw FormatError("invalid BSD digit '" + std::string(1, text[j]) + "'");
        }
    }
    return BsdDigits{{msb_first.rbegin(), msb_first.rend()}};
}

BsdDigits naf_encode(std::uint64_t n) {
    BsdDigits d;
    while (n != 0) {
        if (n % 2 == 0) {
            d.digits.push_back(0);
            n /= 2;
        } else if (n % 4 == 1) {
            d.digits.push_back(1);
            n /= 2;             // (n - 1) / 2
        } else {
            d.digits.push_back(-1);
            n = n / 2 + 1;      // (n + 1) / 2 without overflow
        }
    }
    return d;
}

unsigned naf_bitlength(std::uint64_t n) {
    if (n == 0)
        throw DomainError("naf_bitlength: 0 has no NAF-interval");
    // n is in I_k exactly when 2^k <= 3n < 2^(k+1).
    if (n <= std::numeric_limits<std::uint64_t>::max() / 3)
        return static_cast<unsigned>(std::bit_width(3 * n)) - 1;
    return static_cast<unsigned>(naf_encode(n).length());
}

namespace {

void check_k(unsigned k, unsigned min_k, const char* what) {
    if (k < min_k || k > kMaxNafBitlength)
        throw DomainError(std::string(what) + ": k=" + std::to_string(k) + " outside [" +
                          std::to_string(min_k) + ", " + std::to_string(kMaxNafBitlength) + "]");
}

std::uint64_t ceil_pow2_over_3(unsigned e) { return (pow2(e) + 2) / 3; }

} // namespace

Interval interval(unsigned k) {
    check_k(k, 1, "interval");
    return {ceil_pow2_over_3(k), ceil_pow2_over_3(k + 1)};
}

std::uint64_t interval_length(unsigned k) {
    check_k(k, 1, "interval_length");
    const std::uint64_t p = pow2(k);
    return k % 2 == 0 ? p / 3 : (p + 2) / 3;
}

NafPartition partition(unsigned k) {
    check_k(k, 3, "partition");

    // a_1 = 1, a_2 = 2, a_j = 2^(j-2) + a_{j-2}
    std::uint64_t a_prev2 = k % 2 == 1 ? 1 : 2;
    for (unsigned j = k % 2 == 1 ? 3 : 4; j < k; j += 2)
        a_prev2 = pow2(j - 2) + a_prev2;

    NafPartition p{};
    p.k = k;
    p.a = pow2(k - 2) + a_prev2;
    p.midpoint = pow2(k - 1);
    p.len_outer = interval_length(k - 2);
    p.len_mid = interval_length(k - 1);
    p.b = p.a + p.len_outer;
    p.c = p.b + p.len_mid;
    p.upper = p.c + p.len_outer;

    const Interval ik = interval(k);
    const std::uint64_t b_closed = k % 2 == 0 ? p.midpoint - p.len_outer : p.midpoint - (p.len_outer - 1);
    const std::uint64_t c_closed = k % 2 == 0 ? p.midpoint + (p.len_outer + 1) : p.midpoint + p.len_outer;
    if (p.a != ik.low || p.upper != ik.high || p.c != p.midpoint + a_prev2 || p.b != b_closed ||
        p.c != c_closed || interval_length(k) != p.len_mid + 2 * p.len_outer)
        throw std::logic_error("partition: recursive bounds disagree with closed forms for k=" +
                               std::to_string(k));
    return p;
}

Block block_of(const NafPartition& p, std::uint64_t n) {
    if (n < p.a || n >= p.upper)
        throw DomainError("block_of: " + std::to_string(n) + " is not in I_" + std::to_string(p.k));
    if (n == p.midpoint)
        return Block::Midpoint;
    if (n < p.b)
        return Block::A;
    if (n < p.c)
        return Block::B;
    return Block::C;
}

const char* to_string(Block b) {
    switch (b) {
    case Block::A: return "A";
    case Block::B: return "B";
    case Block::C: return "C";
    case Block::Midpoint: return "midpoint";
    }
    return "?";
}

std::uint64_t sibling(std::uint64_t n, unsigned k) {
    if (!interval(k).contains(n))
        throw DomainError("sibling: " + std::to_string(n) + " is not in I_" + std::to_string(k));
    return pow2(k) - n;
}

} // namespace sternbsd
