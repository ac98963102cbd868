#include "sternbsd/oracle.hpp"

#include "sternbsd/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sternbsd {

std::uint64_t hyper_value(const HyperDigits& h) {
    if (h.length() > 62)
        throw OverflowError("hyper_value: more than 62 digits");
    std::uint64_t v = 0;
    for (std::size_t j = h.length(); j-- > 0;)
        v = 2 * v + h.digits[j];
    return v;
}

std::size_t one_count(const HyperDigits& h) {
    return static_cast<std::size_t>(std::count(h.digits.begin(), h.digits.end(), std::uint8_t{1}));
}

std::string to_string(const HyperDigits& h) {
    std::string s;
    s.reserve(h.length());
    for (auto it = h.digits.rbegin(); it != h.digits.rend(); ++it)
        s.push_back(static_cast<char>('0' + *it));
    return s;
}

namespace {

void check_bits(unsigned i) {
    if (i > kMaxEnumerationBits)
        throw DomainError("enumeration width " + std::to_string(i) + " exceeds " +
                          std::to_string(kMaxEnumerationBits));
}

// Depth-first walk from the least-significant digit. The digit at position j
// must match the parity of what is left to represent; the remainder after it is
// pruned when the remaining digits cannot reach it.
template <typename Visit>
class BsdWalker {
public:
    BsdWalker(unsigned width, Visit& visit) : width_(width), visit_(visit), digits_(width) {}

    void run(std::int64_t n) {
        if (reachable(n, width_))
            step(0, n);
    }

private:
    static bool reachable(std::int64_t r, unsigned bits) {
        const std::int64_t bound = static_cast<std::int64_t>(pow2(bits) - 1);
        return r >= -bound && r <= bound;
    }

    void step(unsigned j, std::int64_t r) {
        if (j == width_) {
            visit_(digits_);
            return;
        }
        const bool odd = (r & 1) != 0;
        for (std::int8_t d : {std::int8_t{-1}, std::int8_t{0}, std::int8_t{1}}) {
            if ((d != 0) != odd)
                continue;
            const std::int64_t next = (r - d) / 2;
            if (!reachable(next, width_ - j - 1))
                continue;
            digits_[j] = d;
            step(j + 1, next);
        }
    }

    unsigned width_;
    Visit& visit_;
    std::vector<std::int8_t> digits_;
};

template <typename Visit>
class HyperWalker {
public:
    HyperWalker(unsigned width, Visit& visit) : width_(width), visit_(visit), digits_(width) {}

    void run(std::uint64_t n) {
        if (reachable(n, width_))
            step(0, n);
    }

private:
    // i hyperbinary digits reach at most 2 (2^i - 1).
    static bool reachable(std::uint64_t r, unsigned bits) { return r <= 2 * (pow2(bits) - 1); }

    void step(unsigned j, std::uint64_t r) {
        if (j == width_) {
            visit_(digits_);
            return;
        }
        const bool odd = (r & 1) != 0;
        for (std::uint8_t h : {std::uint8_t{0}, std::uint8_t{1}, std::uint8_t{2}}) {
            if ((h == 1) != odd || h > r)
                continue;
            const std::uint64_t next = (r - h) / 2;
            if (!reachable(next, width_ - j - 1))
                continue;
            digits_[j] = h;
            step(j + 1, next);
        }
    }

    unsigned width_;
    Visit& visit_;
    std::vector<std::uint8_t> digits_;
};

[[noreturn]] void limit_exceeded(std::uint64_t limit) {
    throw LimitError("enumeration produced more than " + std::to_string(limit) + " representations");
}

} // namespace

std::vector<BsdDigits> enumerate_bsd(std::int64_t n, unsigned i, std::uint64_t limit) {
    check_bits(i);
    std::vector<BsdDigits> out;
    auto visit = [&](const std::vector<std::int8_t>& digits) {
        if (out.size() >= limit)
            limit_exceeded(limit);
        out.push_back(BsdDigits{digits});
    };
    BsdWalker<decltype(visit)>(i, visit).run(n);
    return out;
}

std::vector<HyperDigits> enumerate_hyper(std::uint64_t n, unsigned i, std::uint64_t limit) {
    check_bits(i);
    std::vector<HyperDigits> out;
    auto visit = [&](const std::vector<std::uint8_t>& digits) {
        if (out.size() >= limit)
            limit_exceeded(limit);
        out.push_back(HyperDigits{digits});
    };
    HyperWalker<decltype(visit)>(i, visit).run(n);
    return out;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t sum = 0;
    for (const auto& [zeros, count] : counts)
        sum = checked_add(sum, count);
    return sum;
}

SternPolynomial WeightDistribution::as_polynomial() const {
    if (counts.empty())
        return {};
    std::vector<Coefficient> c(counts.rbegin()->first + 1, 0);
    for (const auto& [zeros, count] : counts)
        c[zeros] = count;
    return SternPolynomial(std::move(c));
}

WeightDistribution weight_distribution(std::int64_t n, unsigned i, std::uint64_t limit) {
    check_bits(i);
    WeightDistribution wd{n, i, {}};
    std::vector<std::uint64_t> by_zeros(i + 1, 0);
    std::uint64_t seen = 0;
    auto visit = [&](const std::vector<std::int8_t>& digits) {
        if (seen++ >= limit)
            limit_exceeded(limit);
        ++by_zeros[static_cast<std::size_t>(std::count(digits.begin(), digits.end(), std::int8_t{0}))];
    };
    BsdWalker<decltype(visit)>(i, visit).run(n);
    for (unsigned l = 0; l <= i; ++l)
        if (by_zeros[l] != 0)
            wd.counts.emplace(l, by_zeros[l]);
    return wd;
}

HyperDigits bsd_to_hyper(const BsdDigits& d) {
    HyperDigits h;
    h.digits.reserve(d.length());
    for (std::int8_t b : d.digits)
        h.digits.push_back(static_cast<std::uint8_t>(1 - b));
    return h;
}

BsdDigits hyper_to_bsd(const HyperDigits& h) {
    BsdDigits d;
    d.digits.reserve(h.length());
    for (std::uint8_t x : h.digits)
        d.digits.push_back(static_cast<std::int8_t>(1 - static_cast<int>(x)));
    return d;
}

} // namespace sternbsd
