#pragma once

// Independent reference implementations used only by the tests. None of these
// share code with the library.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

// Stern diatomic sequence: c(0)=0, c(1)=1, c(2m)=c(m), c(2m+1)=c(m)+c(m+1).
inline std::vector<std::uint64_t> diatomic(std::uint64_t n_max) {
    std::vector<std::uint64_t> c(n_max + 2, 0);
    if (n_max + 1 >= 1)
        c[1] = 1;
    for (std::uint64_t n = 2; n <= n_max + 1; ++n)
        c[n] = n % 2 == 0 ? c[n / 2] : c[n / 2] + c[n / 2 + 1];
    c.resize(n_max + 1);
    return c;
}

// Polynomial straight from the definition, coefficients low degree first,
// no trailing zeros. Naive recursion; only for small n.
inline std::vector<std::uint64_t> stern_poly(std::uint64_t n) {
    if (n == 0)
        return {};
    if (n == 1)
        return {1};
    if (n % 2 == 0) {
        auto p = stern_poly(n / 2);
        p.insert(p.begin(), 0);
        return p;
    }
    auto p = stern_poly(n / 2);
    auto q = stern_poly(n / 2 + 1);
    if (p.size() < q.size())
        p.resize(q.size(), 0);
    for (std::size_t j = 0; j < q.size(); ++j)
        p[j] += q[j];
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

// Every digit vector in {-1,0,1}^i, checked one by one (3^i work).
// Result maps zero-count -> number of strings with value n.
inline std::map<unsigned, std::uint64_t> brute_weight_distribution(std::int64_t n, unsigned i) {
    std::map<unsigned, std::uint64_t> out;
    std::vector<int> d(i, -1);
    for (;;) {
        std::int64_t v = 0;
        unsigned zeros = 0;
        for (unsigned j = i; j-- > 0;) {
            v = 2 * v + d[j];
            zeros += d[j] == 0;
        }
        if (v == n)
            ++out[zeros];
        unsigned j = 0;
        while (j < i && d[j] == 1)
            d[j++] = -1;
        if (j == i)
            break;
        ++d[j];
    }
    return out;
}

// Minimum Hamming weight over all i-digit strings of n (3^i work).
inline unsigned brute_min_weight(std::int64_t n, unsigned i) {
    unsigned best = i + 1;
    for (auto [zeros, count] : brute_weight_distribution(n, i))
        if (count != 0 && i - zeros < best)
            best = i - zeros;
    return best;
}

// NAF-bitlength from the interval definition 2^k <= 3n < 2^(k+1).
inline unsigned naf_k(std::uint64_t n) {
    unsigned k = 0;
    while ((std::uint64_t{1} << (k + 1)) <= 3 * n)
        ++k;
    return k;
}

// Fibonacci with F_1 = F_2 = 1.
inline std::uint64_t fib(unsigned index) {
    std::uint64_t a = 0, b = 1;
    for (unsigned j = 0; j < index; ++j) {
        auto t = a + b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace oracle
