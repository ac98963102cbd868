#include "sternbsd/tables.hpp"

#include "sternbsd/error.hpp"
#include "sternbsd/naf.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

namespace sternbsd {

namespace {

constexpr std::uint64_t kParallelGrain = std::uint64_t{1} << 15;

/// Runs body(j) for j in [0, count). Splits across threads only when asked to
/// and when the range is long enough to pay for it.
template <typename Body>
void for_each_index(std::uint64_t count, const BuildOptions& opts, Body&& body) {
    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (!opts.parallel || threads == 1 || count < 2 * kParallelGrain) {
        for (std::uint64_t j = 0; j < count; ++j)
            body(j);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count / kParallelGrain));
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        const std::uint64_t chunk = (count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t lo = t * chunk;
            const std::uint64_t hi = std::min(count, lo + chunk);
            pool.emplace_back([lo, hi, &body, &error = errors[t]] {
                try {
                    for (std::uint64_t j = lo; j < hi; ++j)
                        body(j);
                } catch (...) {
                    error = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

ZeroCount bump(ZeroCount z) {
    if (z == 0xff)
        throw OverflowError("zero count exceeds 255");
    return static_cast<ZeroCount>(z + 1);
}

} // namespace

std::uint64_t table_extent(unsigned k_max, std::uint64_t budget) {
    if (k_max < 3)
        throw DomainError("k_max must be at least 3, got " + std::to_string(k_max));
    if (k_max >= kMaxNafBitlength)
        throw CapacityError("k_max=" + std::to_string(k_max) + " is beyond the table budget");
    const std::uint64_t extent = interval_start(k_max + 1);
    if (extent > budget)
        throw CapacityError("k_max=" + std::to_string(k_max) + " needs " + std::to_string(extent) +
                            " entries, budget is " + std::to_string(budget));
    return extent;
}

std::uint64_t OptTables::size() const { return k_max >= 3 ? interval_start(k_max + 1) : 0; }
std::uint64_t DegLcTables::size() const { return k_max >= 3 ? interval_start(k_max + 1) : 0; }

DegLcTables build_deg_lc(unsigned k_max, const BuildOptions& opts) {
    const std::uint64_t extent = table_extent(k_max, opts.budget);
    DegLcTables t;
    t.k_max = k_max;
    t.deg.assign(extent, 0);
    t.lc.assign(extent, 0);

    // B_1 = 1, B_2 = t
    t.deg[1] = 0;
    t.lc[1] = 1;
    t.deg[2] = 1;
    t.lc[2] = 1;

    for (unsigned k = 3; k <= k_max; ++k) {
        const NafPartition p = partition(k);
        const std::uint64_t a_k2 = interval_start(k - 2);
        const std::uint64_t a_k1 = interval_start(k - 1);
        const std::uint64_t quarter = pow2(k - 2);
        const std::uint64_t whole = pow2(k);

        // A_k and C_k from I_{k-2}: v-th entry and its sibling there.
        for_each_index(p.len_outer, opts, [&](std::uint64_t v) {
            const std::uint64_t src = a_k2 + v;
            const std::uint64_t sib = quarter - src;
            t.deg[p.a + v] = bump(t.deg[src]);
            t.lc[p.a + v] = t.lc[src];
            t.deg[p.c + v] = bump(t.deg[sib]);
            t.lc[p.c + v] = checked_add(t.lc[sib], t.lc[src]);
        });

        // First half of B_k and its mirror image from I_{k-1}. The last u lands
        // on the midpoint, which is its own sibling.
        const std::uint64_t half_b = p.midpoint - p.b + 1;
        for_each_index(half_b, opts, [&](std::uint64_t u) {
            const std::uint64_t src = a_k1 + u;
            const ZeroCount d = bump(t.deg[src]);
            t.deg[p.b + u] = d;
            t.deg[whole - (p.b + u)] = d;
            t.lc[p.b + u] = t.lc[src];
            t.lc[whole - (p.b + u)] = t.lc[src];
        });
    }
    return t;
}

OptTables build_zeros(unsigned k_max, const BuildOptions& opts) {
    const std::uint64_t extent = table_extent(k_max, opts.budget);
    OptTables t;
    t.k_max = k_max;
    t.Z.assign(extent, 0);
    auto& Z = t.Z;

    Z[0] = 0;
    Z[1] = 0;
    Z[2] = 1;
    std::uint64_t a_i2 = 0;
    std::uint64_t a_i1 = 1;
    std::uint64_t a_i = 2;
    for (unsigned i = 3; i <= k_max; ++i) {
        a_i2 = a_i1;
        a_i1 = a_i;
        a_i = pow2(i - 2) + a_i2;
        const std::uint64_t loop_length = pow2(i - 1) - a_i;
        const std::uint64_t whole = pow2(i);
        Z[pow2(i - 1)] = static_cast<ZeroCount>(i - 1);
        for_each_index(loop_length, opts, [&](std::uint64_t j) {
            const ZeroCount z = bump(Z[a_i2 + j]);
            Z[a_i + j] = z;
            Z[whole - (a_i + j)] = z;
        });
    }
    return t;
}

OptTables build_num_opt(unsigned k_max, const BuildOptions& opts) {
    const std::uint64_t extent = table_extent(k_max, opts.budget);
    OptTables t;
    t.k_max = k_max;
    t.M.assign(extent, 0);
    auto& M = t.M;

    M[0] = 0;
    M[1] = 1;
    M[2] = 1;
    std::uint64_t a_i2 = 0;
    std::uint64_t a_i1 = 1;
    std::uint64_t a_i = 2;
    for (unsigned i = 3; i <= k_max; ++i) {
        a_i2 = a_i1;
        a_i1 = a_i;
        a_i = pow2(i - 2) + a_i2;

        // |I_{i-2}| and the length of the first half of B_i (midpoint included
        // for even i, excluded for odd i).
        const std::uint64_t ac_loop_length = i % 2 == 0 ? a_i2 - 1 : a_i2;
        const std::uint64_t b_loop_length = i % 2 == 0 ? a_i2 : a_i2 - 1;
        const std::uint64_t b_i = a_i + ac_loop_length;
        const std::uint64_t c_i = pow2(i - 1) + a_i2;
        const std::uint64_t quarter = pow2(i - 2);
        const std::uint64_t half = pow2(i - 1);
        const std::uint64_t whole = pow2(i);

        for_each_index(ac_loop_length, opts, [&](std::uint64_t h) {
            M[a_i + h] = checked_add(M[a_i2 + h], M[quarter - (a_i2 + h)]);
            M[c_i + h] = M[a_i2 + h];
        });
        M[half] = 1;
        for_each_index(b_loop_length, opts, [&](std::uint64_t j) {
            const Count m = M[half - (a_i1 + j)];
            M[b_i + j] = m;
            M[whole - (b_i + j)] = m;
        });
    }
    return t;
}

OptTables build_opt_tables(unsigned k_max, const BuildOptions& opts) {
    OptTables t = build_num_opt(k_max, opts);
    t.Z = build_zeros(k_max, opts).Z;
    return t;
}

IntervalMax range_max_m(const OptTables& tables, std::uint64_t first, std::uint64_t last) {
    if (tables.M.empty())
        throw DomainError("M table has not been built");
    if (first >= last || last > tables.M.size())
        throw DomainError("range [" + std::to_string(first) + ", " + std::to_string(last) +
                          ") is empty or outside the table");
    const auto begin = tables.M.begin() + static_cast<std::ptrdiff_t>(first);
    const auto it = std::max_element(begin, tables.M.begin() + static_cast<std::ptrdiff_t>(last));
    return {first + static_cast<std::uint64_t>(it - begin), *it};
}

IntervalMax interval_max_m(const OptTables& tables, unsigned k) {
    if (k < 3 || k > tables.k_max)
        throw DomainError("k=" + std::to_string(k) + " outside [3, " + std::to_string(tables.k_max) + "]");
    const Interval ik = interval(k);
    return range_max_m(tables, ik.low, ik.high);
}

std::uint64_t fibonacci(unsigned index) {
    std::uint64_t prev = 0;
    std::uint64_t cur = 1;
    if (index == 0)
        return 0;
    for (unsigned j = 1; j < index; ++j) {
        const std::uint64_t next = checked_add(prev, cur);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::optional<Mismatch> verify_against_stern(const OptTables* opt, const DegLcTables* deglc, unsigned depth) {
    if (depth < 1)
        throw DomainError("verification depth must be positive");
    if (opt != nullptr && depth > opt->k_max)
        throw DomainError("verification depth exceeds the optimal-representation tables");
    if (deglc != nullptr && depth > deglc->k_max)
        throw DomainError("verification depth exceeds the degree tables");

    const std::uint64_t extent = interval_start(depth + 1);
    const std::vector<SternPolynomial> stern = stern_table(extent - 1, extent);

    for (std::uint64_t n = 1; n < extent; ++n) {
        const unsigned k = naf_bitlength(n);
        const SternPolynomial& own = stern[n];
        const SternPolynomial& sib = stern[pow2(k) - n];
        if (opt != nullptr && !opt->M.empty() && opt->M[n] != leading_coefficient(sib))
            return Mismatch{n, "M", leading_coefficient(sib), opt->M[n]};
        if (opt != nullptr && !opt->Z.empty() && opt->Z[n] != degree(own))
            return Mismatch{n, "Z", degree(own), opt->Z[n]};
        if (deglc != nullptr && !deglc->deg.empty() && deglc->deg[n] != degree(own))
            return Mismatch{n, "deg", degree(own), deglc->deg[n]};
        if (deglc != nullptr && !deglc->lc.empty() && deglc->lc[n] != leading_coefficient(own))
            return Mismatch{n, "lc", leading_coefficient(own), deglc->lc[n]};
    }
    return std::nullopt;
}

} // namespace sternbsd
