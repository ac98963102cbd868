// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "cli_runner.hpp"
#include "oracles.hpp"

#include "sternbsd/naf.hpp"
#include "sternbsd/oracle.hpp"
#include "sternbsd/stern.hpp"
#include "sternbsd/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sternbsd;

namespace {

constexpr unsigned kExhaustiveWidth = 8;
constexpr int kSamplesPerWidth = 100;
constexpr unsigned kEquivalenceK = 16;
constexpr unsigned kFibMinK = 3;
constexpr unsigned kFibMaxK = 24;
constexpr int kSchinzelTuples = 1000;
constexpr unsigned kSchinzelMaxA = 10;
constexpr std::uint64_t kSchinzelMaxM = 32;
constexpr unsigned kPartitionMaxK = 24;
constexpr std::uint64_t kNafZerosMax = std::uint64_t{1} << 16;
constexpr std::uint64_t kNafMinimalityBelow = std::uint64_t{1} << 10;
constexpr std::uint64_t kEvaluationMax = 100000;
constexpr unsigned kScalingK = 24;
constexpr int kTimingRuns = 3;
constexpr double kMaxScalingRatio = 2.5;
constexpr std::uint64_t kSeed = 0x5eed2024;

std::uint64_t p2(unsigned e) { return std::uint64_t{1} << e; }

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok)
            detail = why;
        ok = false;
    }
};

// AC1
Outcome weight_distribution_theorem() {
    Outcome o;
    std::uint64_t checked = 0;
    auto one = [&](std::uint64_t n, unsigned i) {
        const auto got = weight_distribution(static_cast<std::int64_t>(n), i).as_polynomial();
        if (!(got == stern_of(p2(i) - n)))
            o.fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
        ++checked;
    };
    for (unsigned i = 0; i <= kExhaustiveWidth; ++i)
        for (std::uint64_t n = 0; n <= p2(i); ++n)
            one(n, i);
    std::mt19937_64 rng(kSeed);
    for (unsigned i : {10u, 12u, 14u}) {
        std::uniform_int_distribution<std::uint64_t> pick(0, p2(i));
        for (int s = 0; s < kSamplesPerWidth; ++s)
            one(pick(rng), i);
    }
    if (o.ok)
        o.detail = std::to_string(checked) + " (n,i) pairs exact";
    return o;
}

// AC2
Outcome algorithm_oracle_equivalence() {
    Outcome o;
    const auto opt = build_opt_tables(kEquivalenceK);
    const auto dl = build_deg_lc(kEquivalenceK);
    const auto stern = stern_table(p2(kEquivalenceK + 1));
    for (std::uint64_t n = 1; n < opt.size() && o.ok; ++n) {
        const unsigned k = oracle::naf_k(n);
        const auto& own = stern[n];
        const auto& sib = stern[p2(k) - n];
        if (opt.M[n] != leading_coefficient(sib))
            o.fail("M mismatch at n=" + std::to_string(n));
        else if (opt.Z[n] != degree(own))
            o.fail("Z mismatch at n=" + std::to_string(n));
        else if (dl.deg[n] != degree(own))
            o.fail("deg mismatch at n=" + std::to_string(n));
        else if (dl.lc[n] != leading_coefficient(own))
            o.fail("lc mismatch at n=" + std::to_string(n));
    }
    if (o.ok)
        o.detail = std::to_string(opt.size() - 1) + " entries x 4 columns exact";
    return o;
}

// AC3
Outcome fibonacci_maxima(std::string& info) {
    Outcome o;
    const auto t = build_num_opt(kFibMaxK);
    for (unsigned k = kFibMinK; k <= kFibMaxK; ++k) {
        const auto best = interval_max_m(t, k);
        const auto p = partition(k);
        const auto want = oracle::fib((k + 1) / 2 + 1);
        if (best.m_star != want)
            o.fail("k=" + std::to_string(k) + " max " + std::to_string(best.m_star) + " != " + std::to_string(want));
        if (best.n_star < p.a || best.n_star >= p.b)
            o.fail("k=" + std::to_string(k) + " argmax " + std::to_string(best.n_star) + " outside A_k");
    }
    const std::pair<unsigned, Count> spots[] = {{5, 3}, {15, 34}, {16, 34}};
    for (auto [k, v] : spots)
        if (interval_max_m(t, k).m_star != v)
            o.fail("spot k=" + std::to_string(k));
    if (o.ok)
        o.detail = "k=3..24; spots k=5:3 k=15:34 k=16:34";

    // Maxima inside B_k, reported only.
    std::ostringstream s;
    unsigned agree = 0, total = 0;
    for (unsigned k = 5; k <= kFibMaxK; ++k) {
        const auto p = partition(k);
        const auto m = range_max_m(t, p.b, p.c).m_star;
        const auto predicted = oracle::fib(k % 2 == 0 ? k / 2 : (k - 1) / 2);
        agree += m == predicted;
        ++total;
    }
    s << "max of M over B_k matches F_{k/2} / F_{(k-1)/2} for " << agree << "/" << total << " of k=5.." << kFibMaxK;
    info = s.str();
    return o;
}

// AC4
Outcome schinzel_identity() {
    Outcome o;
    std::mt19937_64 rng(kSeed + 4);
    std::uniform_int_distribution<unsigned> pick_a(0, kSchinzelMaxA);
    std::uniform_int_distribution<std::uint64_t> pick_m(1, kSchinzelMaxM);
    for (int t = 0; t < kSchinzelTuples; ++t) {
        const unsigned a = pick_a(rng);
        const std::uint64_t m = pick_m(rng);
        const std::uint64_t r = std::uniform_int_distribution<std::uint64_t>(0, p2(a))(rng);
        const Sign sign = rng() % 2 == 0 ? Sign::Plus : Sign::Minus;
        const std::uint64_t index = sign == Sign::Plus ? p2(a) * m + r : p2(a) * m - r;
        if (!(schinzel_compose(a, m, r, sign) == stern_of(index)))
            o.fail("a=" + std::to_string(a) + " m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
    if (o.ok)
        o.detail = std::to_string(kSchinzelTuples) + " random tuples exact";
    return o;
}

// AC5
Outcome interval_partition_suite() {
    Outcome o;
    std::uint64_t next = 1;
    for (unsigned k = 1; k <= kPartitionMaxK; ++k) {
        const auto ik = interval(k);
        const auto ks = std::to_string(k);
        if (ik.low != next || ik.low != (p2(k) + 2) / 3 || ik.high != (p2(k + 1) + 2) / 3)
            o.fail("tiling at k=" + ks);
        next = ik.high;
        if (naf_bitlength(ik.low) != k || naf_bitlength(ik.high - 1) != k)
            o.fail("bitlength at k=" + ks);
        for (std::uint64_t n = ik.low; n < ik.high; ++n) {
            const auto s = p2(k) - n;
            if (!ik.contains(s) || sibling(n, k) != s)
                o.fail("sibling closure at n=" + std::to_string(n));
        }
        if (k < 3)
            continue;
        if (interval_length(k) != interval_length(k - 1) + 2 * interval_length(k - 2))
            o.fail("length recursion at k=" + ks);
        const auto p = partition(k);
        const std::uint64_t a2 = (p2(k - 2) + 2) / 3;
        const std::uint64_t l2 = interval_length(k - 2);
        const std::uint64_t half = p2(k - 1);
        if (p.a != p2(k - 2) + a2 || p.c != half + a2)
            o.fail("a_k/c_k closed form at k=" + ks);
        const std::uint64_t b_want = k % 2 == 0 ? half - l2 : half - l2 + 1;
        const std::uint64_t c_want = k % 2 == 0 ? half + l2 + 1 : half + l2;
        if (p.b != b_want || p.c != c_want)
            o.fail("b_k/c_k closed form at k=" + ks);
        if (p.b != p.a + l2 || p.c != p.b + interval_length(k - 1) || p.upper != p.c + l2 || p.upper != ik.high)
            o.fail("block lengths at k=" + ks);
        for (std::uint64_t v = 0; v < l2; ++v) {
            const std::uint64_t x = sibling(a2 + v, k - 2) - a2;
            if (sibling(p.a + v, k) != p.c + x)
                o.fail("sibling across k at k=" + ks + " v=" + std::to_string(v));
        }
    }
    if (o.ok)
        o.detail = "k=1..24 exact";
    return o;
}

// AC6
Outcome naf_corollary() {
    Outcome o;
    const auto t = build_zeros(17);
    const auto stern = stern_table(kNafZerosMax);
    for (std::uint64_t n = 1; n <= kNafZerosMax; ++n) {
        const auto zeros = zero_count(naf_encode(n));
        if (zeros != t.Z[n] || zeros != degree(stern[n]))
            o.fail("zeros at n=" + std::to_string(n));
    }
    for (std::uint64_t n = 1; n < kNafMinimalityBelow; ++n) {
        const unsigned k = naf_bitlength(n);
        const auto w = hamming_weight(naf_encode(n));
        for (const auto& d : enumerate_bsd(static_cast<std::int64_t>(n), k))
            if (hamming_weight(d) < w)
                o.fail("lighter representation of n=" + std::to_string(n) + ": " + to_string(d));
    }
    if (o.ok)
        o.detail = "zeros n<=65536; minimality n<1024";
    return o;
}

// AC7
Outcome evaluation_identities() {
    Outcome o;
    const auto c = oracle::diatomic(kEvaluationMax);
    for (std::uint64_t n = 0; n <= kEvaluationMax; ++n) {
        const auto p = stern_of(n);
        if (evaluate(p, 2) != n)
            o.fail("B_n(2) at n=" + std::to_string(n));
        if (evaluate(p, 1) != c[n])
            o.fail("B_n(1) at n=" + std::to_string(n));
    }
    if (o.ok)
        o.detail = "n<=100000 exact";
    return o;
}

double best_build_seconds(unsigned k) {
    double best = 1e300;
    for (int r = 0; r < kTimingRuns; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto t = build_opt_tables(k);
        const auto t1 = std::chrono::steady_clock::now();
        if (t.M.size() != t.size() || t.Z.size() != t.size())
            return -1;
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

// AC8
Outcome linear_scaling() {
    Outcome o;
    const double lo = best_build_seconds(kScalingK - 1);
    const double hi = best_build_seconds(kScalingK);
    if (lo <= 0 || hi <= 0) {
        o.fail("build failed");
        return o;
    }
    const double ratio = hi / lo;
    char buf[160];
    std::snprintf(buf, sizeof buf, "t(24)=%.3fs t(23)=%.3fs ratio=%.2f (limit %.1f, best of %d)", hi, lo, ratio,
                  kMaxScalingRatio, kTimingRuns);
    o.detail = buf;
    if (ratio > kMaxScalingRatio)
        o.ok = false;
    return o;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// AC9
Outcome cli_golden() {
    Outcome o;
    const std::string dir = GOLDEN_DIR;
    std::ifstream cases(dir + "/cases.txt");
    if (!cases) {
        o.fail("cannot read " + dir + "/cases.txt");
        return o;
    }
    std::string line;
    int count = 0;
    while (std::getline(cases, line)) {
        if (trim(line).empty() || line[0] == '#')
            continue;
        const auto bar1 = line.find('|');
        const auto bar2 = line.find('|', bar1 + 1);
        const int want_exit = std::stoi(trim(line.substr(0, bar1)));
        const auto file = trim(line.substr(bar1 + 1, bar2 - bar1 - 1));
        const auto args = trim(line.substr(bar2 + 1));
        const auto got = run_cli(STERN_BSD_CLI, args);
        ++count;
        if (got.exit_code != want_exit) {
            o.fail("`" + args + "` exit " + std::to_string(got.exit_code) + " != " + std::to_string(want_exit));
            continue;
        }
        if (file == "-")
            continue;
        std::ifstream g(dir + "/" + file, std::ios::binary);
        const std::string want((std::istreambuf_iterator<char>(g)), std::istreambuf_iterator<char>());
        if (!g.good() && !g.eof())
            o.fail("cannot read " + file);
        else if (got.out != want)
            o.fail("`" + args + "` differs from " + file);
    }
    if (o.ok)
        o.detail = std::to_string(count) + " invocations byte-exact";
    return o;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](const char* id, const char* title, const std::function<Outcome()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.ok;
        std::printf("%s %s: %s -- %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
        std::fflush(stdout);
    };

    std::string info;
    report("AC1", "weight distribution equals B_{2^i-n}", weight_distribution_theorem);
    report("AC2", "table algorithms agree with Stern polynomials", algorithm_oracle_equivalence);
    report("AC3", "interval maxima of M are Fibonacci numbers", [&] { return fibonacci_maxima(info); });
    report("AC4", "Schinzel composition identity", schinzel_identity);
    report("AC5", "intervals, partition and siblings", interval_partition_suite);
    report("AC6", "NAF zeros and minimal weight", naf_corollary);
    report("AC7", "B_n(2) = n and B_n(1) = c(n)", evaluation_identities);
    report("AC8", "linear-time table construction", linear_scaling);
    report("AC9", "CLI golden outputs", cli_golden);
    std::printf("INFO %s\n", info.c_str());
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
