#pragma once

/**
 * Whole-interval tables over the NAF-intervals I_1 .. I_kmax.
 *
 * Every entry of I_k is produced from I_{k-1} and I_{k-2} with O(1) work:
 *
 *   - build_deg_lc:  deg(B_n) and lc(B_n)
 *   - build_zeros:   Z[n], the number of zeros in an optimal BSD representation
 *   - build_num_opt: M[n], the number of optimal BSD representations
 *
 * An optimal representation of n in I_k is a k-digit BSD string whose weight
 * equals that of the reduced NAF of n. Tables are flat arrays indexed by n and
 * cover 0 <= n < a_{kmax+1}.
 *
 * Within one interval all writes land on distinct indices and only read the
 * two previous intervals, so the per-interval loops may run in parallel;
 * the interval loop itself is sequential.
 */

#include "sternbsd/stern.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sternbsd {

using Count = std::uint64_t;
using ZeroCount = std::uint8_t;

/// Default cap on the number of table entries (k_max <= 28).
inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 28;

struct BuildOptions {
    bool parallel = false;
    unsigned threads = 0;  // 0: hardware concurrency
    std::uint64_t budget = kDefaultTableBudget;
};

struct OptTables {
    unsigned k_max = 0;
    std::vector<Count> M;      // empty unless built by build_num_opt
    std::vector<ZeroCount> Z;  // empty unless built by build_zeros

    /// a_{k_max+1}: one past the largest covered n.
    std::uint64_t size() const;
};

struct DegLcTables {
    unsigned k_max = 0;
    std::vector<ZeroCount> deg;  // index 0 unused
    std::vector<Count> lc;       // index 0 unused

    std::uint64_t size() const;
};

/// Number of entries needed for k_max, i.e. a_{k_max+1}. DomainError if k_max < 3;
/// CapacityError if it exceeds `budget`.
std::uint64_t table_extent(unsigned k_max, std::uint64_t budget = kDefaultTableBudget);

DegLcTables build_deg_lc(unsigned k_max, const BuildOptions& opts = {});
OptTables build_zeros(unsigned k_max, const BuildOptions& opts = {});
OptTables build_num_opt(unsigned k_max, const BuildOptions& opts = {});
/// Both M and Z.
OptTables build_opt_tables(unsigned k_max, const BuildOptions& opts = {});

struct IntervalMax {
    std::uint64_t n_star;  // smallest maximiser
    Count m_star;
};

/// Maximum of M over I_k. DomainError unless 3 <= k <= tables.k_max and M is built.
IntervalMax interval_max_m(const OptTables& tables, unsigned k);

/// Same scan restricted to [first, last).
IntervalMax range_max_m(const OptTables& tables, std::uint64_t first, std::uint64_t last);

/// F_1 = F_2 = 1.
std::uint64_t fibonacci(unsigned index);

struct Mismatch {
    std::uint64_t n;
    std::string column;
    std::uint64_t expected;
    std::uint64_t actual;
};

/// Re-derives every populated column for 1 <= n < a_{depth+1} from Stern
/// polynomials: M[n] = lc(B_{2^k - n}), Z[n] = deg(B_n), deg and lc directly.
/// Returns the first disagreement. DomainError if depth exceeds the tables.
std::optional<Mismatch> verify_against_stern(const OptTables* opt, const DegLcTables* deglc, unsigned depth);

// -- CSV cache ---------------------------------------------------------------
//
//   # k_max=<k>
//   n,M,Z,deg,lc            (selected columns, in this order)
//   1,1,0,0,1
//   ...
//   # checksum=<fnv1a64 hex of every preceding byte>

enum Column : unsigned {
    kColumnM = 1u << 0,
    kColumnZ = 1u << 1,
    kColumnDeg = 1u << 2,
    kColumnLc = 1u << 3,
    kColumnAll = kColumnM | kColumnZ | kColumnDeg | kColumnLc,
};

struct TableSet {
    unsigned k_max = 0;
    OptTables opt;
    DegLcTables deglc;
    unsigned columns = 0;
};

/// Rows 1 <= n < a_{k_max+1}. Every requested column must be populated.
void write_table_csv(std::ostream& out, const TableSet& tables, unsigned columns);

/// Parses a cache written by write_table_csv, checking the checksum, the row
/// count and the header. Throws FormatError on any inconsistency.
TableSet read_table_csv(std::istream& in);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

} // namespace sternbsd
