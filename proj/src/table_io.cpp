#include "sternbsd/error.hpp"
#include "sternbsd/naf.hpp"
#include "sternbsd/tables.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace sternbsd {

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

struct ColumnSpec {
    Column bit;
    const char* name;
};

constexpr std::array<ColumnSpec, 4> kColumns{{
    {kColumnM, "M"},
    {kColumnZ, "Z"},
    {kColumnDeg, "deg"},
    {kColumnLc, "lc"},
}};

std::string header_for(unsigned columns) {
    std::string h = "n";
    for (const auto& c : kColumns)
        if (columns & c.bit) {
            h += ',';
            h += c.name;
        }
    return h;
}

void append_number(std::string& s, std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    s.append(buf, res.ptr);
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t parse_u64(std::string_view field, std::size_t line) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw FormatError("line " + std::to_string(line) + ": bad integer '" + std::string(field) + "'");
    return v;
}

} // namespace

void write_table_csv(std::ostream& out, const TableSet& tables, unsigned columns) {
    if ((columns & kColumnAll) == 0 || (columns & ~unsigned{kColumnAll}) != 0)
        throw DomainError("write_table_csv: invalid column selection");
    const std::uint64_t extent = interval_start(tables.k_max + 1);
    const auto need = [&](bool ok, const char* name) {
        if (!ok)
            throw DomainError(std::string("write_table_csv: column ") + name + " is not populated");
    };
    if (columns & kColumnM)
        need(tables.opt.M.size() >= extent, "M");
    if (columns & kColumnZ)
        need(tables.opt.Z.size() >= extent, "Z");
    if (columns & kColumnDeg)
        need(tables.deglc.deg.size() >= extent, "deg");
    if (columns & kColumnLc)
        need(tables.deglc.lc.size() >= extent, "lc");

    std::uint64_t hash = fnv1a64({});
    std::string buf;
    const auto flush = [&] {
        hash = fnv1a64(buf, hash);
        out << buf;
        buf.clear();
    };

    buf = "# k_max=" + std::to_string(tables.k_max) + "\n" + header_for(columns) + "\n";
    for (std::uint64_t n = 1; n < extent; ++n) {
        append_number(buf, n);
        if (columns & kColumnM) {
            buf += ',';
            append_number(buf, tables.opt.M[n]);
        }
        if (columns & kColumnZ) {
            buf += ',';
            append_number(buf, tables.opt.Z[n]);
        }
        if (columns & kColumnDeg) {
            buf += ',';
            append_number(buf, tables.deglc.deg[n]);
        }
        if (columns & kColumnLc) {
            buf += ',';
            append_number(buf, tables.deglc.lc[n]);
        }
        buf += '\n';
        if (buf.size() > (1u << 16))
            flush();
    }
    flush();
    out << "# checksum=" << hex64(hash) << "\n";
    if (!out)
        throw IoError("write_table_csv: stream write failed");
}

TableSet read_table_csv(std::istream& in) {
    std::string line;
    std::uint64_t hash = fnv1a64({});
    std::size_t line_no = 0;
    const auto next = [&]() -> bool {
        if (!std::getline(in, line))
            return false;
        ++line_no;
        return true;
    };
    const auto absorb = [&] {
        hash = fnv1a64(line, hash);
        hash = fnv1a64("\n", hash);
    };

    constexpr std::string_view kMeta = "# k_max=";
    if (!next() || !line.starts_with(kMeta))
        throw FormatError("missing '# k_max=' metadata line");
    absorb();
    const std::uint64_t k_raw = parse_u64(std::string_view(line).substr(kMeta.size()), line_no);
    if (k_raw < 3 || k_raw >= kMaxNafBitlength)
        throw FormatError("k_max out of range");

    TableSet t;
    t.k_max = static_cast<unsigned>(k_raw);
    const std::uint64_t extent = table_extent(t.k_max);

    if (!next())
        throw FormatError("missing header line");
    absorb();
    std::vector<Column> order;
    {
        std::string_view rest(line);
        if (!rest.starts_with("n"))
            throw FormatError("header must start with 'n'");
        rest.remove_prefix(1);
        while (!rest.empty()) {
            if (rest.front() != ',')
                throw FormatError("malformed header");
            rest.remove_prefix(1);
            const std::size_t cut = rest.find(',');
            const std::string_view name = rest.substr(0, cut);
            bool known = false;
            for (const auto& c : kColumns)
                if (name == c.name && !(t.columns & c.bit)) {
                    order.push_back(c.bit);
                    t.columns |= c.bit;
                    known = true;
                }
            if (!known)
                throw FormatError("unknown or repeated column '" + std::string(name) + "'");
            rest.remove_prefix(cut == std::string_view::npos ? rest.size() : cut);
        }
        if (header_for(t.columns) != line)
            throw FormatError("columns out of canonical order");
    }

    t.opt.k_max = t.k_max;
    t.deglc.k_max = t.k_max;
    if (t.columns & kColumnM)
        t.opt.M.assign(extent, 0);
    if (t.columns & kColumnZ)
        t.opt.Z.assign(extent, 0);
    if (t.columns & kColumnDeg)
        t.deglc.deg.assign(extent, 0);
    if (t.columns & kColumnLc)
        t.deglc.lc.assign(extent, 0);

    std::uint64_t n_expected = 1;
    while (next()) {
        if (line.starts_with("# checksum=")) {
            const std::string want = hex64(hash);
            if (line.substr(11) != want)
                throw FormatError("checksum mismatch: file says " + line.substr(11) + ", content hashes to " + want);
            if (n_expected != extent)
                throw FormatError("expected " + std::to_string(extent - 1) + " rows, found " +
                                  std::to_string(n_expected - 1));
            if (next())
                throw FormatError("content after checksum line");
            return t;
        }
        absorb();
        std::string_view rest(line);
        std::vector<std::uint64_t> fields;
        while (true) {
            const std::size_t cut = rest.find(',');
            fields.push_back(parse_u64(rest.substr(0, cut), line_no));
            if (cut == std::string_view::npos)
                break;
            rest.remove_prefix(cut + 1);
        }
        if (fields.size() != order.size() + 1)
            throw FormatError("line " + std::to_string(line_no) + ": wrong field count");
        if (fields[0] != n_expected || n_expected >= extent)
            throw FormatError("line " + std::to_string(line_no) + ": unexpected n");
        const std::uint64_t n = n_expected++;
        for (std::size_t f = 0; f < order.size(); ++f) {
            const std::uint64_t v = fields[f + 1];
            switch (order[f]) {
            case kColumnM: t.opt.M[n] = v; break;
            case kColumnLc: t.deglc.lc[n] = v; break;
            case kColumnZ:
            case kColumnDeg:
                if (v > 0xff)
                    throw FormatError("line " + std::to_string(line_no) + ": zero count out of range");
                (order[f] == kColumnZ ? t.opt.Z[n] : t.deglc.deg[n]) = static_cast<ZeroCount>(v);
                break;
            default: break;
            }
        }
    }
    throw FormatError("missing checksum line");
}

} // namespace sternbsd
