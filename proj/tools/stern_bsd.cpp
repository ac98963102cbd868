// stern-bsd: command-line front end over the libsternbsd C API.
//
// Exit codes: 0 ok, 1 i/o or internal failure, 2 usage/domain error,
// 3 overflow, 4 enumeration limit exceeded, 5 verification mismatch.

#include "sternbsd/sternbsd.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitOverflow = 3,
    kExitLimit = 4,
    kExitVerify = 5,
};

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(sbsd_status s) {
    switch (s) {
    case SBSD_OK: return kExitOk;
    case SBSD_ERR_INVALID_ARGUMENT:
    case SBSD_ERR_DOMAIN:
    case SBSD_ERR_CAPACITY:
    case SBSD_ERR_FORMAT: return kExitUsage;
    case SBSD_ERR_OVERFLOW: return kExitOverflow;
    case SBSD_ERR_LIMIT: return kExitLimit;
    case SBSD_ERR_VERIFY: return kExitVerify;
    case SBSD_ERR_IO:
    case SBSD_ERR_INTERNAL: return kExitFailure;
    }
    return kExitFailure;
}

void check(sbsd_status s) {
    if (s != SBSD_OK)
        throw CliError{exit_code_for(s), std::string(sbsd_status_name(s)) + ": " + sbsd_last_error()};
}

struct PolyDeleter {
    void operator()(sbsd_poly* p) const { sbsd_poly_free(p); }
};
struct RepsDeleter {
    void operator()(sbsd_reps* r) const { sbsd_reps_free(r); }
};
struct TablesDeleter {
    void operator()(sbsd_tables* t) const { sbsd_tables_free(t); }
};
using Poly = std::unique_ptr<sbsd_poly, PolyDeleter>;
using Reps = std::unique_ptr<sbsd_reps, RepsDeleter>;
using Tables = std::unique_ptr<sbsd_tables, TablesDeleter>;

// Decimal only: no sign, prefix, or whitespace.
std::uint64_t parse_unsigned(const std::string& text, const char* what) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw CliError{kExitUsage, std::string(what) + ": expected a nonnegative decimal integer, got '" + text + "'"};
    return v;
}

std::int64_t parse_signed(const std::string& text, const char* what) {
    std::int64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw CliError{kExitUsage, std::string(what) + ": expected a decimal integer, got '" + text + "'"};
    return v;
}

unsigned parse_small(const std::string& text, const char* what) {
    const std::uint64_t v = parse_unsigned(text, what);
    if (v > 1000)
        throw CliError{kExitUsage, std::string(what) + ": value " + text + " is out of range"};
    return static_cast<unsigned>(v);
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep) {
    std::string s;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j != 0)
            s += sep;
        s += std::to_string(xs[j]);
    }
    return s;
}

std::string bsd_string(const std::vector<std::int8_t>& lsb_first) {
    std::string s;
    for (auto it = lsb_first.rbegin(); it != lsb_first.rend(); ++it)
        s += *it < 0 ? "-1" : (*it == 0 ? "0" : "1");
    return s;
}

// Writes to stdout, or to `path` via a temporary file renamed on success.
void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << std::flush;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.close();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw CliError{kExitFailure, "cannot write " + path};
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw CliError{kExitFailure, "cannot rename onto " + path};
    }
}

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "text")
        return Format::Text;
    if (s == "csv")
        return Format::Csv;
    return Format::Json;
}

// -- stern ------------------------------------------------------------------

struct SternArgs {
    std::string n;
    std::optional<std::string> eval;
    std::string format = "text";
};

std::string run_stern(const SternArgs& args) {
    const std::uint64_t n = parse_unsigned(args.n, "n");
    Poly p;
    {
        sbsd_poly* raw = nullptr;
        check(sbsd_stern_of(n, &raw));
        p.reset(raw);
    }
    std::vector<std::uint64_t> coeffs(sbsd_poly_length(p.get()));
    check(sbsd_poly_coeffs(p.get(), coeffs.data(), coeffs.size(), nullptr));

    std::optional<std::size_t> deg;
    std::optional<std::uint64_t> lc;
    if (!coeffs.empty()) {
        std::size_t d = 0;
        std::uint64_t l = 0;
        check(sbsd_poly_degree(p.get(), &d));
        check(sbsd_poly_leading_coefficient(p.get(), &l));
        deg = d;
        lc = l;
    }
    std::optional<std::uint64_t> t0, value;
    if (args.eval) {
        t0 = parse_unsigned(*args.eval, "--eval");
        std::uint64_t v = 0;
        check(sbsd_poly_evaluate(p.get(), *t0, &v));
        value = v;
    }

    const auto opt_str = [](const auto& o, const char* none) { return o ? std::to_string(*o) : std::string(none); };
    std::ostringstream out;
    switch (parse_format(args.format)) {
    case Format::Text:
        out << "n: " << n << "\n"
            << "coeffs: [" << join(coeffs, ",") << "]\n"
            << "deg: " << opt_str(deg, "undefined") << "\n"
            << "lc: " << opt_str(lc, "undefined") << "\n";
        if (value)
            out << "eval(" << *t0 << "): " << *value << "\n";
        break;
    case Format::Csv:
        out << "n,coeffs,deg,lc" << (value ? ",t,value" : "") << "\n"
            << n << "," << join(coeffs, " ") << "," << opt_str(deg, "") << "," << opt_str(lc, "");
        if (value)
            out << "," << *t0 << "," << *value;
        out << "\n";
        break;
    case Format::Json: {
        json j;
        j["n"] = n;
        j["coeffs"] = coeffs;
        j["deg"] = deg ? json(*deg) : json(nullptr);
        j["lc"] = lc ? json(*lc) : json(nullptr);
        if (value) {
            j["t"] = *t0;
            j["value"] = *value;
        }
        out << j.dump() << "\n";
        break;
    }
    }
    return out.str();
}

// -- naf --------------------------------------------------------------------

struct NafArgs {
    std::string n;
    std::string format = "text";
};

std::string run_naf(const NafArgs& args) {
    const std::uint64_t n = parse_unsigned(args.n, "n");
    if (n == 0)
        throw CliError{kExitUsage, "naf: n must be positive"};
    std::vector<std::int8_t> digits(65);
    std::size_t len = 0;
    check(sbsd_naf_encode(n, digits.data(), digits.size(), &len));
    digits.resize(len);
    unsigned k = 0;
    check(sbsd_naf_bitlength(n, &k));
    std::uint64_t sib = 0;
    check(sbsd_sibling(n, k, &sib));

    std::string block = "none";
    if (k >= 3) {
        sbsd_partition part{};
        check(sbsd_partition_of(k, &part));
        sbsd_block b{};
        check(sbsd_block_of(&part, n, &b));
        static const char* const kNames[] = {"A", "B", "C", "midpoint"};
        block = kNames[b];
    }

    const std::string naf = bsd_string(digits);
    std::ostringstream out;
    switch (parse_format(args.format)) {
    case Format::Text:
        out << "n: " << n << "\nnaf: " << naf << "\nk: " << k << "\nblock: " << block << "\nsibling: " << sib
            << "\n";
        break;
    case Format::Csv:
        out << "n,naf,k,block,sibling\n" << n << "," << naf << "," << k << "," << block << "," << sib << "\n";
        break;
    case Format::Json: {
        json j;
        j["n"] = n;
        j["naf"] = naf;
        j["k"] = k;
        j["block"] = block;
        j["sibling"] = sib;
        out << j.dump() << "\n";
        break;
    }
    }
    return out.str();
}

// -- enum -------------------------------------------------------------------

struct EnumArgs {
    std::string n;
    std::string i;
    std::optional<std::string> limit;
    std::string format = "text";
};

std::uint64_t enumeration_limit(const EnumArgs& args) {
    if (args.limit)
        return parse_unsigned(*args.limit, "--limit");
    if (const char* env = std::getenv("STERN_BSD_LIMIT"); env != nullptr && *env != '\0')
        return parse_unsigned(env, "STERN_BSD_LIMIT");
    return 0;  // library default
}

int run_enum(const EnumArgs& args, std::string& rendered) {
    const std::int64_t n = parse_signed(args.n, "n");
    const unsigned i = parse_small(args.i, "i");
    const std::uint64_t limit = enumeration_limit(args);
    if (args.limit && limit == 0)
        throw CliError{kExitUsage, "--limit must be positive"};

    Reps reps;
    {
        sbsd_reps* raw = nullptr;
        check(sbsd_enumerate_bsd(n, i, limit, &raw));
        reps.reset(raw);
    }
    const std::size_t count = sbsd_reps_count(reps.get());
    std::vector<std::string> strings;
    strings.reserve(count);
    std::vector<std::uint64_t> dist(i + 1, 0);
    std::vector<std::int8_t> digits(std::max(1u, i));
    for (std::size_t r = 0; r < count; ++r) {
        check(sbsd_reps_get(reps.get(), r, digits.data(), digits.size()));
        std::vector<std::int8_t> d(digits.begin(), digits.begin() + i);
        strings.push_back(bsd_string(d));
        ++dist[static_cast<std::size_t>(std::count(d.begin(), d.end(), std::int8_t{0}))];
    }

    // Cross-check against B_{2^i - n} where that index is defined.
    std::optional<std::uint64_t> stern_index;
    std::vector<std::uint64_t> stern_coeffs;
    std::string verdict = "n/a";
    if (i < 63 && n >= 0 && static_cast<std::uint64_t>(n) <= (std::uint64_t{1} << i)) {
        stern_index = (std::uint64_t{1} << i) - static_cast<std::uint64_t>(n);
        sbsd_poly* raw = nullptr;
        check(sbsd_stern_of(*stern_index, &raw));
        Poly p(raw);
        stern_coeffs.resize(sbsd_poly_length(p.get()));
        check(sbsd_poly_coeffs(p.get(), stern_coeffs.data(), stern_coeffs.size(), nullptr));
        std::vector<std::uint64_t> trimmed = dist;
        while (!trimmed.empty() && trimmed.back() == 0)
            trimmed.pop_back();
        verdict = trimmed == stern_coeffs ? "PASS" : "FAIL";
    }

    std::vector<std::pair<unsigned, std::uint64_t>> present;
    for (unsigned l = 0; l <= i; ++l)
        if (dist[l] != 0)
            present.emplace_back(l, dist[l]);

    std::ostringstream out;
    switch (parse_format(args.format)) {
    case Format::Text: {
        out << "n: " << n << "\ni: " << i << "\ncount: " << count << "\n";
        for (const auto& s : strings)
            out << s << "\n";
        out << "distribution: {";
        for (std::size_t j = 0; j < present.size(); ++j)
            out << (j ? ", " : "") << present[j].first << ":" << present[j].second;
        out << "}\n";
        if (stern_index)
            out << "stern check: " << verdict << " (B_" << *stern_index << " = [" << join(stern_coeffs, ",")
                << "])\n";
        else
            out << "stern check: n/a\n";
        break;
    }
    case Format::Csv:
        out << "field,key,value\n";
        out << "n,," << n << "\ni,," << i << "\ncount,," << count << "\n";
        for (std::size_t r = 0; r < strings.size(); ++r)
            out << "representation," << r << "," << strings[r] << "\n";
        for (const auto& [l, c] : present)
            out << "distribution," << l << "," << c << "\n";
        if (stern_index)
            out << "stern_index,," << *stern_index << "\nstern_coeffs,," << join(stern_coeffs, " ") << "\n";
        out << "check,," << verdict << "\n";
        break;
    case Format::Json: {
        json j;
        j["n"] = n;
        j["i"] = i;
        j["count"] = count;
        j["representation"] = strings;
        json d = json::object();
        for (const auto& [l, c] : present)
            d[std::to_string(l)] = c;
        j["distribution"] = d;
        if (stern_index) {
            j["stern_index"] = *stern_index;
            j["stern_coeffs"] = stern_coeffs;
        }
        j["check"] = verdict;
        out << j.dump() << "\n";
        break;
    }
    }
    rendered = out.str();
    return verdict == "FAIL" ? kExitVerify : kExitOk;
}

// -- table / dist -------------------------------------------------------------

unsigned column_for(const std::string& what) {
    if (what == "M")
        return SBSD_COL_M;
    if (what == "Z")
        return SBSD_COL_Z;
    if (what == "deg")
        return SBSD_COL_DEG;
    if (what == "lc")
        return SBSD_COL_LC;
    return SBSD_COL_ALL;
}

const std::vector<std::pair<unsigned, const char*>>& column_names() {
    static const std::vector<std::pair<unsigned, const char*>> names{
        {SBSD_COL_M, "M"}, {SBSD_COL_Z, "Z"}, {SBSD_COL_DEG, "deg"}, {SBSD_COL_LC, "lc"}};
    return names;
}

Tables build_tables(unsigned k_max, unsigned columns, bool parallel) {
    sbsd_tables* raw = nullptr;
    check(sbsd_tables_build(k_max, columns, parallel ? unsigned{SBSD_BUILD_PARALLEL} : 0u, &raw));
    return Tables(raw);
}

struct TableArgs {
    std::string k_max;
    std::string what = "all";
    std::string out;
    std::optional<std::string> verify;  // "" when given without a value
    bool parallel = false;
    std::string format = "csv";
};

void run_table(const TableArgs& args) {
    const unsigned k_max = parse_small(args.k_max, "k_max");
    if (k_max < 3)
        throw CliError{kExitUsage, "table: k_max must be at least 3"};
    const unsigned columns = column_for(args.what);
    Tables t = build_tables(k_max, columns, args.parallel);

    if (args.verify) {
        const unsigned depth = args.verify->empty() ? std::min(k_max, 12u) : parse_small(*args.verify, "--verify");
        std::uint64_t bad = 0;
        check(sbsd_tables_verify(t.get(), depth, &bad));
        std::cerr << "verified n < a_" << depth + 1 << " against Stern polynomials\n";
    }

    if (parse_format(args.format) != Format::Json) {
        if (args.out.empty())
            check(sbsd_tables_write_csv(t.get(), columns, stdout));
        else
            check(sbsd_tables_save_csv(t.get(), columns, args.out.c_str()));
        return;
    }

    const std::uint64_t extent = sbsd_tables_extent(t.get());
    std::string text = "{\"k_max\":" + std::to_string(k_max) + ",\"rows\":[";
    for (std::uint64_t n = 1; n < extent; ++n) {
        text += n == 1 ? "{\"n\":" : ",{\"n\":";
        text += std::to_string(n);
        for (const auto& [bit, name] : column_names()) {
            if (!(columns & bit))
                continue;
            std::uint64_t v = 0;
            check(sbsd_tables_get(t.get(), bit, n, &v));
            text += ",\"";
            text += name;
            text += "\":";
            text += std::to_string(v);
        }
        text += '}';
    }
    text += "]}\n";
    emit(text, args.out);
}

struct DistArgs {
    std::string k;
    std::string what = "M";
    std::string out;
    std::string format = "csv";
};

void run_dist(const DistArgs& args) {
    const unsigned k = parse_small(args.k, "k");
    if (k < 3)
        throw CliError{kExitUsage, "dist: k must be at least 3"};
    const unsigned column = args.what == "Z" ? SBSD_COL_Z : SBSD_COL_M;
    Tables t = build_tables(k, column, false);

    std::uint64_t low = 0, high = 0;
    check(sbsd_interval(k, &low, &high));
    std::vector<std::uint64_t> values;
    values.reserve(high - low);
    std::uint64_t best = 0, argmax = low;
    for (std::uint64_t n = low; n < high; ++n) {
        std::uint64_t v = 0;
        check(sbsd_tables_get(t.get(), column, n, &v));
        if (values.empty() || v > best) {
            best = v;
            argmax = n;
        }
        values.push_back(v);
    }
    std::optional<std::uint64_t> predicted;
    if (column == SBSD_COL_M) {
        std::uint64_t n_star = 0, m_star = 0, fib = 0;
        check(sbsd_tables_interval_max_m(t.get(), k, &n_star, &m_star));
        check(sbsd_fibonacci((k + 1) / 2 + 1, &fib));
        best = m_star;
        argmax = n_star;
        predicted = fib;
    }

    std::ostringstream out;
    if (parse_format(args.format) == Format::Json) {
        json j;
        j["k"] = k;
        j["what"] = args.what;
        json rows = json::array();
        for (std::uint64_t n = low; n < high; ++n)
            rows.push_back(json{{"n", n}, {args.what, values[n - low]}});
        j["rows"] = rows;
        j["max"] = best;
        j["argmax"] = argmax;
        if (predicted)
            j["fib_prediction"] = *predicted;
        out << j.dump() << "\n";
    } else {
        out << "n," << args.what << "\n";
        for (std::uint64_t n = low; n < high; ++n)
            out << n << "," << values[n - low] << "\n";
        out << "# max=" << best << " argmax=" << argmax;
        if (predicted)
            out << " fib_prediction=" << *predicted;
        out << "\n";
    }
    emit(out.str(), args.out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stern polynomials, non-adjacent forms and optimal binary signed-digit representations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "stern-bsd 1.0.0");

    const std::vector<std::string> text_formats{"text", "csv", "json"};
    const std::vector<std::string> data_formats{"csv", "json"};

    SternArgs stern_args;
    auto* stern = app.add_subcommand("stern", "Stern polynomial B_n: coefficients, degree, leading coefficient");
    stern->add_option("n", stern_args.n, "index n >= 0")->required();
    stern->add_option("--eval", stern_args.eval, "also evaluate B_n at this point");
    stern->add_option("--format", stern_args.format)->check(CLI::IsMember(text_formats));

    NafArgs naf_args;
    auto* naf = app.add_subcommand("naf", "reduced NAF, NAF-bitlength, partition block and sibling");
    naf->add_option("n", naf_args.n, "integer n >= 1")->required();
    naf->add_option("--format", naf_args.format)->check(CLI::IsMember(text_formats));

    EnumArgs enum_args;
    auto* enumerate = app.add_subcommand("enum", "all i-digit BSD representations of n and their zero counts");
    enumerate->add_option("n", enum_args.n, "integer n (may be negative)")->required();
    enumerate->add_option("i", enum_args.i, "digit budget i >= 0")->required();
    enumerate->add_option("--limit", enum_args.limit, "maximum number of representations (env STERN_BSD_LIMIT)");
    enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember(text_formats));

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "build M/Z/deg/lc tables for every n < a_{k_max+1}");
    table->add_option("k_max", table_args.k_max, "largest NAF-bitlength, >= 3")->required();
    table->add_option("--what", table_args.what)->check(CLI::IsMember({"M", "Z", "deg", "lc", "all"}));
    table->add_option("--out", table_args.out, "write to this file instead of stdout");
    table->add_option("--verify", table_args.verify, "re-derive entries from Stern polynomials up to this depth")
        ->expected(0, 1);
    table->add_flag("--parallel", table_args.parallel, "parallelise the per-interval loops");
    table->add_option("--format", table_args.format)->check(CLI::IsMember(data_formats));

    DistArgs dist_args;
    auto* dist = app.add_subcommand("dist", "distribution of M or Z over the NAF-interval I_k");
    dist->add_option("k", dist_args.k, "NAF-bitlength k >= 3")->required();
    dist->add_option("--what", dist_args.what)->check(CLI::IsMember({"M", "Z"}));
    dist->add_option("--out", dist_args.out, "write to this file instead of stdout");
    dist->add_option("--format", dist_args.format)->check(CLI::IsMember(data_formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*stern) {
            std::cout << run_stern(stern_args);
        } else if (*naf) {
            std::cout << run_naf(naf_args);
        } else if (*enumerate) {
            std::string text;
            const int code = run_enum(enum_args, text);
            std::cout << text;
            return code;
        } else if (*table) {
            run_table(table_args);
        } else if (*dist) {
            run_dist(dist_args);
        }
    } catch (const CliError& e) {
        std::cerr << "stern-bsd: " << e.message << "\n";
        return e.code;
    }
    return kExitOk;
}
