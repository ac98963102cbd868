#include "sternbsd/sternbsd.h"

#include "sternbsd/error.hpp"
#include "sternbsd/naf.hpp"
#include "sternbsd/oracle.hpp"
#include "sternbsd/stern.hpp"
#include "sternbsd/tables.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <system_error>
#include <vector>

struct sbsd_poly {
    sternbsd::SternPolynomial value;
};

struct sbsd_reps {
    unsigned width;
    std::vector<sternbsd::BsdDigits> items;
};

struct sbsd_tables {
    sternbsd::TableSet set;
};

namespace {

thread_local std::string g_last_error;

sbsd_status fail(sbsd_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

sbsd_status status_for(sternbsd::ErrorKind kind) {
    using sternbsd::ErrorKind;
    switch (kind) {
    case ErrorKind::Domain: return SBSD_ERR_DOMAIN;
    case ErrorKind::Overflow: return SBSD_ERR_OVERFLOW;
    case ErrorKind::Capacity: return SBSD_ERR_CAPACITY;
    case ErrorKind::Limit: return SBSD_ERR_LIMIT;
    case ErrorKind::Io: return SBSD_ERR_IO;
    case ErrorKind::Format: return SBSD_ERR_FORMAT;
    case ErrorKind::Verification: return SBSD_ERR_VERIFY;
    }
    return SBSD_ERR_INTERNAL;
}

template <typename Fn>
sbsd_status guarded(Fn&& fn) noexcept {
    try {
        return fn();
    } catch (const sternbsd::Error& e) {
        return fail(status_for(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(SBSD_ERR_CAPACITY, "out of memory");
    } catch (const std::exception& e) {
        return fail(SBSD_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SBSD_ERR_INTERNAL, "unknown error");
    }
}

sbsd_status null_arg(const char* fn) { return fail(SBSD_ERR_INVALID_ARGUMENT, std::string(fn) + ": null argument"); }

unsigned built_columns(const sternbsd::TableSet& s) {
    unsigned c = 0;
    if (!s.opt.M.empty()) c |= SBSD_COL_M;
    if (!s.opt.Z.empty()) c |= SBSD_COL_Z;
    if (!s.deglc.deg.empty()) c |= SBSD_COL_DEG;
    if (!s.deglc.lc.empty()) c |= SBSD_COL_LC;
    return c;
}

} // namespace

extern "C" {

const char* sbsd_status_name(sbsd_status status) {
    switch (status) {
    case SBSD_OK: return "ok";
    case SBSD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SBSD_ERR_DOMAIN: return "domain error";
    case SBSD_ERR_OVERFLOW: return "overflow";
    case SBSD_ERR_CAPACITY: return "capacity exceeded";
    case SBSD_ERR_LIMIT: return "enumeration limit exceeded";
    case SBSD_ERR_IO: return "i/o error";
    case SBSD_ERR_FORMAT: return "format error";
    case SBSD_ERR_VERIFY: return "verification mismatch";
    case SBSD_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sbsd_last_error(void) { return g_last_error.c_str(); }

sbsd_status sbsd_stern_of(uint64_t n, sbsd_poly** out) {
    if (out == nullptr)
        return null_arg("sbsd_stern_of");
    return guarded([&] {
        *out = new sbsd_poly{sternbsd::stern_of(n)};
        return SBSD_OK;
    });
}

sbsd_status sbsd_schinzel_compose(unsigned a, uint64_t m, uint64_t r, int sign, sbsd_poly** out) {
    if (out == nullptr)
        return null_arg("sbsd_schinzel_compose");
    if (sign != 1 && sign != -1)
        return fail(SBSD_ERR_INVALID_ARGUMENT, "sbsd_schinzel_compose: sign must be +1 or -1");
    return guarded([&] {
        const auto s = sign > 0 ? sternbsd::Sign::Plus : sternbsd::Sign::Minus;
        *out = new sbsd_poly{sternbsd::schinzel_compose(a, m, r, s)};
        return SBSD_OK;
    });
}

void sbsd_poly_free(sbsd_poly* p) { delete p; }

size_t sbsd_poly_length(const sbsd_poly* p) { return p == nullptr ? 0 : p->value.coeffs().size(); }

sbsd_status sbsd_poly_coeffs(const sbsd_poly* p, uint64_t* coeffs, size_t capacity, size_t* length) {
    if (p == nullptr || (coeffs == nullptr && capacity != 0))
        return null_arg("sbsd_poly_coeffs");
    const auto c = p->value.coeffs();
    std::copy_n(c.begin(), std::min(capacity, c.size()), coeffs);
    if (length != nullptr)
        *length = c.size();
    return SBSD_OK;
}

sbsd_status sbsd_poly_degree(const sbsd_poly* p, size_t* degree) {
    if (p == nullptr || degree == nullptr)
        return null_arg("sbsd_poly_degree");
    return guarded([&] {
        *degree = sternbsd::degree(p->value);
        return SBSD_OK;
    });
}

sbsd_status sbsd_poly_leading_coefficient(const sbsd_poly* p, uint64_t* lc) {
    if (p == nullptr || lc == nullptr)
        return null_arg("sbsd_poly_leading_coefficient");
    return guarded([&] {
        *lc = sternbsd::leading_coefficient(p->value);
        return SBSD_OK;
    });
}

sbsd_status sbsd_poly_evaluate(const sbsd_poly* p, uint64_t t0, uint64_t* value) {
    if (p == nullptr || value == nullptr)
        return null_arg("sbsd_poly_evaluate");
    return guarded([&] {
        *value = sternbsd::evaluate(p->value, t0);
        return SBSD_OK;
    });
}

sbsd_status sbsd_naf_encode(uint64_t n, int8_t* digits, size_t capacity, size_t* length) {
    if (length == nullptr || (digits == nullptr && capacity != 0))
        return null_arg("sbsd_naf_encode");
    return guarded([&] {
        const auto d = sternbsd::naf_encode(n);
        *length = d.length();
        if (capacity < d.length())
            return fail(SBSD_ERR_INVALID_ARGUMENT, "sbsd_naf_encode: buffer too small");
        std::copy(d.digits.begin(), d.digits.end(), digits);
        return SBSD_OK;
    });
}

sbsd_status sbsd_naf_bitlength(uint64_t n, unsigned* k) {
    if (k == nullptr)
        return null_arg("sbsd_naf_bitlength");
    return guarded([&] {
        *k = sternbsd::naf_bitlength(n);
        return SBSD_OK;
    });
}

sbsd_status sbsd_interval(unsigned k, uint64_t* low, uint64_t* high) {
    if (low == nullptr || high == nullptr)
        return null_arg("sbsd_interval");
    return guarded([&] {
        const auto iv = sternbsd::interval(k);
        *low = iv.low;
        *high = iv.high;
        return SBSD_OK;
    });
}

sbsd_status sbsd_interval_length(unsigned k, uint64_t* length) {
    if (length == nullptr)
        return null_arg("sbsd_interval_length");
    return guarded([&] {
        *length = sternbsd::interval_length(k);
        return SBSD_OK;
    });
}

sbsd_status sbsd_partition_of(unsigned k, sbsd_partition* out) {
    if (out == nullptr)
        return null_arg("sbsd_partition_of");
    return guarded([&] {
        const auto p = sternbsd::partition(k);
        *out = sbsd_partition{p.k, p.a, p.b, p.c, p.midpoint, p.upper, p.len_outer, p.len_mid};
        return SBSD_OK;
    });
}

sbsd_status sbsd_block_of(const sbsd_partition* p, uint64_t n, sbsd_block* block) {
    if (p == nullptr || block == nullptr)
        return null_arg("sbsd_block_of");
    return guarded([&] {
        const sternbsd::NafPartition np{p->k, p->a, p->b, p->c, p->midpoint, p->upper, p->len_outer, p->len_mid};
        switch (sternbsd::block_of(np, n)) {
        case sternbsd::Block::A: *block = SBSD_BLOCK_A; break;
        case sternbsd::Block::B: *block = SBSD_BLOCK_B; break;
        case sternbsd::Block::C: *block = SBSD_BLOCK_C; break;
        case sternbsd::Block::Midpoint: *block = SBSD_BLOCK_MIDPOINT; break;
        }
        return SBSD_OK;
    });
}

sbsd_status sbsd_sibling(uint64_t n, unsigned k, uint64_t* out) {
    if (out == nullptr)
        return null_arg("sbsd_sibling");
    return guarded([&] {
        *out = sternbsd::sibling(n, k);
        return SBSD_OK;
    });
}

sbsd_status sbsd_enumerate_bsd(int64_t n, unsigned i, uint64_t limit, sbsd_reps** out) {
    if (out == nullptr)
        return null_arg("sbsd_enumerate_bsd");
    return guarded([&] {
        auto items = sternbsd::enumerate_bsd(n, i, limit == 0 ? sternbsd::kDefaultEnumerationLimit : limit);
        *out = new sbsd_reps{i, std::move(items)};
        return SBSD_OK;
    });
}

void sbsd_reps_free(sbsd_reps* reps) { delete reps; }

size_t sbsd_reps_count(const sbsd_reps* reps) { return reps == nullptr ? 0 : reps->items.size(); }

unsigned sbsd_reps_width(const sbsd_reps* reps) { return reps == nullptr ? 0 : reps->width; }

sbsd_status sbsd_reps_get(const sbsd_reps* reps, size_t index, int8_t* digits, size_t capacity) {
    if (reps == nullptr || (digits == nullptr && reps->width != 0))
        return null_arg("sbsd_reps_get");
    if (index >= reps->items.size())
        return fail(SBSD_ERR_DOMAIN, "sbsd_reps_get: index out of range");
    if (capacity < reps->width)
        return fail(SBSD_ERR_INVALID_ARGUMENT, "sbsd_reps_get: buffer too small");
    const auto& d = reps->items[index].digits;
    std::copy(d.begin(), d.end(), digits);
    return SBSD_OK;
}

sbsd_status sbsd_weight_distribution(int64_t n, unsigned i, uint64_t limit, uint64_t* counts, size_t capacity) {
    if (counts == nullptr)
        return null_arg("sbsd_weight_distribution");
    if (capacity < static_cast<size_t>(i) + 1)
        return fail(SBSD_ERR_INVALID_ARGUMENT, "sbsd_weight_distribution: capacity must be at least i + 1");
    return guarded([&] {
        const auto wd =
            sternbsd::weight_distribution(n, i, limit == 0 ? sternbsd::kDefaultEnumerationLimit : limit);
        std::fill_n(counts, static_cast<size_t>(i) + 1, uint64_t{0});
        for (const auto& [zeros, count] : wd.counts)
            counts[zeros] = count;
        return SBSD_OK;
    });
}

sbsd_status sbsd_tables_build(unsigned k_max, unsigned columns, unsigned flags, sbsd_tables** out) {
    if (out == nullptr)
        return null_arg("sbsd_tables_build");
    if ((columns & SBSD_COL_ALL) == 0 || (columns & ~SBSD_COL_ALL) != 0 || (flags & ~SBSD_BUILD_PARALLEL) != 0)
        return fail(SBSD_ERR_INVALID_ARGUMENT, "sbsd_tables_build: invalid column or flag selection");
    return guarded([&] {
        sternbsd::BuildOptions opts;
        opts.parallel = (flags & SBSD_BUILD_PARALLEL) != 0;
        auto t = std::make_unique<sbsd_tables>();
        t->set.k_max = k_max;
        if (columns & SBSD_COL_M)
            t->set.opt = sternbsd::build_num_opt(k_max, opts);
        if (columns & SBSD_COL_Z) {
            auto z = sternbsd::build_zeros(k_max, opts);
            t->set.opt.k_max = k_max;
            t->set.opt.Z = std::move(z.Z);
        }
        if (columns & (SBSD_COL_DEG | SBSD_COL_LC)) {
            t->set.deglc = sternbsd::build_deg_lc(k_max, opts);
            if (!(columns & SBSD_COL_DEG))
                t->set.deglc.deg = {};
            if (!(columns & SBSD_COL_LC))
                t->set.deglc.lc = {};
        }
        t->set.columns = columns;
        *out = t.release();
        return SBSD_OK;
    });
}

sbsd_status sbsd_tables_load_csv(const char* path, sbsd_tables** out) {
    if (path == nullptr || out == nullptr)
        return null_arg("sbsd_tables_load_csv");
    return guarded([&] {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw sternbsd::IoError(std::string("cannot open ") + path);
        auto t = std::make_unique<sbsd_tables>();
        t->set = sternbsd::read_table_csv(in);
        *out = t.release();
        return SBSD_OK;
    });
}

void sbsd_tables_free(sbsd_tables* t) { delete t; }

unsigned sbsd_tables_k_max(const sbsd_tables* t) { return t == nullptr ? 0 : t->set.k_max; }

unsigned sbsd_tables_columns(const sbsd_tables* t) { return t == nullptr ? 0 : built_columns(t->set); }

uint64_t sbsd_tables_extent(const sbsd_tables* t) {
    return t == nullptr ? 0 : sternbsd::interval_start(t->set.k_max + 1);
}

sbsd_status sbsd_tables_get(const sbsd_tables* t, unsigned column, uint64_t n, uint64_t* value) {
    if (t == nullptr || value == nullptr)
        return null_arg("sbsd_tables_get");
    const auto& s = t->set;
    const auto pick = [&](const auto& vec, const char* name) {
        if (vec.empty())
            return fail(SBSD_ERR_DOMAIN, std::string("column ") + name + " was not built");
        if (n >= vec.size())
            return fail(SBSD_ERR_DOMAIN, "n=" + std::to_string(n) + " is outside the table");
        *value = vec[n];
        return SBSD_OK;
    };
    switch (column) {
    case SBSD_COL_M: return pick(s.opt.M, "M");
    case SBSD_COL_Z: return pick(s.opt.Z, "Z");
    case SBSD_COL_DEG: return pick(s.deglc.deg, "deg");
    case SBSD_COL_LC: return pick(s.deglc.lc, "lc");
    default: return fail(SBSD_ERR_INVALID_ARGUMENT, "sbsd_tables_get: column must be a single SBSD_COL_* value");
    }
}

sbsd_status sbsd_tables_interval_max_m(const sbsd_tables* t, unsigned k, uint64_t* n_star, uint64_t* m_star) {
    if (t == nullptr || n_star == nullptr || m_star == nullptr)
        return null_arg("sbsd_tables_interval_max_m");
    return guarded([&] {
        const auto r = sternbsd::interval_max_m(t->set.opt, k);
        *n_star = r.n_star;
        *m_star = r.m_star;
        return SBSD_OK;
    });
}

namespace {

class FileStreamBuf : public std::streambuf {
public:
    explicit FileStreamBuf(FILE* f) : file_(f) {}

protected:
    int_type overflow(int_type ch) override {
        if (traits_type::eq_int_type(ch, traits_type::eof()))
            return traits_type::not_eof(ch);
        return std::fputc(ch, file_) == EOF ? traits_type::eof() : ch;
    }
    std::streamsize xsputn(const char* s, std::streamsize n) override {
        return static_cast<std::streamsize>(std::fwrite(s, 1, static_cast<size_t>(n), file_));
    }

private:
    FILE* file_;
};

} // namespace

sbsd_status sbsd_tables_write_csv(const sbsd_tables* t, unsigned columns, FILE* stream) {
    if (t == nullptr || stream == nullptr)
        return null_arg("sbsd_tables_write_csv");
    return guarded([&] {
        FileStreamBuf buf(stream);
        std::ostream out(&buf);
        sternbsd::write_table_csv(out, t->set, columns);
        if (std::fflush(stream) != 0)
            throw sternbsd::IoError("flush failed");
        return SBSD_OK;
    });
}

sbsd_status sbsd_tables_save_csv(const sbsd_tables* t, unsigned columns, const char* path) {
    if (t == nullptr || path == nullptr)
        return null_arg("sbsd_tables_save_csv");
    return guarded([&] {
        const std::filesystem::path target(path);
        std::filesystem::path tmp = target;
        tmp += ".tmp";
        try {
            {
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                if (!out)
                    throw sternbsd::IoError("cannot create " + tmp.string());
                sternbsd::write_table_csv(out, t->set, columns);
                out.close();
                if (!out)
                    throw sternbsd::IoError("write to " + tmp.string() + " failed");
            }
            std::filesystem::rename(tmp, target);
        } catch (...) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw;
        }
        return SBSD_OK;
    });
}

sbsd_status sbsd_tables_verify(const sbsd_tables* t, unsigned depth, uint64_t* mismatch_n) {
    if (t == nullptr)
        return null_arg("sbsd_tables_verify");
    return guarded([&] {
        const auto& s = t->set;
        const bool has_opt = !s.opt.M.empty() || !s.opt.Z.empty();
        const bool has_deglc = !s.deglc.deg.empty() || !s.deglc.lc.empty();
        const auto mismatch = sternbsd::verify_against_stern(has_opt ? &s.opt : nullptr, has_deglc ? &s.deglc : nullptr, depth);
        if (mismatch) {
            if (mismatch_n != nullptr)
                *mismatch_n = mismatch->n;
            return fail(SBSD_ERR_VERIFY, "column " + mismatch->column + " at n=" + std::to_string(mismatch->n) +
                                             ": expected " + std::to_string(mismatch->expected) + ", table has " +
                                             std::to_string(mismatch->actual));
        }
        return SBSD_OK;
    });
}

sbsd_status sbsd_fibonacci(unsigned index, uint64_t* value) {
    if (value == nullptr)
        return null_arg("sbsd_fibonacci");
    return guarded([&] {
        *value = sternbsd::fibonacci(index);
        return SBSD_OK;
    });
}

} // extern "C"
