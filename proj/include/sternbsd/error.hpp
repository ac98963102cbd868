#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sternbsd {

enum class ErrorKind {
    Domain,
    Overflow,
    Capacity,
    Limit,
    Io,
    Format,
    Verification,
};

/// Base for every error raised by the library. The C API maps `kind()` onto
/// its status codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

/// A result would not fit the fixed-width integer used for coefficients and counts.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

/// A request exceeds the configured memory budget.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(ErrorKind::Capacity, what) {}
};

/// An enumeration produced more results than the caller allowed.
class LimitError : public Error {
public:
    explicit LimitError(const std::string& what) : Error(ErrorKind::Limit, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(ErrorKind::Format, what) {}
};

class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(ErrorKind::Verification, what) {}
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in addition");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("64-bit overflow in multiplication");
    return r;
}

inline std::uint64_t pow2(unsigned e) {
    if (e >= 64)
        throw OverflowError("2^" + std::to_string(e) + " does not fit in 64 bits");
    return std::uint64_t{1} << e;
}

} // namespace sternbsd
