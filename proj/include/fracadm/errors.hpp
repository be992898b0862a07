#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracadm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gamma evaluated at (or within tolerance of) a non-positive integer.
class PoleError : public Error {
public:
    explicit PoleError(double z)
        : Error("gamma pole at z = " + std::to_string(z)), z_(z) {}
    double argument() const noexcept { return z_; }

private:
    double z_;
};

/// Evaluation or integration outside the domain of a term.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An operator order, truncation depth or identifier outside its admissible range.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class TermCapExceeded : public Error {
public:
    TermCapExceeded(std::size_t would_be, std::size_t cap)
        : Error("series product would hold " + std::to_string(would_be) +
                " terms, cap is " + std::to_string(cap)),
          would_be_(would_be), cap_(cap) {}
    std::size_t would_be() const noexcept { return would_be_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t would_be_;
    std::size_t cap_;
};

/// Raised by the decomposition recursion. The original error is nested
/// (std::rethrow_if_nested) and depth() names the component being built.
class SolveError : public Error {
public:
    SolveError(int depth, const std::string& cause)
        : Error("at depth n = " + std::to_string(depth) + ": " + cause), depth_(depth) {}
    int depth() const noexcept { return depth_; }

private:
    int depth_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(expected) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace fracadm
