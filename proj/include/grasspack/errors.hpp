#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grasspack {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shape mismatch or a dimension product that cannot be represented.
class SizeError : public Error {
public:
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

/// Input outside the mathematical domain of an operation
/// (non-Hermitian matrix where Hermitian is required, i == j pair, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Rank-deficient input where full rank is required.
/// Carries the numerical rank that was attained.
class RankError : public Error {
public:
    RankError(const std::string& msg, std::size_t rank_attained)
        : Error(msg), rank(rank_attained) {}
    std::size_t rank;
};

/// Data that parses structurally but violates a validity requirement
/// (broken orthonormality, field mismatch, out-of-range tolerance, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Text that is not syntactically valid input (malformed JSON, wrong schema).
class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

/// Filesystem-level failure: file missing, unreadable, or unwritable.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace grasspack
