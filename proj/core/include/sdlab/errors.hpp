#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

/// Malformed input file or JSON document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch: non-square input, incompatible block sizes, bad index sets.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical hypothesis required by the operation does not hold
/// (singular block where nonsingularity is required, non-Hermitian input,
/// parameter outside the supported range).
class HypothesisError : public std::invalid_argument {
public:
    explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

/// File system failure (unreadable input, unwritable output path).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sdlab
