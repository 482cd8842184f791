#ifndef ROKHLIN_ERRORS_HPP
#define ROKHLIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rokhlin {

/// Base of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI in its messages.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Endpoint, point or argument outside the admissible domain.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// Malformed rational string.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error("format", what) {}
};

/// Malformed system or certificate document.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

/// Conditioning on a null set.
class UndefinedConditionalError : public Error {
public:
    explicit UndefinedConditionalError(const std::string& what)
        : Error("undefined-conditional", what) {}
};

/// Exact representation would exceed a configured size guard.
class ComplexityError : public Error {
public:
    ComplexityError(const std::string& what, std::size_t size, std::size_t limit)
        : Error("complexity", what), size_(size), limit_(limit) {}
    std::size_t size() const noexcept { return size_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t size_;
    std::size_t limit_;
};

/// Chain search exhausted its refinement levels without a certificate.
class ChainNotFoundError : public Error {
public:
    ChainNotFoundError(const std::string& what, int deepest_level, std::size_t cells)
        : Error("chain-not-found", what), deepest_level_(deepest_level), cells_(cells) {}
    int deepest_level() const noexcept { return deepest_level_; }
    std::size_t cells_tried() const noexcept { return cells_; }

private:
    int deepest_level_;
    std::size_t cells_;
};

/// The system does not preserve its declared measure.
class NotPreservingError : public Error {
public:
    explicit NotPreservingError(const std::string& what) : Error("not-preserving", what) {}
};

/// A nigh-aperiodicity defect is positive at `n()`.
class DefectPositiveError : public Error {
public:
    DefectPositiveError(const std::string& what, int n) : Error("defect-positive", what), n_(n) {}
    int n() const noexcept { return n_; }

private:
    int n_;
};

/// A distribution function with a plateau cannot be inverted.
class NotInvertibleError : public Error {
public:
    explicit NotInvertibleError(const std::string& what) : Error("not-invertible", what) {}
};

/// The assembled tower does not exceed 1 - epsilon within the caps.
class BoundNotMetError : public Error {
public:
    explicit BoundNotMetError(const std::string& what) : Error("bound-not-met", what) {}
};

}  // namespace rokhlin

#endif  // ROKHLIN_ERRORS_HPP
