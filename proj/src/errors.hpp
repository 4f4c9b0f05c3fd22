#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

/// Base class for all library errors; carries a stable category tag so the
/// C boundary can map exceptions to status codes without RTTI chains.
class Error : public std::runtime_error {
public:
    enum class Code {
        domain,
        no_root,
        size,
        convergence,
        config,
        insufficient_points,
        unstable,
    };

    Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const noexcept { return code_; }

private:
    Code code_;
};

/// Input outside the accepted parameter domain. Always names the field.
class DomainError : public Error {
public:
    DomainError(std::string field, const std::string& what)
        : Error(Code::domain, what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class NoRootError : public Error {
public:
    explicit NoRootError(const std::string& what) : Error(Code::no_root, what) {}
};

class SizeError : public Error {
public:
    explicit SizeError(const std::string& what) : Error(Code::size, what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(Code::convergence, what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(Code::config, what) {}
};

class InsufficientPointsError : public Error {
public:
    explicit InsufficientPointsError(const std::string& what)
        : Error(Code::insufficient_points, what) {}
};

/// The squeeze parameter left the stability window |epsilon| <= 1 + 1e-12.
class StabilityError : public Error {
public:
    explicit StabilityError(const std::string& what) : Error(Code::unstable, what) {}
};

} // namespace lmg
