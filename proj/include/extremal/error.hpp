#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace extremal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that is structurally wrong: ragged matrices, mixed fields, bad syntax.
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// Too few elements for a pairwise statistic.
class InsufficientInput : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition of an operation does not hold.
/// `clause()` names the violated condition.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(std::string clause, const std::string& detail)
        : Error(clause + ": " + detail), clause_(std::move(clause)) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

class SingularSystem : public Error {
public:
    SingularSystem(std::size_t rank, std::size_t size)
        : Error("singular system: rank " + std::to_string(rank) + " < " + std::to_string(size)),
          rank_(rank) {}

    std::size_t rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

class UnsupportedOrder : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

class ResourceGuard : public Error {
public:
    using Error::Error;
};

/// A construction or certificate contradicted its own postcondition.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace extremal
