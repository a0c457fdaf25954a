#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace bowtie {

// Domain errors map to CLI exit status 1; usage/format problems are
// reported separately by the CLI layer (exit status 2).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContainsBowtieError : public DomainError {
public:
    ContainsBowtieError(const std::string& what, std::array<int, 5> witness)
        : DomainError(what), witness_(witness) {}
    const std::array<int, 5>& witness() const { return witness_; }

private:
    std::array<int, 5> witness_;
};

class NotSpecialError : public DomainError {
public:
    NotSpecialError(const std::string& what, int offending_vertex)
        : DomainError(what), offending_(offending_vertex) {}
    int offending_vertex() const { return offending_; }

private:
    int offending_;
};

class NotExtendableError : public DomainError {
public:
    NotExtendableError(const std::string& what, int blocking_vertex)
        : DomainError(what), blocking_(blocking_vertex) {}
    int blocking_vertex() const { return blocking_; }

private:
    int blocking_;
};

class InvalidKError : public DomainError {
public:
    using DomainError::DomainError;
};

class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

// A proof-claim check failed at runtime.  This signals a bug in the
// construction itself, not bad input, hence logic_error.
class InternalClaimError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bowtie
