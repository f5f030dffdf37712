#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace advlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A symbol that is not part of the machine's (or oracle's) alphabet.
class InputDomainError : public Error {
public:
    InputDomainError(std::size_t position, const std::string &what)
        : Error(what), position_(position) {}

    /// 1-indexed position of the offending cell; 0 when not tied to a cell.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Advice that does not fit the input it is applied to, or breaks its budget.
class AdviceMismatchError : public Error {
public:
    using Error::Error;
};

/// A machine did something its model forbids (e.g. work head left of cell 1).
class MachineFault : public Error {
public:
    using Error::Error;
};

class SpaceCapExceeded : public Error {
public:
    SpaceCapExceeded(std::size_t cap, const std::string &what) : Error(what), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// The decompressor found no accepted string for some length.
class DecodeFailure : public Error {
public:
    DecodeFailure(std::size_t index, const std::string &what) : Error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search or enumeration whose size exceeds the configured ceiling.
class SearchRefused : public Error {
public:
    SearchRefused(std::uint64_t required, std::uint64_t ceiling, const std::string &what)
        : Error(what), required_(required), ceiling_(ceiling) {}
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t ceiling() const noexcept { return ceiling_; }

private:
    std::uint64_t required_;
    std::uint64_t ceiling_;
};

/// Unknown oracle, builder or growth-function name.
class UnknownNameError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace advlab
