#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udapp {

enum class ErrorCode {
    EmptyCollection,
    DuplicateId,
    UnknownId,
    UnknownGroup,
    GroupMembershipViolation,
    SizeRangeViolation,
    NoSnapshot,
    CycleError,
    StateError,
    InvalidArgument,
    LexError,
    ParseError,
    UnknownFunction,
    BadRange,
    VersionError,
    ReferentialError,
    IoError,
    TraceParseError,
    EventError,
};

const char* to_string(ErrorCode code);

/** Base of every error raised by the engine. */
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/** An error that refers to a position in some textual input. */
class PositionedError : public Error {
public:
    PositionedError(ErrorCode code, std::size_t position, const std::string& reason)
        : Error(code, std::string(to_string(code)) + " at " + std::to_string(position) + ": " + reason),
          position_(position), reason_(reason)
    {
    }

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

} // namespace udapp
