#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linkgraph {

enum class ErrorCode {
    LoopRejected,
    MalformedLine,
    InvalidParameter,
    UnknownVertex,
    UnknownEdge,
    LimitExceeded,
    EndpointMismatch,
    BacktrackEdge,
    WindowTooLong,
    WindowTooShort,
    LengthMismatch,
    NotALink,
    PartitionMismatch,
    PartialColoring,
    OracleTooLarge,
    PreconditionViolated,
    NoCycleInY,
    BranchSetLacksLink,
    NoEdge,
    ConstructionFailed,
};

auto to_string(ErrorCode code) -> std::string_view;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

/// Raised when an enumeration passes its configured size limit.
class LimitExceeded : public Error {
public:
    LimitExceeded(std::size_t count, std::size_t limit);

    auto count() const noexcept -> std::size_t { return _count; }
    auto limit() const noexcept -> std::size_t { return _limit; }

private:
    std::size_t _count;
    std::size_t _limit;
};

[[noreturn]] void fail(ErrorCode code, const std::string & message);

}
