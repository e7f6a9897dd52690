#include <linkgraph/error.hpp>

namespace linkgraph {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::LoopRejected: return "LoopRejected";
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::BacktrackEdge: return "BacktrackEdge";
        case ErrorCode::WindowTooLong: return "WindowTooLong";
        case ErrorCode::WindowTooShort: return "WindowTooShort";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotALink: return "NotALink";
        case ErrorCode::PartitionMismatch: return "PartitionMismatch";
        case ErrorCode::PartialColoring: return "PartialColoring";
        case ErrorCode::OracleTooLarge: return "OracleTooLarge";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NoCycleInY: return "NoCycleInY";
        case ErrorCode::BranchSetLacksLink: return "BranchSetLacksLink";
        case ErrorCode::NoEdge: return "NoEdge";
        case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

LimitExceeded::LimitExceeded(std::size_t count, std::size_t limit) :
    Error(ErrorCode::LimitExceeded,
            "enumeration reached " + std::to_string(count) + " items (limit " + std::to_string(limit) + ")"),
    _count(count),
    _limit(limit)
{
}

void fail(ErrorCode code, const std::string & message)
{
    throw Error(code, message);
}

}
