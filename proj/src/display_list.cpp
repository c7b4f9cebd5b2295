#include "udapp/display_list.hpp"

#include "udapp/error.hpp"

#include <cmath>

namespace udapp {

bool Font::valid() const
{
    return !family.empty() && std::isfinite(size) && size > 0;
}

const char* to_string(DrawOp op)
{
    switch (op) {
    case DrawOp::FillRect: return "fill-rect";
    case DrawOp::StrokeRect: return "stroke-rect";
    case DrawOp::FillEllipse: return "fill-ellipse";
    case DrawOp::Text: return "text";
    case DrawOp::Polyline: return "polyline";
    case DrawOp::Frame: return "frame";
    }
    return "?";
}

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::GroupMembershipViolation: return "GroupMembershipViolation";
    case ErrorCode::SizeRangeViolation: return "SizeRangeViolation";
    case ErrorCode::NoSnapshot: return "NoSnapshot";
    case ErrorCode::CycleError: return "CycleError";
    case ErrorCode::StateError: return "StateError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::VersionError: return "VersionError";
    case ErrorCode::ReferentialError: return "ReferentialError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::TraceParseError: return "TraceParseError";
    case ErrorCode::EventError: return "EventError";
    }
    return "Error";
}

} // namespace udapp
