#pragma once

#include <stdexcept>
#include <string>

namespace ordinary {

// Every failure the library can signal. The CLI maps these onto exit codes;
// codes tagged "anomaly" mean a search that is guaranteed to succeed came up
// empty, which indicates a logic error (or a genuine mathematical surprise)
// and is never silently absorbed.
enum class Err {
    ZeroVector,
    EqualPoints,
    EqualLines,
    TooFewPoints,
    TooFewLines,
    DuplicatePoint,
    UnsupportedDegree,
    WrongDegree,
    ZeroPolynomial,
    OutOfRange,
    BadBase,
    PointInBase,
    NoCondition,
    ForcedPoint,
    AllCollinear,
    AllConcurrent,
    NoOrdinaryPoint,
    NotFound,
    ContainedInCurve,
    SelectionFailed,
    BadSubsetSize,
    WrongSize,
    BudgetExceeded,
    ParseError,
    FormatError,
    SpecInvalid,
    Anomaly,
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

inline const char* err_name(Err c) {
    switch (c) {
        case Err::ZeroVector: return "ZeroVector";
        case Err::EqualPoints: return "EqualPoints";
        case Err::EqualLines: return "EqualLines";
        case Err::TooFewPoints: return "TooFewPoints";
        case Err::TooFewLines: return "TooFewLines";
        case Err::DuplicatePoint: return "DuplicatePoint";
        case Err::UnsupportedDegree: return "UnsupportedDegree";
        case Err::WrongDegree: return "WrongDegree";
        case Err::ZeroPolynomial: return "ZeroPolynomial";
        case Err::OutOfRange: return "OutOfRange";
        case Err::BadBase: return "BadBase";
        case Err::PointInBase: return "PointInBase";
        case Err::NoCondition: return "NoCondition";
        case Err::ForcedPoint: return "ForcedPoint";
        case Err::AllCollinear: return "AllCollinear";
        case Err::AllConcurrent: return "AllConcurrent";
        case Err::NoOrdinaryPoint: return "NoOrdinaryPoint";
        case Err::NotFound: return "NotFound";
        case Err::ContainedInCurve: return "ContainedInCurve";
        case Err::SelectionFailed: return "SelectionFailed";
        case Err::BadSubsetSize: return "BadSubsetSize";
        case Err::WrongSize: return "WrongSize";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::ParseError: return "ParseError";
        case Err::FormatError: return "FormatError";
        case Err::SpecInvalid: return "SpecInvalid";
        case Err::Anomaly: return "Anomaly";
    }
    return "Unknown";
}

} // namespace ordinary
