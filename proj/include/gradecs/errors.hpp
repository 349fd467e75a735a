#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradecs {

enum class Errc {
    DivisionByZero,
    ModulusOverflow,
    InvalidType,
    InvalidArgument,
    InfiniteFixedGroup,
    OracleBoundExceeded,
    UnsupportedP,
    SizeBoundExceeded,
    NoEmbeddingAttached,
    DegreeMismatch,
    RealizationMismatch,
    OracleDisagreement,
    LemmaMismatch,
    UnclassifiedRankOne,
    PowerExtractionFailed,
    OrbitInconsistency,
    TheoremMismatch,
    RecursionUnsupported,
};

constexpr std::string_view errc_name(Errc e) {
    switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ModulusOverflow: return "ModulusOverflow";
    case Errc::InvalidType: return "InvalidType";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InfiniteFixedGroup: return "InfiniteFixedGroup";
    case Errc::OracleBoundExceeded: return "OracleBoundExceeded";
    case Errc::UnsupportedP: return "UnsupportedP";
    case Errc::SizeBoundExceeded: return "SizeBoundExceeded";
    case Errc::NoEmbeddingAttached: return "NoEmbeddingAttached";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::RealizationMismatch: return "RealizationMismatch";
    case Errc::OracleDisagreement: return "OracleDisagreement";
    case Errc::LemmaMismatch: return "LemmaMismatch";
    case Errc::UnclassifiedRankOne: return "UnclassifiedRankOne";
    case Errc::PowerExtractionFailed: return "PowerExtractionFailed";
    case Errc::OrbitInconsistency: return "OrbitInconsistency";
    case Errc::TheoremMismatch: return "TheoremMismatch";
    case Errc::RecursionUnsupported: return "RecursionUnsupported";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Internal inconsistencies map to exit code 3 in the CLI; everything else is a usage error.
constexpr bool is_internal(Errc e) {
    switch (e) {
    case Errc::OracleDisagreement:
    case Errc::RealizationMismatch:
    case Errc::PowerExtractionFailed:
    case Errc::OrbitInconsistency:
    case Errc::UnclassifiedRankOne:
    case Errc::DegreeMismatch:
        return true;
    default:
        return false;
    }
}

} // namespace gradecs
