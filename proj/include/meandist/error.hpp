#pragma once

#include <stdexcept>
#include <string>

namespace meandist {

enum class ErrorCode {
    OPEN_SURFACE,
    DEGENERATE,
    C_OFF_HULL,
    NONCONVEX,
    UNSUPPORTED_MOMENT,
    P_OUT_OF_RANGE,
    H_ZERO,
    COPLANAR_POINT,
    DEGENERATE_POLYGON,
    NOT_SKEW,
    NO_OVERLAP_SUPPORT,
    MISSING_IRREDUCIBLE,
    P_POLE,
    DEGENERATE_TETRAHEDRON,
    SCALING_POINT_OFF_HULL,
    BUDGET_EXCEEDED,
    UNKNOWN_SOLID,
    INDEX_RANGE,
    ZERO_MEASURE,
    TOLERANCE_NOT_MET,
    BAD_INPUT,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::OPEN_SURFACE: return "OPEN_SURFACE";
        case ErrorCode::DEGENERATE: return "DEGENERATE";
        case ErrorCode::C_OFF_HULL: return "C_OFF_HULL";
        case ErrorCode::NONCONVEX: return "NONCONVEX";
        case ErrorCode::UNSUPPORTED_MOMENT: return "UNSUPPORTED_MOMENT";
        case ErrorCode::P_OUT_OF_RANGE: return "P_OUT_OF_RANGE";
        case ErrorCode::H_ZERO: return "H_ZERO";
        case ErrorCode::COPLANAR_POINT: return "COPLANAR_POINT";
        case ErrorCode::DEGENERATE_POLYGON: return "DEGENERATE_POLYGON";
        case ErrorCode::NOT_SKEW: return "NOT_SKEW";
        case ErrorCode::NO_OVERLAP_SUPPORT: return "NO_OVERLAP_SUPPORT";
        case ErrorCode::MISSING_IRREDUCIBLE: return "MISSING_IRREDUCIBLE";
        case ErrorCode::P_POLE: return "P_POLE";
        case ErrorCode::DEGENERATE_TETRAHEDRON: return "DEGENERATE_TETRAHEDRON";
        case ErrorCode::SCALING_POINT_OFF_HULL: return "SCALING_POINT_OFF_HULL";
        case ErrorCode::BUDGET_EXCEEDED: return "BUDGET_EXCEEDED";
        case ErrorCode::UNKNOWN_SOLID: return "UNKNOWN_SOLID";
        case ErrorCode::INDEX_RANGE: return "INDEX_RANGE";
        case ErrorCode::ZERO_MEASURE: return "ZERO_MEASURE";
        case ErrorCode::TOLERANCE_NOT_MET: return "TOLERANCE_NOT_MET";
        case ErrorCode::BAD_INPUT: return "BAD_INPUT";
    }
    return "UNKNOWN";
}

}  // namespace meandist
