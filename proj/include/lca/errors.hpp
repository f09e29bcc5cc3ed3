#pragma once

#include <stdexcept>
#include <string>

namespace lca {

enum class ErrorCode {
    RANK_MISMATCH,
    VARIABLE_CLASH,
    NOT_ANTISYMMETRIC,
    JACOBI_FAILS,
    MISSING_TAU,
    NOT_CURRENT_ALGEBRA,
    CENTER_NONZERO,
    NO_SOLUTION,
    NOT_TRIPLEHOM,
    SPLIT_VERIFICATION_FAILED,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::RANK_MISMATCH: return "RANK_MISMATCH";
        case ErrorCode::VARIABLE_CLASH: return "VARIABLE_CLASH";
        case ErrorCode::NOT_ANTISYMMETRIC: return "NOT_ANTISYMMETRIC";
        case ErrorCode::JACOBI_FAILS: return "JACOBI_FAILS";
        case ErrorCode::MISSING_TAU: return "MISSING_TAU";
        case ErrorCode::NOT_CURRENT_ALGEBRA: return "NOT_CURRENT_ALGEBRA";
        case ErrorCode::CENTER_NONZERO: return "CENTER_NONZERO";
        case ErrorCode::NO_SOLUTION: return "NO_SOLUTION";
        case ErrorCode::NOT_TRIPLEHOM: return "NOT_TRIPLEHOM";
        case ErrorCode::SPLIT_VERIFICATION_FAILED: return "SPLIT_VERIFICATION_FAILED";
    }
    return "UNKNOWN";
}

}  // namespace lca
