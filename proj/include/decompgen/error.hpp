/*
   Copyright 2026 The decompgen Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DECOMPGEN_ERROR_HPP
#define DECOMPGEN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace decompgen {

enum class ErrorCode {
    // validation
    ParseError,
    DimensionMismatch,
    Inconsistent,
    NotSquare,
    NotPrime,
    NotAssociative,
    NoUnit,
    BadTraceForm,
    NotAGroup,
    UnitInIdeal,
    // unsupported scope
    UnsupportedRing,
    UnsupportedResidueField,
    UnsupportedRestriction,
    UnsupportedFactorization,
    FactorBudgetExceeded,
    // mathematical preconditions
    NotSplit,
    NotReducible,
    NotSymmetric,
    NotSemisimpleGeneric,
    ChopBudgetExceeded,
    // internal consistency
    RadicalNotNilpotent,
    AttractorEscapesBase,
    NoIntegerSolution,
    InternalError,
};

inline std::string_view error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::Inconsistent: return "Inconsistent";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoUnit: return "NoUnit";
        case ErrorCode::BadTraceForm: return "BadTraceForm";
        case ErrorCode::NotAGroup: return "NotAGroup";
        case ErrorCode::UnitInIdeal: return "UnitInIdeal";
        case ErrorCode::UnsupportedRing: return "UnsupportedRing";
        case ErrorCode::UnsupportedResidueField: return "UnsupportedResidueField";
        case ErrorCode::UnsupportedRestriction: return "UnsupportedRestriction";
        case ErrorCode::UnsupportedFactorization: return "UnsupportedFactorization";
        case ErrorCode::FactorBudgetExceeded: return "FactorBudgetExceeded";
        case ErrorCode::NotSplit: return "NotSplit";
        case ErrorCode::NotReducible: return "NotReducible";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotSemisimpleGeneric: return "NotSemisimpleGeneric";
        case ErrorCode::ChopBudgetExceeded: return "ChopBudgetExceeded";
        case ErrorCode::RadicalNotNilpotent: return "RadicalNotNilpotent";
        case ErrorCode::AttractorEscapesBase: return "AttractorEscapesBase";
        case ErrorCode::NoIntegerSolution: return "NoIntegerSolution";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

/// Coarse classification used for CLI exit codes.
enum class ErrorKind { Validation, Unsupported, Precondition, Internal };

inline ErrorKind error_kind(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::DimensionMismatch:
        case ErrorCode::Inconsistent:
        case ErrorCode::NotSquare:
        case ErrorCode::NotPrime:
        case ErrorCode::NotAssociative:
        case ErrorCode::NoUnit:
        case ErrorCode::BadTraceForm:
        case ErrorCode::NotAGroup:
        case ErrorCode::UnitInIdeal:
            return ErrorKind::Validation;
        case ErrorCode::UnsupportedRing:
        case ErrorCode::UnsupportedResidueField:
        case ErrorCode::UnsupportedRestriction:
        case ErrorCode::UnsupportedFactorization:
        case ErrorCode::FactorBudgetExceeded:
            return ErrorKind::Unsupported;
        case ErrorCode::NotSplit:
        case ErrorCode::NotReducible:
        case ErrorCode::NotSymmetric:
        case ErrorCode::NotSemisimpleGeneric:
        case ErrorCode::ChopBudgetExceeded:
            return ErrorKind::Precondition;
        default:
            return ErrorKind::Internal;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    ErrorKind kind() const noexcept { return error_kind(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) throw Error(code, what);
}

}  // namespace decompgen

#endif  // DECOMPGEN_ERROR_HPP
