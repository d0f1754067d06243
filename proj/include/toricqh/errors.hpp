#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricqh {

/// Failure categories surfaced by the library. The CLI maps these onto exit
/// codes: input/usage problems exit 2, mathematical rejections exit 1.
enum class ErrorCode {
    RejectNonSimple,
    RejectNonUnimodular,
    RejectEmpty,
    RejectUnbounded,
    RejectRedundantFacet,
    RejectMalformed,
    NoBatyrevVector,
    NonUniqueBatyrevVector,
    FanoViolation,
    NonGenericXi,
    NonHomogeneousGenerator,
    InfiniteDimensional,
    NotInvertible,
    CrosscheckFailed,
    ParseError,
    SchemaError,
};

std::string_view error_name(ErrorCode code);

/// True for errors caused by malformed input rather than by the mathematics.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace toricqh
