#include "toricqh/errors.hpp"

namespace toricqh {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::RejectNonSimple: return "RejectNonSimple";
    case ErrorCode::RejectNonUnimodular: return "RejectNonUnimodular";
    case ErrorCode::RejectEmpty: return "RejectEmpty";
    case ErrorCode::RejectUnbounded: return "RejectUnbounded";
    case ErrorCode::RejectRedundantFacet: return "RejectRedundantFacet";
    case ErrorCode::RejectMalformed: return "RejectMalformed";
    case ErrorCode::NoBatyrevVector: return "NoBatyrevVector";
    case ErrorCode::NonUniqueBatyrevVector: return "NonUniqueBatyrevVector";
    case ErrorCode::FanoViolation: return "FanoViolation";
    case ErrorCode::NonGenericXi: return "NonGenericXi";
    case ErrorCode::NonHomogeneousGenerator: return "NonHomogeneousGenerator";
    case ErrorCode::InfiniteDimensional: return "InfiniteDimensional";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::CrosscheckFailed: return "CrosscheckFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "UnknownError";
}

bool is_input_error(ErrorCode code)
{
    return code == ErrorCode::ParseError || code == ErrorCode::SchemaError;
}

}  // namespace toricqh
