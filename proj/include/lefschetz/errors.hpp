#pragma once

#include <stdexcept>
#include <string>

namespace lefschetz {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LEFSCHETZ_ERROR(Name)                                        \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

LEFSCHETZ_ERROR(ParseError);
LEFSCHETZ_ERROR(NotHomogeneous);
LEFSCHETZ_ERROR(VariableMismatch);
LEFSCHETZ_ERROR(ArityMismatch);
LEFSCHETZ_ERROR(DegreeOutOfRange);
LEFSCHETZ_ERROR(DegreeTooSmall);
LEFSCHETZ_ERROR(DegreeMismatch);
LEFSCHETZ_ERROR(ZeroFormError);
LEFSCHETZ_ERROR(NonPolynomialResult);
LEFSCHETZ_ERROR(LinearlyDependent);
LEFSCHETZ_ERROR(InvalidParams);
LEFSCHETZ_ERROR(InvalidInput);
LEFSCHETZ_ERROR(IsConeError);
LEFSCHETZ_ERROR(NotPerazzoShape);
LEFSCHETZ_ERROR(PivotZero);
LEFSCHETZ_ERROR(RelationInvalid);
LEFSCHETZ_ERROR(LengthMismatch);
LEFSCHETZ_ERROR(NotSquare);
LEFSCHETZ_ERROR(SingularBasis);

#undef LEFSCHETZ_ERROR

}  // namespace lefschetz
