#pragma once

#include <stdexcept>
#include <string>

namespace grascurve {

// Base for all structured failures; `code()` is the stable machine-readable tag
// that the CLI surfaces in JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GRASCURVE_DEFINE_ERROR(Name)                                \
    struct Name : Error {                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

GRASCURVE_DEFINE_ERROR(FieldMismatch);
GRASCURVE_DEFINE_ERROR(AmbientMismatch);
GRASCURVE_DEFINE_ERROR(DimensionMismatch);
GRASCURVE_DEFINE_ERROR(NotDecomposable);
GRASCURVE_DEFINE_ERROR(DegenerateFamily);
GRASCURVE_DEFINE_ERROR(OutOfScopeDegree);
GRASCURVE_DEFINE_ERROR(WrongDegree);
GRASCURVE_DEFINE_ERROR(DegenerateConic);
GRASCURVE_DEFINE_ERROR(NotLocallyFree);
GRASCURVE_DEFINE_ERROR(LineNotInSection);
GRASCURVE_DEFINE_ERROR(NonGenericEnvelope);
GRASCURVE_DEFINE_ERROR(UnstableInterpolation);
GRASCURVE_DEFINE_ERROR(BudgetExceeded);
GRASCURVE_DEFINE_ERROR(BadReduction);
GRASCURVE_DEFINE_ERROR(ParseError);

#undef GRASCURVE_DEFINE_ERROR

}  // namespace grascurve
