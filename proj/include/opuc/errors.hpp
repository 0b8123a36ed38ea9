#ifndef OPUC_ERRORS_HPP
#define OPUC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace opuc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define OPUC_DEFINE_ERROR(NAME)                                        \
    struct NAME : Error {                                              \
        explicit NAME(const std::string& msg) : Error(#NAME ": " + msg) {} \
    }

OPUC_DEFINE_ERROR(DegreeMismatch);
OPUC_DEFINE_ERROR(ParameterPole);
OPUC_DEFINE_ERROR(GammaPole);
OPUC_DEFINE_ERROR(SingularPoint);
OPUC_DEFINE_ERROR(GridOnSingularity);
OPUC_DEFINE_ERROR(QuadratureFailure);
OPUC_DEFINE_ERROR(MomentRangeExceeded);
OPUC_DEFINE_ERROR(NumericalBreakdown);
OPUC_DEFINE_ERROR(NoClosedForm);
OPUC_DEFINE_ERROR(OutOfTheoremRange);
OPUC_DEFINE_ERROR(UnknownRelation);
OPUC_DEFINE_ERROR(OutOfRange);
OPUC_DEFINE_ERROR(UnsolvableStep);
OPUC_DEFINE_ERROR(Infeasible);
OPUC_DEFINE_ERROR(InvalidParameter);

#undef OPUC_DEFINE_ERROR

}  // namespace opuc

#endif
