#pragma once

#include <stdexcept>
#include <string>

namespace isodual
{

//! Base class for all library errors.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

#define ISODUAL_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error                                                 \
    {                                                                         \
      public:                                                                 \
        explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
    }

ISODUAL_DEFINE_ERROR(DimensionMismatch);
ISODUAL_DEFINE_ERROR(NotAMember);
ISODUAL_DEFINE_ERROR(BadModulus);
ISODUAL_DEFINE_ERROR(InternalInconsistency);
ISODUAL_DEFINE_ERROR(CapExceeded);
ISODUAL_DEFINE_ERROR(ConvergenceFailure);
ISODUAL_DEFINE_ERROR(NotCoprime);
ISODUAL_DEFINE_ERROR(IntegralityViolation);
ISODUAL_DEFINE_ERROR(ShapeMismatch);
ISODUAL_DEFINE_ERROR(IncompleteTable);
ISODUAL_DEFINE_ERROR(FormatError);
ISODUAL_DEFINE_ERROR(IoError);

#undef ISODUAL_DEFINE_ERROR

} // namespace isodual
