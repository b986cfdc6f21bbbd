#pragma once

#include <stdexcept>
#include <string>

namespace hardyr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HARDYR_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// fourier_core
HARDYR_DEFINE_ERROR(NonAnalyticError);
HARDYR_DEFINE_ERROR(OutsideDiskError);
HARDYR_DEFINE_ERROR(AliasingError);

// factorization
HARDYR_DEFINE_ERROR(ZeroOnBoundaryError);
HARDYR_DEFINE_ERROR(ZeroPolynomialError);
HARDYR_DEFINE_ERROR(NonpositiveModulusError);
HARDYR_DEFINE_ERROR(DegreeTooLargeError);

// interpolation
HARDYR_DEFINE_ERROR(NodeOnBoundaryError);
HARDYR_DEFINE_ERROR(DuplicateNodesError);
HARDYR_DEFINE_ERROR(NotSolvableError);
HARDYR_DEFINE_ERROR(NotContractionError);

// subspace_lab
HARDYR_DEFINE_ERROR(DegreeBudgetTooSmallError);
HARDYR_DEFINE_ERROR(DoublyInvariantError);

// cli
HARDYR_DEFINE_ERROR(SchemaError);

#undef HARDYR_DEFINE_ERROR

}  // namespace hardyr
