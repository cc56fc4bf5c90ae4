#pragma once

#include <stdexcept>
#include <string>

namespace growthlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GROWTHLAB_ERROR(Name)                      \
  struct Name : Error {                            \
    explicit Name(const std::string& what)         \
        : Error(std::string(#Name ": ") + what) {} \
  }

GROWTHLAB_ERROR(InvalidWord);
GROWTHLAB_ERROR(AmbiguousWord);
GROWTHLAB_ERROR(AlphabetMismatch);
GROWTHLAB_ERROR(UnknownExample);
GROWTHLAB_ERROR(ResourceLimit);
GROWTHLAB_ERROR(TruncationBoundary);
GROWTHLAB_ERROR(NotFound);
GROWTHLAB_ERROR(Unsatisfiable);
GROWTHLAB_ERROR(NoSignChange);
GROWTHLAB_ERROR(DomainError);
GROWTHLAB_ERROR(InvariantViolation);

#undef GROWTHLAB_ERROR

}  // namespace growthlab
