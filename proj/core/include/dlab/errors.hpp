#pragma once

#include <stdexcept>
#include <string>

namespace dlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DLAB_DEFINE_ERROR(Name)      \
  struct Name : Error {              \
    using Error::Error;              \
  }

DLAB_DEFINE_ERROR(TieDetected);
DLAB_DEFINE_ERROR(EmptyCommittee);
DLAB_DEFINE_ERROR(GenerationFailed);
DLAB_DEFINE_ERROR(InvalidId);
DLAB_DEFINE_ERROR(InactiveCandidate);
DLAB_DEFINE_ERROR(ProbeUnavailable);
DLAB_DEFINE_ERROR(NotSinglePeaked);
DLAB_DEFINE_ERROR(NoActiveCandidate);
DLAB_DEFINE_ERROR(MissingGap);
DLAB_DEFINE_ERROR(TooLarge);
DLAB_DEFINE_ERROR(KTooLarge);
DLAB_DEFINE_ERROR(KOutOfRange);
DLAB_DEFINE_ERROR(TooFewActive);
DLAB_DEFINE_ERROR(WrongM);
DLAB_DEFINE_ERROR(IntervalTooSmall);
DLAB_DEFINE_ERROR(BadParams);
DLAB_DEFINE_ERROR(UnknownName);
DLAB_DEFINE_ERROR(BadInstance);
DLAB_DEFINE_ERROR(ShapeMismatch);
DLAB_DEFINE_ERROR(IoError);
DLAB_DEFINE_ERROR(ReplayMismatch);

#undef DLAB_DEFINE_ERROR

}  // namespace dlab
