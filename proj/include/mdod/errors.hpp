#pragma once

#include <stdexcept>
#include <string>

namespace mdod {

// Domain error hierarchy. Each type corresponds to one failure contract of
// the public API; callers that want to distinguish catch the concrete type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MDOD_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                         \
        explicit Name(const std::string& msg) : Error(msg) {}     \
    }

MDOD_DEFINE_ERROR(AmbiguousDoppler);
MDOD_DEFINE_ERROR(LengthMismatch);
MDOD_DEFINE_ERROR(DegenerateSignature);
MDOD_DEFINE_ERROR(NotPd);
MDOD_DEFINE_ERROR(NotSpd);
MDOD_DEFINE_ERROR(EmptySet);
MDOD_DEFINE_ERROR(RankDeficient);
MDOD_DEFINE_ERROR(Singular);
MDOD_DEFINE_ERROR(ZeroVariance);
MDOD_DEFINE_ERROR(ShapeMismatch);
MDOD_DEFINE_ERROR(GraphFreed);
MDOD_DEFINE_ERROR(EmptyNormalSet);
MDOD_DEFINE_ERROR(MissingCenter);
MDOD_DEFINE_ERROR(NonFiniteLoss);
MDOD_DEFINE_ERROR(InvalidCombination);
MDOD_DEFINE_ERROR(TooFewSamples);
MDOD_DEFINE_ERROR(DuplicateRun);
MDOD_DEFINE_ERROR(IoError);
MDOD_DEFINE_ERROR(InvalidConfig);

#undef MDOD_DEFINE_ERROR

}  // namespace mdod
