#pragma once

#include <stdexcept>

namespace dsgen {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrameMismatch : Error { using Error::Error; };
struct JointLimitViolation : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct BehindCamera : Error { using Error::Error; };
struct DegenerateRays : Error { using Error::Error; };
struct NonRectifiedRig : Error { using Error::Error; };
struct EmptyIntersection : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct DatasetError : Error { using Error::Error; };

}  // namespace dsgen
