#pragma once

#include <stdexcept>
#include <string>

namespace spincq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct NonGenericPolarization : Error { using Error::Error; };
struct SpinCIntegrality : Error { using Error::Error; };
struct InfiniteSupport : Error { using Error::Error; };
struct UnhandledComponentGeometry : Error { using Error::Error; };
struct MissingAncestorData : Error { using Error::Error; };
struct OnWall : Error { using Error::Error; };
struct UnknownDescriptor : Error { using Error::Error; };

}  // namespace spincq
