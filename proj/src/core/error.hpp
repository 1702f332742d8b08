#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skyrmech {

enum class ErrorCode {
  InvalidArgument,
  NonConvergedQuadrature,
  TruncationNotConverged,
  OutOfSlab,
  ModulusOutOfRange,
  SqueezeDiverges,
  InvalidRegimeInput,
  PlacementCollision,
  StepSizeUnderflow,
  TraceDrift,
  NotExcitationConserving,
  EnergyInBand,
  ConfigError,
  ScenarioFailure,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code carries the failure class
/// named by each operation's contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace skyrmech

#include <vector>

namespace skyrmech {

/// Non-fatal diagnostics (violated soft preconditions). Operations accept an
/// optional sink; a null sink drops the message.
using Warnings = std::vector<std::string>;

inline void warn(Warnings* sink, std::string msg) {
  if (sink) sink->push_back(std::move(msg));
}

}  // namespace skyrmech
