#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace balines {

enum class ErrorCode {
  InvalidInput,
  OddPointCount,
  CollinearWitness,
  DegenerateInput,
  FailsToSeparate,
  BadParams,
  GenerationExhausted,
  MixedColors,
  InsufficientBorder,
  ProofGap,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace balines
