#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace quadlab {

enum class ErrorCode {
  PoleHit,
  Unsupported,
  EscapedDuringSample,
  NoCycle,
  BracketFailure,
  NoSignChange,
  CriticalPoint,
  DerivativeVanished,
  DegenerateSet,
  NotACycle,
  NoJuliaPixels,
  PreconditionViolated,
  Inconclusive,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain failure raised by the analysis layers. The CLI maps these to exit code 1.
class DynamicsError : public std::runtime_error {
 public:
  DynamicsError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Value-or-error return for the hot evaluation paths, where a pole is an
/// ordinary outcome rather than an exceptional one.
template <class T>
class Expected {
 public:
  Expected(T value) : state_(std::move(value)) {}
  Expected(ErrorCode code) : state_(code) {}

  bool has_value() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const {
    if (!has_value()) throw DynamicsError(error(), "Expected::value on error");
    return std::get<T>(state_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }
  ErrorCode error() const { return std::get<ErrorCode>(state_); }

 private:
  std::variant<T, ErrorCode> state_;
};

}  // namespace quadlab
