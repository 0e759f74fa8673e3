#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace uqc {

enum class ErrorKind {
  InvalidInput,
  NumericalFailure,
  NotSkewHermitian,
  NotTraceless,
  DesignatedNotDiagonal,
  DegenerateSpectrum,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. Validation errors carry the index of
// the offending generator (0-based) when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> generator = std::nullopt)
      : std::runtime_error(message), kind_(kind), generator_(generator) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> generator() const noexcept { return generator_; }

  // Input-side errors map to CLI exit code 2; numerical failures to 3.
  bool is_input_error() const noexcept { return kind_ != ErrorKind::NumericalFailure; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> generator_;
};

}  // namespace uqc
