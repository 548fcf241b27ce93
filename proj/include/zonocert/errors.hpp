#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zonocert {

enum class ErrorKind {
  InvalidInput,
  RankMismatch,
  NotSquare,
  Singular,
  DegenerateSpan,
  NotADicing,
  RepresentationCheckFailed,
  NonIntegerEntries,
  ZeroDirection,
  DimensionTooLarge,
  DimensionTooSmall,
  DimensionMismatch,
  SpanDeficient,
  NotPositiveDefinite,
  NotInLattice,
  Mismatch,
  BasisCheckFailed,
  EnumerationInsufficient,
  DualityViolation,
  CertificateInvalid,
};

std::string_view to_string(ErrorKind kind);

/// Base of every domain error raised by the library.
///
/// `stage` names the pipeline step that raised the error; it is empty until
/// the certification pipeline or the CLI tags it.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  void set_stage(std::string stage) { stage_ = std::move(stage); }

private:
  ErrorKind kind_;
  std::string stage_;
};

} // namespace zonocert
