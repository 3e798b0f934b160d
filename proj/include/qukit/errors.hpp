#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qukit {

/// Error categories surfaced by every module. The names returned by
/// `errc_name` are the stable identifiers echoed by the C API and the CLI.
enum class Errc {
  InvalidArgument,
  ParseError,
  BaseMismatch,
  NotRepresentable,
  CannotAlign,
  DimensionMismatch,
  NotCauchy,
  InvalidSpacing,
  IndexOutOfRange,
  UnknownFrame,
  LatticeTooLarge,
  LatticeMismatch,
  ImageMismatch,
  NotNormalized,
  ConfigError,
};

constexpr std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::CannotAlign: return "CannotAlign";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotCauchy: return "NotCauchy";
    case Errc::InvalidSpacing: return "InvalidSpacing";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnknownFrame: return "UnknownFrame";
    case Errc::LatticeTooLarge: return "LatticeTooLarge";
    case Errc::LatticeMismatch: return "LatticeMismatch";
    case Errc::ImageMismatch: return "ImageMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace qukit
