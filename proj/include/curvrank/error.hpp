#pragma once

#include <stdexcept>
#include <string>

namespace curvrank {

/// Failure classes shared by the whole library. Expected alternative outcomes
/// (a vector not lying in a span, a sampling verdict) are modeled with
/// optional/variant return types instead and never throw.
enum class Errc {
  DimensionMismatch,
  AmbientMismatch,
  NonSymmetric,
  NotSkew,
  DependentBasis,
  NotSpacelike,
  Degenerate,
  UnsupportedRank,
  NotSelfAdjoint,
  NotAdmissible,
  DomainTooSmall,
  NotRankTwo,
  DegenerateLine,
  SpanningFamilyFailed,
  SpanSolveFailed,
  VerificationFailed,
  DegeneratePoint,
  BadParams,
  Unsatisfiable,
  ParseError,
  IoError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::NonSymmetric: return "NonSymmetric";
    case Errc::NotSkew: return "NotSkew";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::NotSpacelike: return "NotSpacelike";
    case Errc::Degenerate: return "Degenerate";
    case Errc::UnsupportedRank: return "UnsupportedRank";
    case Errc::NotSelfAdjoint: return "NotSelfAdjoint";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::DomainTooSmall: return "DomainTooSmall";
    case Errc::NotRankTwo: return "NotRankTwo";
    case Errc::DegenerateLine: return "DegenerateLine";
    case Errc::SpanningFamilyFailed: return "SpanningFamilyFailed";
    case Errc::SpanSolveFailed: return "SpanSolveFailed";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::DegeneratePoint: return "DegeneratePoint";
    case Errc::BadParams: return "BadParams";
    case Errc::Unsatisfiable: return "Unsatisfiable";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

/// Exception carrying a machine-readable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace curvrank
