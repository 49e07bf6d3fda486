#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mark {

enum class Errc {
  EmptyOrSingleton,
  NegativeProbability,
  SumMismatch,
  IndexOutOfRange,
  BadWidth,
  BadWindow,
  BadOrder,
  BadAlpha,
  DegenerateScale,
  DuplicateLabel,
  NoCandidates,
  LabelMismatch,
  LeafNode,
  ProbabilityOverflow,
  BadLevel,
  BadGroup,
  NoAxis,
  InconsistentCandidates,
  NoProgress,
  TooShort,
  IncompleteSpan,
  BadMark,
  NoOverlap,
  BadDensity,
  UnknownNode,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyOrSingleton: return "EmptyOrSingleton";
    case Errc::NegativeProbability: return "NegativeProbability";
    case Errc::SumMismatch: return "SumMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BadWidth: return "BadWidth";
    case Errc::BadWindow: return "BadWindow";
    case Errc::BadOrder: return "BadOrder";
    case Errc::BadAlpha: return "BadAlpha";
    case Errc::DegenerateScale: return "DegenerateScale";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::NoCandidates: return "NoCandidates";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::LeafNode: return "LeafNode";
    case Errc::ProbabilityOverflow: return "ProbabilityOverflow";
    case Errc::BadLevel: return "BadLevel";
    case Errc::BadGroup: return "BadGroup";
    case Errc::NoAxis: return "NoAxis";
    case Errc::InconsistentCandidates: return "InconsistentCandidates";
    case Errc::NoProgress: return "NoProgress";
    case Errc::TooShort: return "TooShort";
    case Errc::IncompleteSpan: return "IncompleteSpan";
    case Errc::BadMark: return "BadMark";
    case Errc::NoOverlap: return "NoOverlap";
    case Errc::BadDensity: return "BadDensity";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every validation failure in the library surfaces as this exception.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mark
