#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

enum class Errc {
  EdgeOutOfRange,
  SelfLoop,
  DuplicateEdge,
  WrongEdgeCount,
  Disconnected,
  VertexOutOfRange,
  MalformedCode,
  MalformedTrace,
  MalformedSequence,
  MalformedBranchSet,
  RankOutOfRange,
  SizeLimitExceeded,
  Format,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::EdgeOutOfRange: return "EdgeOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::WrongEdgeCount: return "WrongEdgeCount";
    case Errc::Disconnected: return "Disconnected";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::MalformedCode: return "MalformedCode";
    case Errc::MalformedTrace: return "MalformedTrace";
    case Errc::MalformedSequence: return "MalformedSequence";
    case Errc::MalformedBranchSet: return "MalformedBranchSet";
    case Errc::RankOutOfRange: return "RankOutOfRange";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::Format: return "FormatError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cayley
