#pragma once

#include <stdexcept>
#include <string>

namespace dynmatch {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  WouldCreateCycle,
  NoSuchEdge,
  NotIncident,
  CrossComponent,
  TooLarge,
  TooManyConstraints,
  ParseError,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::WouldCreateCycle: return "WouldCreateCycle";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NotIncident: return "NotIncident";
    case Errc::CrossComponent: return "CrossComponent";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooManyConstraints: return "TooManyConstraints";
    case Errc::ParseError: return "ParseError";
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

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dynmatch
