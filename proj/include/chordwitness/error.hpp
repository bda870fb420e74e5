#pragma once

#include <stdexcept>
#include <string>

namespace chordwitness {

// Error classes map one-to-one onto CLI exit codes (see tools/chordwitness.cpp).
enum class ErrorKind {
  invalid_input,        // malformed edge list, bad cycle, out-of-range id
  parse,                // graph6 / JSON decoding
  guard_exceeded,       // exponential search refused for the given size
  precondition,         // e.g. host graph not 3-connected
  extractor_incomplete, // no verified witness could be produced
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::parse: return "parse";
    case ErrorKind::guard_exceeded: return "guard_exceeded";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::extractor_incomplete: return "extractor_incomplete";
  }
  return "unknown";
}

}  // namespace chordwitness
