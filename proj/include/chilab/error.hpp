#pragma once

#include <stdexcept>
#include <string>

namespace chilab {

enum class ErrorKind {
  argument,      // bad value passed by caller
  range,         // vertex index out of range
  parse,         // malformed input text
  capacity,      // graph exceeds the compiled vertex cap
  precondition,  // operation precondition violated
  unsupported,   // parameter combination outside the supported domain
  structure,     // malformed certificate or record
  io,            // file system failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::range: return "range";
    case ErrorKind::parse: return "parse";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::structure: return "structure";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace chilab
