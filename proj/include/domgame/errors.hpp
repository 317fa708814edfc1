#pragma once

#include <stdexcept>
#include <string>

namespace domgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { Malformed, OutOfRange, Loop, Duplicate };

  ParseError(Kind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

// Vertex-edge diameter requested on a disconnected or edgeless graph.
class UndefinedDiameterError : public Error {
 public:
  using Error::Error;
};

class IllegalMoveError : public Error {
 public:
  using Error::Error;
};

class SizeCapError : public Error {
 public:
  SizeCapError(const std::string& what, long long cap) : Error(what), cap_(cap) {}
  long long cap() const { return cap_; }

 private:
  long long cap_;
};

// A move filter removed every legal move from a nonterminal position.
class FilterInfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace domgame
