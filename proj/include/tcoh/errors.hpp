#pragma once

#include <stdexcept>
#include <string>

namespace tcoh {

enum class ErrorCode {
  Input = 1,         // malformed or inconsistent input
  Hypothesis = 2,    // a mathematical precondition does not hold
  Undetermined = 3,  // answer lies beyond a computed bound
  Internal = 4,      // consistency failure inside the engine
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorCode::Input, what) {}
};

class HypothesisError : public Error {
 public:
  explicit HypothesisError(const std::string& what) : Error(ErrorCode::Hypothesis, what) {}
};

class UndeterminedError : public Error {
 public:
  explicit UndeterminedError(const std::string& what) : Error(ErrorCode::Undetermined, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCode::Internal, what) {}
};

}  // namespace tcoh
