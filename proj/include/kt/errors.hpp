#pragma once

#include <stdexcept>
#include <string>

namespace kt {

// Error taxonomy shared by the library and the CLI exit-code contract:
//   ValidationError -> exit 2   (bad or inconsistent input)
//   OutOfScopeError -> exit 3   (well-formed input outside the supported scope)
//   InternalError   -> exit 4   (violated internal invariant; always a bug)

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class OutOfScopeError : public std::runtime_error {
 public:
  explicit OutOfScopeError(const std::string& what) : std::runtime_error(what) {}
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ValidationError(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace kt
