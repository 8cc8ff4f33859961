#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ggt {

// Domain error carrying a stable machine-readable code ("UnknownLetter",
// "NotVerifiedC16", ...) next to the human-readable message. The CLI maps
// these to structured error objects and exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& what) {
  throw Error(std::move(code), what);
}

}  // namespace ggt
