#pragma once

#include <stdexcept>
#include <string>

namespace homspace {

// Bad input: malformed literals, ill-defined maps, mismatched groups.
// `code` is a stable machine-readable tag; `where` names the offending
// JSON path, flag, or argument when one is known.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message, std::string where = {})
      : std::runtime_error(message), code_(std::move(code)), where_(std::move(where)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& where() const noexcept { return where_; }

private:
  std::string code_;
  std::string where_;
};

// A computed result failed one of its own certificates. Always a bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace homspace
