#pragma once

#include <stdexcept>
#include <string>

namespace galstruct {

// Every failure raised by the library carries a stable kind tag
// (NotAGroup, GroupMismatch, NotACocycle, ...) plus a human message.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

}  // namespace galstruct
