#include "galstruct/checks.hpp"

#include <algorithm>

namespace galstruct {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
  }
  return "fail";
}

void CheckList::add(std::string name, bool ok, std::string detail) {
  items_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)});
}

void CheckList::add_unknown(std::string name, std::string detail) {
  items_.push_back({std::move(name), Status::Unknown, std::move(detail)});
}

void CheckList::append(const CheckList& other, const std::string& prefix) {
  for (const auto& c : other.items_) items_.push_back({prefix + c.name, c.status, c.detail});
}

bool CheckList::all_pass() const {
  return std::all_of(items_.begin(), items_.end(), [](const Check& c) { return c.status == Status::Pass; });
}

bool CheckList::any_fail() const {
  return std::any_of(items_.begin(), items_.end(), [](const Check& c) { return c.status == Status::Fail; });
}

bool CheckList::any_unknown() const {
  return std::any_of(items_.begin(), items_.end(), [](const Check& c) { return c.status == Status::Unknown; });
}

const Check* CheckList::find(const std::string& name) const {
  for (const auto& c : items_)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace galstruct
