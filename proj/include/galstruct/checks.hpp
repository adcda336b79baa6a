#pragma once

// Named pass/fail/unknown outcomes collected by the verification pipelines.

#include <string>
#include <vector>

namespace galstruct {

enum class Status { Pass, Fail, Unknown };
const char* to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

class CheckList {
public:
  void add(std::string name, bool ok, std::string detail = "");
  void add_unknown(std::string name, std::string detail);
  void append(const CheckList& other, const std::string& prefix = "");
  void append_one(const Check& c) { items_.push_back(c); }
  const std::vector<Check>& items() const { return items_; }
  bool all_pass() const;
  bool any_fail() const;
  bool any_unknown() const;
  // First check with the given name, or nullptr.
  const Check* find(const std::string& name) const;

private:
  std::vector<Check> items_;
};

}  // namespace galstruct
