#pragma once

#include <string>
#include <vector>

namespace yendo {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string detail;

  bool operator==(const Check&) const = default;
};

/// Outcome of a verification routine. Failures are entries, never exceptions.
struct Report {
  std::string subject;
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {});
  void skip(std::string name, std::string detail);
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;

  bool operator==(const Report&) const = default;
};

}  // namespace yendo
