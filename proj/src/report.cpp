#include "yendo/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace yendo {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks.push_back({std::move(name), Status::skipped, std::move(detail)});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.status, c.detail});
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; }));
}

}  // namespace yendo
