#pragma once

#include <string>
#include <utility>
#include <vector>

namespace halg {

// Structural verification result: every failed instance is recorded with the
// offending indices. Empty failure list means the checked axioms hold.
struct CheckItem {
  std::string check;
  std::vector<long> indices;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<CheckItem> failures;
  std::vector<std::pair<std::string, std::string>> notes;  // stable key/value facts

  bool ok() const { return failures.empty(); }
  void add_failure(std::string check, std::vector<long> indices = {}, std::string detail = "");
  void note(std::string key, std::string value);
  void merge(const Report& other);  // prefixes the other subject on failed checks
  std::string summary() const;
};

}  // namespace halg
