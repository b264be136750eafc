#include "halg/report.hpp"

namespace halg {

void Report::add_failure(std::string check, std::vector<long> indices, std::string detail) {
  failures.push_back({std::move(check), std::move(indices), std::move(detail)});
}

void Report::note(std::string key, std::string value) {
  notes.emplace_back(std::move(key), std::move(value));
}

void Report::merge(const Report& other) {
  for (const auto& f : other.failures) {
    CheckItem item = f;
    if (!other.subject.empty()) item.check = other.subject + "/" + item.check;
    failures.push_back(std::move(item));
  }
  for (const auto& n : other.notes) notes.push_back(n);
}

std::string Report::summary() const {
  std::string out = subject.empty() ? "report" : subject;
  if (ok()) {
    out += ": ok";
    return out;
  }
  out += ": " + std::to_string(failures.size()) + " failure(s)";
  size_t shown = 0;
  for (const auto& f : failures) {
    if (shown++ >= 8) {
      out += "\n  ...";
      break;
    }
    out += "\n  " + f.check;
    if (!f.indices.empty()) {
      out += " at (";
      for (size_t i = 0; i < f.indices.size(); i++) {
        if (i) out += ",";
        out += std::to_string(f.indices[i]);
      }
      out += ")";
    }
    if (!f.detail.empty()) out += ": " + f.detail;
  }
  return out;
}

}  // namespace halg
