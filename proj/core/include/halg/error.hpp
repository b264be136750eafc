#pragma once

#include <stdexcept>
#include <string>

namespace halg {

// Domain errors: zero denominators, conductor mismatches, missing roots,
// violated preconditions. Structural verification failures are not errors;
// they are returned in Report objects.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace halg
