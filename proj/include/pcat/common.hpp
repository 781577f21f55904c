#pragma once

#include <stdexcept>
#include <string>

namespace pcat {

// Kernels taking an Exec run their OpenMP loops only for Exec::parallel.
enum class Exec { serial, parallel };

enum class Verdict { yes, no, unknown };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "unknown";
  }
}

// A bounded computation ran out of room before reaching an answer.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcat
