#pragma once

#include <stdexcept>

namespace msv {

// A request exceeded a configured resource cap (enumeration limit, minor cap).
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check or integrity re-verification failed (oracle mismatch,
// corrupted cache, witness that does not analyze to its claimed value).
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace msv
