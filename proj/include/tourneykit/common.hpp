#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourneykit {

// Outcome of a search that is exhaustive only inside a documented regime.
// CertifiedNo is returned only when the search space was fully explored.
enum class Status { Found, CertifiedNo, Unknown };

std::string to_string(Status s);

// Library error carrying a stable machine-readable code ("DoublePair",
// "BadModulus", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(const std::string& code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

using VertexList = std::vector<int>;
using Arc = std::pair<int, int>;

}  // namespace tourneykit
