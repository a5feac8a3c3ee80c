#ifndef HBGROWTH_ERROR_HPP_
#define HBGROWTH_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace hbg {

// Domain error: a precondition of an operation was violated.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Report-style validation outcome: empty violation list means ok.
struct ValidityReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void flag(std::string message) { violations.push_back(std::move(message)); }
};

}  // namespace hbg

#endif  // HBGROWTH_ERROR_HPP_
