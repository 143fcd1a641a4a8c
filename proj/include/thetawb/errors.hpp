#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace thetawb {

/// An internal consistency check failed: two routes disagreed or a
/// computed value contradicts an identity that must hold.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical rank or precision decision could not be certified.
class NumericIndeterminate : public std::runtime_error {
 public:
  NumericIndeterminate(const std::string& what, std::vector<double> spectrum = {})
      : std::runtime_error(what), spectrum_(std::move(spectrum)) {}

  const std::vector<double>& spectrum() const { return spectrum_; }

 private:
  std::vector<double> spectrum_;
};

}  // namespace thetawb
