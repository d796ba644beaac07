#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semirandom {

// Invalid arguments to a library operation; the message names the violated invariant.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy produced an illegal move or an unverifiable success claim.
class StrategyContractViolation : public std::logic_error {
 public:
  StrategyContractViolation(const std::string& what, std::uint64_t trial = 0)
      : std::logic_error(what), trial_(trial) {}
  std::uint64_t trial() const { return trial_; }

 private:
  std::uint64_t trial_;
};

}  // namespace semirandom
