#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wbirkhoff {

// Caller violated a precondition (bad argument, bad config).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The numerics could not produce a value (singular derivative, divergence...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Warning {
  std::string code;     // short machine tag, e.g. "ambiguous-lift"
  std::string message;  // human readable detail
};

using WarningSink = std::vector<Warning>;

inline void emit(WarningSink* sink, std::string code, std::string message) {
  if (sink) sink->push_back({std::move(code), std::move(message)});
}

}  // namespace wbirkhoff
