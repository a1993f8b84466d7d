#pragma once
#include <stdexcept>
#include <string>

namespace tilecoh {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// two 4-tori meeting in a rank-3 component, or two 2-tori in a rank-1 component
struct NonGenericArrangement : Error {
  using Error::Error;
};

struct EmptySeedError : Error {
  using Error::Error;
};

// a 2-torus stabilizer basis vector falls outside its 4-torus stabilizer
struct IncidenceBroken : Error {
  using Error::Error;
};

struct NegativeF : Error {
  using Error::Error;
};

struct InconsistentRanks : Error {
  using Error::Error;
};

struct GroupClosureError : Error {
  using Error::Error;
};

}  // namespace tilecoh
