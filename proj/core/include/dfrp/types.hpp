#ifndef DFRP_TYPES_HPP
#define DFRP_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dfrp {

using VertexId = int32_t;
using EdgeId = int32_t;

// Exact path lengths in the perturbed unweighted pipeline. Encoded as
// hops * scale + accumulated random offsets; 128 bits leave ample headroom
// for n up to 2^13.
using Cost = unsigned __int128;

inline constexpr Cost kInfCost = ~Cost{0};

inline Cost sat_add(Cost a, Cost b) {
  if (a == kInfCost || b == kInfCost) return kInfCost;
  return a + b;
}

inline std::string cost_to_string(Cost c) {
  if (c == kInfCost) return "inf";
  if (c == 0) return "0";
  std::string out;
  while (c > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  return out;
}

// Weighted mode uses plain 64-bit integer lengths; weights may be negative.
using WCost = int64_t;

inline constexpr WCost kInfW = std::numeric_limits<WCost>::max() / 4;

inline WCost wsat_add(WCost a, WCost b) {
  if (a >= kInfW || b >= kInfW) return kInfW;
  return a + b;
}

enum class Direction { Forward, Reverse };

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateEdge : GraphError {
  using GraphError::GraphError;
};
struct IdOutOfRange : GraphError {
  using GraphError::GraphError;
};
struct SelfLoop : GraphError {
  using GraphError::GraphError;
};
struct WeightedModeUnsupported : GraphError {
  using GraphError::GraphError;
};
struct NegativeCycle : GraphError {
  using GraphError::GraphError;
};
struct Unreachable : GraphError {
  using GraphError::GraphError;
};
struct ParseError : GraphError {
  using GraphError::GraphError;
};
struct BadModelParams : GraphError {
  using GraphError::GraphError;
};

// Raised when the random perturbation fails to produce the unique/canonical
// path structure the combinatorial pipeline relies on; callers reseed.
struct PerturbationFailure : GraphError {
  using GraphError::GraphError;
};

}  // namespace dfrp

#endif
