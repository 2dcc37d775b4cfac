#pragma once

#include <optional>
#include <stdexcept>

#include "spp/instance.hpp"

namespace spp {

// Thrown when an instance exceeds the oracle's exhaustive-search caps.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PackingOracleResult {
  int p = 0;
  Packing packing;  // one maximum witness
};

// Exact maximum S-path packing by exhaustive search: enumerate the vertex sets
// of S-paths, then a maximum disjoint selection over bitmasks. Exponential;
// refuses instances with more than vertex_cap vertices.
PackingOracleResult brute_force_packing(const Instance& inst, int vertex_cap = 10);

// Exact maximum number of lines over all feasible bases, by enumerating edge
// subsets with an incremental independence check and testing base completion
// with the rank oracle. Returns nullopt when no feasible base exists (e.g. a
// component without terminals). Refuses instances beyond the caps.
std::optional<int> brute_force_max_lines(const Instance& inst, int vertex_cap = 7,
                                         int edge_cap = 10);

}  // namespace spp
