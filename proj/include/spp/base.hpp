#pragma once

#include <string>
#include <vector>

#include "spp/instance.hpp"

namespace spp {

// A feasible base B: covered terminals T[B] plus base edges E[B] whose lines
// are in B, with component bookkeeping over the induced forest G[B].
// |T[B]| + 2|E[B]| = 2n - k always holds for a base.
struct FeasibleBase {
  std::vector<int> covered;     // T[B], ascending vertex ids
  std::vector<int> base_edges;  // E[B], ascending edge ids

  // Derived bookkeeping, rebuilt by refresh_components().
  std::vector<int> comp_of;                     // vertex -> component id
  int num_components = 0;
  std::vector<std::vector<int>> comp_terminals;  // per component, ascending
  std::vector<std::vector<int>> comp_covered;    // per component, ascending
  std::vector<char> covered_mask;                // by vertex

  int num_lines() const { return static_cast<int>(base_edges.size()); }
  int num_singletons() const { return static_cast<int>(covered.size()); }

  void refresh_components(const Instance& inst);
};

// Multi-source traversal seeded at all terminals: a spanning forest of k trees,
// one terminal each, together with all singletons. Requires a connected
// instance with at least one terminal.
FeasibleBase initialize_base(const Instance& inst);

// Conditions (a)-(c): every component of the induced subgraph is a tree, has
// at most one terminal per block, and |Z∩T| + |Z∩T[U]| <= 2.
bool is_feasible_independent(const Instance& inst, const std::vector<int>& covered_terminals,
                             const std::vector<int>& edge_set, std::string* violation = nullptr);

// Adds (d) every component holds a terminal and (e) |Z∩T| + |Z∩T[U]| = 2.
bool is_feasible_base(const Instance& inst, const std::vector<int>& covered_terminals,
                      const std::vector<int>& edge_set, std::string* violation = nullptr);

// Builds a FeasibleBase from raw sets, validating it. Throws on failure.
FeasibleBase make_base(const Instance& inst, std::vector<int> covered_terminals,
                       std::vector<int> edge_set);

// B' = B minus (remove_terminals + remove_lines) plus add_lines, with
// components recomputed. Preconditions: removals are in B, additions are not.
// Throws if the result is not a feasible base.
FeasibleBase apply_symmetric_difference(const Instance& inst, const FeasibleBase& base,
                                        const std::vector<int>& add_lines,
                                        const std::vector<int>& remove_terminals,
                                        const std::vector<int>& remove_lines);

// One-line debug dump, stable ordering: "B: terminals=... edges=...".
std::string dump(const Instance& inst, const FeasibleBase& base);

}  // namespace spp
