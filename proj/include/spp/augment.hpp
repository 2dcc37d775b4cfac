#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spp/base.hpp"
#include "spp/dependence.hpp"

namespace spp {

// Bipartite view of the nonzero pattern of D(B): base elements on one side,
// non-base twins on the other, each edge carrying the scalar d(w,b).
struct DependenceGraph {
  int cols = 0;
  // per column: (row index, coeff); row index = 2*row_pos + (kind==Bullet)
  std::vector<std::vector<std::pair<int, uint16_t>>> col_adj;
  // per row: (column, coeff)
  std::vector<std::vector<std::pair<int, uint16_t>>> row_adj;
};

DependenceGraph build_dependence_graph(const DependenceMatrix& dep);

// Augmenting sequence s, l_0, l_1, ..., l_2p, t: two base singletons and
// alternating lines, even-indexed entering the base, odd-indexed leaving it.
struct AugmentingPath {
  int s = -1;
  int t = -1;
  std::vector<int> lines;  // edge ids, path order; even index = added line
};

struct AugmentResult {
  bool augmented = false;
  FeasibleBase base;       // valid when augmented
  AugmentingPath path;     // valid when augmented
  int candidates_rejected = 0;  // search candidates that failed validation
};

struct AugmentOptions {
  bool verify = false;  // re-check the new base against the rank oracle
};

// Either returns a feasible base with one more line (and two fewer singletons)
// or certifies that |E[B]| is maximum. Augmenting-path search over the
// dependence graph: label propagation from the base singletons, alternating
// line steps with exact pivoting, blossom contraction when both parities meet.
AugmentResult augment_or_maximum(const Instance& inst, const Labeling& lab, const WSpace& space,
                                 const FeasibleBase& base, const DependenceMatrix& dep,
                                 const AugmentOptions& opts = {});

}  // namespace spp
